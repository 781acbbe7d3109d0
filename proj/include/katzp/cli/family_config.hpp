#pragma once

#include <fstream>
#include <string>

#include "katzp/exactcore/json_io.hpp"
#include "katzp/gaussmanin/family.hpp"

namespace katzp::cli {

using nlohmann::json;

/// f as a little-endian array over powers of x whose entries are
/// polynomials (or rational functions) in t.
inline RFPoly f_from_json(const json& j, std::uint32_t p) {
  if (!j.is_array()) fail(ErrorCode::InvalidInput, "f must be an array of coefficients in t, lowest power of x first");
  const FunctionField fld(p);
  std::vector<RationalFunction> c;
  for (const auto& x : j) c.push_back(json_io::rf_from_json(x, p));
  return RFPoly(fld, std::move(c));
}

inline json to_json(const RFPoly& f) {
  json a = json::array();
  for (const auto& c : f.coeffs()) a.push_back(c.is_polynomial() ? json_io::to_json(c.num()) : json_io::to_json(c));
  return a;
}

inline json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::InvalidInput, what + " is not valid JSON: " + e.what());
  }
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidInput, "cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_json_text(text, path);
}

/// {"p": 5, "family": "legendre"} or {"p": 7, "f": [[...], ...]}.
inline HyperellipticFamily family_from_json(const json& cfg, std::uint32_t p) {
  if (cfg.contains("family") && cfg.contains("f")) fail(ErrorCode::InvalidInput, "give either family or f, not both");
  if (cfg.contains("f")) return HyperellipticFamily("custom", f_from_json(cfg.at("f"), p));
  if (!cfg.contains("family") || !cfg.at("family").is_string())
    fail(ErrorCode::InvalidInput, "family config needs \"family\" (string) or \"f\"");
  return HyperellipticFamily::named(cfg.at("family").get<std::string>(), p);
}

}  // namespace katzp::cli
