#pragma once

// JSON encoding shared by every module and the CLI:
//   polynomial        -> little-endian array of integer coefficients
//   rational function -> {"num": [...], "den": [...]}
//   matrix            -> row-major nested arrays of rational functions

#include <json.hpp>

#include "katzp/exactcore/matrix.hpp"

namespace katzp::json_io {

using nlohmann::json;

inline json to_json(const Poly& f) {
  json a = json::array();
  for (const auto& c : f.coeffs()) a.push_back(c.value);
  return a;
}

inline Poly poly_from_json(const json& j, std::uint32_t p) {
  if (!j.is_array()) fail(ErrorCode::InvalidInput, "polynomial must be an array of integers");
  std::vector<FpElement> c;
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail(ErrorCode::InvalidInput, "polynomial coefficient must be an integer");
    c.emplace_back(x.get<std::int64_t>(), p);
  }
  return Poly(PrimeField(p), std::move(c));
}

inline json to_json(const RationalFunction& r) { return {{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

/// Accepts {"num", "den"} objects, or a bare coefficient array for a polynomial.
inline RationalFunction rf_from_json(const json& j, std::uint32_t p) {
  if (j.is_array()) return RationalFunction(poly_from_json(j, p));
  if (j.is_number_integer()) return RationalFunction::from_int(p, j.get<std::int64_t>());
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    fail(ErrorCode::InvalidInput, "rational function must be {\"num\": [...], \"den\": [...]}");
  return RationalFunction(poly_from_json(j.at("num"), p), poly_from_json(j.at("den"), p));
}

inline json to_json(const VectorRF& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline json to_json(const MatrixRF& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return rows;
}

inline MatrixRF matrix_from_json(const json& j, std::uint32_t p) {
  if (!j.is_array()) fail(ErrorCode::InvalidInput, "matrix must be an array of rows");
  std::vector<VectorRF> rows;
  for (const auto& r : j) {
    if (!r.is_array()) fail(ErrorCode::InvalidInput, "matrix row must be an array");
    VectorRF row;
    for (const auto& x : r) row.push_back(rf_from_json(x, p));
    rows.push_back(std::move(row));
  }
  return MatrixRF(FunctionField(p), std::move(rows));
}

inline json to_json(const std::vector<VectorRF>& basis) {
  json a = json::array();
  for (const auto& v : basis) a.push_back(to_json(v));
  return a;
}

}  // namespace katzp::json_io
