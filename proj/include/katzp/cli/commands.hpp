#pragma once

#include <chrono>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "katzp/cli/family_config.hpp"
#include "katzp/cli/log.hpp"
#include "katzp/conncalc.hpp"
#include "katzp/filtration.hpp"
#include "katzp/gaussmanin.hpp"
#include "katzp/pdcalc.hpp"

namespace katzp::cli {

struct RunConfig {
  std::string subcommand;
  std::vector<std::uint32_t> primes;
  std::uint64_t seed = 42;
  std::size_t cases = 100;
  std::size_t truncation = 16;
  std::size_t nilpotence = 16;
  std::string family;
  std::string f;            // inline JSON for f
  std::string config_path;  // JSON family config
  std::string matrix_path;  // pcurv input
  std::string module;       // fuzz target
  bool fuzz = false;        // pcurv --fuzz
  bool timing = false;
  std::string out;
};

enum ExitCode { kPass = 0, kVerificationFailure = 1, kInputError = 2 };

struct CommandResult {
  json output;
  int exit_code = kPass;
};

/// Errors caused by the request itself versus a failed mathematical check.
inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotNilpotent:
    case ErrorCode::GriffithsViolation:
    case ErrorCode::DegenerateCartier:
    case ErrorCode::ReductionFailure:
    case ErrorCode::PostconditionFailure:
      return kVerificationFailure;
    default:
      return kInputError;
  }
}

inline json error_json(const Error& e) { return {{"code", to_string(e.code())}, {"message", e.what()}}; }

inline CommandResult error_result(const Error& e) { return {{{"error", error_json(e)}}, exit_code_for(e.code())}; }

inline json property_json(const std::vector<PropertyResult>& results) {
  json props = json::object();
  bool pass = true;
  for (const auto& r : results) {
    props[r.name] = {{"cases", r.cases}, {"failures", r.failures}, {"result", r.pass() ? "pass" : "fail"}};
    pass = pass && r.pass();
  }
  return {{"properties", props}, {"pass", pass}};
}

namespace detail {

inline std::vector<std::uint32_t> primes_or(const RunConfig& cfg, std::vector<std::uint32_t> fallback) {
  return cfg.primes.empty() ? fallback : cfg.primes;
}

/// Family for one prime from --family / --f / --config (exactly one source).
inline HyperellipticFamily family_for(const RunConfig& cfg, std::uint32_t p) {
  const int sources = !cfg.family.empty() + !cfg.f.empty() + !cfg.config_path.empty();
  if (sources > 1) fail(ErrorCode::InvalidInput, "use only one of --family, --f, --config");
  if (!cfg.f.empty()) return HyperellipticFamily("custom", f_from_json(parse_json_text(cfg.f, "--f"), p));
  if (!cfg.config_path.empty()) return family_from_json(read_json_file(cfg.config_path), p);
  return HyperellipticFamily::named(cfg.family.empty() ? "legendre" : cfg.family, p);
}

/// Primes for family commands: --p, else the config file's "p".
inline std::vector<std::uint32_t> family_primes(const RunConfig& cfg) {
  if (!cfg.primes.empty()) return cfg.primes;
  if (!cfg.config_path.empty()) {
    const json c = read_json_file(cfg.config_path);
    if (c.contains("p") && c.at("p").is_number_unsigned()) return {c.at("p").get<std::uint32_t>()};
  }
  fail(ErrorCode::InvalidInput, "no prime given: pass --p or put \"p\" in the config");
}

/// Runs fn on every prime concurrently; results keep the order of `primes`.
template <class Fn>
std::vector<CommandResult> per_prime(const std::vector<std::uint32_t>& primes, Fn fn) {
  std::vector<std::future<CommandResult>> jobs;
  for (auto p : primes)
    jobs.push_back(std::async(std::launch::async, [p, &fn]() -> CommandResult {
      try {
        return fn(p);
      } catch (const Error& e) {
        CommandResult r = error_result(e);
        r.output["p"] = p;
        return r;
      }
    }));
  std::vector<CommandResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

inline CommandResult combine(std::vector<CommandResult> results) {
  if (results.size() == 1) return std::move(results.front());
  CommandResult all{{{"reports", json::array()}}, kPass};
  for (auto& r : results) {
    all.output["reports"].push_back(std::move(r.output));
    all.exit_code = std::max(all.exit_code, r.exit_code);
  }
  all.output["pass"] = all.exit_code == kPass;
  return all;
}

inline json basis_json(const Basis& b) { return json_io::to_json(b); }

}  // namespace detail

/// Full pipeline for one prime, as a self-contained report.
inline CommandResult katz_verify_prime(const HyperellipticFamily& fam, bool timing, const Log& log) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint32_t p = fam.characteristic();
  json rep;
  rep["p"] = p;
  rep["family"] = fam.id();
  rep["f"] = to_json(fam.f());
  rep["bad_locus"] = json_io::to_json(fam.bad_locus());
  rep["conventions"] = {
      {"connection", "nabla v = v' + A v on coordinate columns; column j of A is nabla of basis vector j"},
      {"frobenius_twist", "t -> t^p on coefficients"},
      {"conjugate_index", "G_i = ker(psi^(i+1)); psi maps G_i into G_(i-1)"},
      {"lhs", "kappa0 * psibar_1 * kappa1^-1"},
      {"rhs", "frobenius twist of theta_1"},
  };

  const auto gm = gm_connection(fam);
  log.debug("p=" + std::to_string(p) + ": Gauss-Manin matrix computed");
  rep["basis"] = gm.basis_labels;
  rep["gm_matrix"] = json_io::to_json(gm.conn.matrix());
  if (fam.genus() == 1) rep["hasse"] = json_io::to_json(hasse_polynomial(fam));

  const auto fc = hodge_filtration(gm);
  const auto griffiths = check_griffiths(fc);
  rep["hodge"] = {{"F0", detail::basis_json(fc.step(0))}, {"F1", detail::basis_json(fc.step(1))}};

  const auto cf = conj_filtration(gm.conn);
  const auto horizontal = horizontality_check(gm.conn, cf.psi).holds;
  rep["psi"] = json_io::to_json(cf.psi.matrix);
  json conj = json::object();
  for (int i = 0; i <= cf.top(); ++i) {
    conj["G" + std::to_string(i)] = detail::basis_json(cf.step(i));
    conj["lifts" + std::to_string(i)] = detail::basis_json(cf.graded_lifts.at(static_cast<std::size_t>(i)));
  }
  rep["conjugate"] = conj;

  const auto theta = higgs_field(fc);
  const auto bar = graded_p_curvature(cf);
  json th = json::object(), pb = json::object();
  for (const auto& [n, m] : theta.theta) th[std::to_string(n)] = json_io::to_json(m);
  for (std::size_t i = 1; i < bar.maps.size(); ++i) pb[std::to_string(i)] = json_io::to_json(bar.maps[i]);
  rep["theta"] = th;
  rep["psibar"] = pb;

  const auto cd = cartier_data(fam, cf);
  rep["cartier"] = {{"row", json_io::to_json(cd.cartier_row)},
                    {"hasse_witt", json_io::to_json(cd.hasse)},
                    {"kappa0", json_io::to_json(cd.kappa0)},
                    {"kappa1", json_io::to_json(cd.kappa1)},
                    {"conj_kernel", json_io::to_json(cd.conj_kernel)},
                    {"conj_lift", json_io::to_json(cd.conj_lift)},
                    {"excluded_locus", json_io::to_json(cd.excluded_locus)},
                    {"notes", cd.notes}};

  const auto cmp = katz_compare(fc, cf, cd);
  rep["status"] = cmp.status;
  rep["lhs"] = json_io::to_json(cmp.lhs);
  rep["rhs"] = json_io::to_json(cmp.rhs);
  rep["ratio"] = json_io::to_json(cmp.ratio);
  rep["is_constant"] = cmp.is_constant;
  rep["sign"] = cmp.sign;

  const bool psi_nilpotent = cf.psi.matrix.pow(gm.conn.rank()).is_zero();
  rep["checks"] = {{"griffiths_transversal", griffiths.transversal},
                   {"psi_horizontal", horizontal},
                   {"psi_nilpotent", psi_nilpotent},
                   {"conjugate_postconditions", true}};
  rep["observations"] = {{"hodge_nabla_stable", griffiths.stable},
                         {"theta_nonzero", !theta.is_zero()},
                         {"psi_nonzero", !cf.psi.matrix.is_zero()}};
  const bool pass = cmp.pass && griffiths.transversal && horizontal && psi_nilpotent;
  rep["pass"] = pass;

  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  log.info("katz-verify p=" + std::to_string(p) + " family=" + fam.id() + ": " + cmp.status +
           (pass ? ", pass" : ", FAIL") + " (" + std::to_string(static_cast<long long>(ms)) + " ms)");
  if (timing) rep["timing_ms"] = ms;
  return {rep, pass ? kPass : kVerificationFailure};
}

inline CommandResult cmd_katz_verify(const RunConfig& cfg, const Log& log) {
  try {
    const auto primes = detail::family_primes(cfg);
    return detail::combine(detail::per_prime(
        primes, [&](std::uint32_t p) { return katz_verify_prime(detail::family_for(cfg, p), cfg.timing, log); }));
  } catch (const Error& e) {
    return error_result(e);
  }
}

inline CommandResult cmd_gm(const RunConfig& cfg, const Log& log) {
  try {
    const auto primes = detail::family_primes(cfg);
    return detail::combine(detail::per_prime(primes, [&](std::uint32_t p) -> CommandResult {
      const auto fam = detail::family_for(cfg, p);
      const auto gm = gm_connection(fam);
      log.info("gm p=" + std::to_string(p) + " family=" + fam.id() + ": rank " + std::to_string(gm.conn.rank()));
      return {{{"p", p},
               {"family", fam.id()},
               {"f", to_json(fam.f())},
               {"genus", fam.genus()},
               {"bad_locus", json_io::to_json(fam.bad_locus())},
               {"basis", gm.basis_labels},
               {"matrix", json_io::to_json(gm.conn.matrix())}},
              kPass};
    }));
  } catch (const Error& e) {
    return error_result(e);
  }
}

inline CommandResult cmd_pcurv(const RunConfig& cfg, const Log& log) {
  try {
    if (cfg.fuzz) {
      CommandResult r{property_json(run_conncalc_suite(cfg.cases, cfg.seed)), kPass};
      r.output["cases"] = cfg.cases;
      r.output["seed"] = cfg.seed;
      if (!r.output["pass"].get<bool>()) r.exit_code = kVerificationFailure;
      log.info(std::string("pcurv fuzz: ") + (r.exit_code == kPass ? "pass" : "FAIL"));
      return r;
    }
    if (cfg.matrix_path.empty()) fail(ErrorCode::InvalidInput, "pcurv needs --matrix FILE or --fuzz");
    if (cfg.primes.size() != 1) fail(ErrorCode::InvalidInput, "pcurv --matrix needs exactly one --p");
    const std::uint32_t p = cfg.primes.front();
    const auto conn = Connection::from_matrix(json_io::matrix_from_json(read_json_file(cfg.matrix_path), p));
    log.info("pcurv p=" + std::to_string(p) + ": rank " + std::to_string(conn.rank()));
    return {json_io::to_json(p_curvature(conn).matrix), kPass};
  } catch (const Error& e) {
    return error_result(e);
  }
}

inline json pd_report_json(std::uint32_t p, const RunConfig& cfg, const PdSuiteReport& rep) {
  auto word = [](bool ok) { return ok ? "pass" : "fail"; };
  return {{"p", p},
          {"nilpotence", cfg.nilpotence},
          {"truncation", cfg.truncation},
          {"cases", cfg.cases},
          {"seed", cfg.seed},
          {"group_law", word(rep.group_law)},
          {"exactness", word(rep.exactness)},
          {"frobenius_kernel", word(rep.frobenius_kernel)},
          {"violations", rep.violations}};
}

inline CommandResult cmd_pd_check(const RunConfig& cfg, const Log& log) {
  try {
    const auto primes = detail::primes_or(cfg, {2, 3, 5, 7});
    return detail::combine(detail::per_prime(primes, [&](std::uint32_t p) -> CommandResult {
      const auto rep = run_pd_suite(p, cfg.nilpotence, cfg.truncation, cfg.cases, cfg.seed);
      const bool ok = rep.group_law && rep.exactness && rep.frobenius_kernel;
      log.info("pd-check p=" + std::to_string(p) + ": " + (ok ? "pass" : "FAIL"));
      return {pd_report_json(p, cfg, rep), ok ? kPass : kVerificationFailure};
    }));
  } catch (const Error& e) {
    return error_result(e);
  }
}

inline CommandResult cmd_fuzz(const RunConfig& cfg, const Log& log) {
  try {
    if (cfg.module == "pdcalc") return cmd_pd_check(cfg, log);
    std::vector<PropertyResult> results;
    if (cfg.module == "conncalc") results = run_conncalc_suite(cfg.cases, cfg.seed);
    else if (cfg.module == "filtration") results = run_filtration_suite(cfg.cases, cfg.seed);
    else fail(ErrorCode::InvalidInput, "--module must be pdcalc, conncalc or filtration");
    CommandResult r{property_json(results), kPass};
    r.output["module"] = cfg.module;
    r.output["cases"] = cfg.cases;
    r.output["seed"] = cfg.seed;
    if (!r.output["pass"].get<bool>()) r.exit_code = kVerificationFailure;
    log.info("fuzz " + cfg.module + ": " + (r.exit_code == kPass ? "pass" : "FAIL"));
    return r;
  } catch (const Error& e) {
    return error_result(e);
  }
}

inline CommandResult run_command(const RunConfig& cfg, const Log& log) {
  if (cfg.subcommand == "katz-verify") return cmd_katz_verify(cfg, log);
  if (cfg.subcommand == "gm") return cmd_gm(cfg, log);
  if (cfg.subcommand == "pcurv") return cmd_pcurv(cfg, log);
  if (cfg.subcommand == "pd-check") return cmd_pd_check(cfg, log);
  if (cfg.subcommand == "fuzz") return cmd_fuzz(cfg, log);
  return error_result(Error(ErrorCode::InvalidInput, "unknown subcommand '" + cfg.subcommand + "'"));
}

}  // namespace katzp::cli
