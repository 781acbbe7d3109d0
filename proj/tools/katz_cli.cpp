#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "katzp/cli.hpp"

using namespace katzp;
using namespace katzp::cli;

namespace {

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--p", cfg.primes, "prime (repeatable; primes run concurrently)");
  sub->add_option("--seed", cfg.seed, "random seed");
  sub->add_option("--cases", cfg.cases, "number of fuzz cases");
  sub->add_option("--out", cfg.out, "write the JSON report here instead of stdout");
}

void add_family(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--family", cfg.family, "named family: legendre, isotrivial");
  sub->add_option("--f", cfg.f, "f as JSON: array over powers of x of polynomials in t");
  sub->add_option("--config", cfg.config_path, "JSON family config {\"p\": .., \"family\"|\"f\": ..}");
  sub->add_flag("--timing", cfg.timing, "include wall-clock timing in the report");
}

int emit(const CommandResult& r, const RunConfig& cfg) {
  const std::string text = r.output.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
    return r.exit_code;
  }
  std::ofstream out(cfg.out, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << cfg.out << '\n';
    return kInputError;
  }
  out << text;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Katz's p-curvature formula for hyperelliptic pencils"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* verify = app.add_subcommand("katz-verify", "run the full comparison pipeline");
  add_common(verify, cfg);
  add_family(verify, cfg);

  auto* gm = app.add_subcommand("gm", "Gauss-Manin connection matrix of a family");
  add_common(gm, cfg);
  add_family(gm, cfg);

  auto* pcurv = app.add_subcommand("pcurv", "p-curvature of a connection matrix, or its fuzz suite");
  add_common(pcurv, cfg);
  pcurv->add_option("--matrix", cfg.matrix_path, "JSON matrix file (row-major rational functions)");
  pcurv->add_flag("--fuzz", cfg.fuzz, "run the p-curvature property suite");

  auto* pd = app.add_subcommand("pd-check", "divided-power group law and exactness checks");
  add_common(pd, cfg);
  pd->add_option("--nilpotence", cfg.nilpotence, "N in F_p[x]/(x^N)");
  pd->add_option("--truncation", cfg.truncation, "PD sequence window K");
  pd->callback([&] { cfg.cases = pd->count("--cases") ? cfg.cases : 500; });

  auto* fuzz = app.add_subcommand("fuzz", "invariant suite of one module");
  add_common(fuzz, cfg);
  fuzz->add_option("--module", cfg.module, "pdcalc, conncalc or filtration")->required();
  fuzz->add_option("--nilpotence", cfg.nilpotence, "N in F_p[x]/(x^N) (pdcalc)");
  fuzz->add_option("--truncation", cfg.truncation, "PD sequence window K (pdcalc)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  Log log;
  try {
    log = Log::from_env();
  } catch (const Error& e) {
    return emit(error_result(e), cfg);
  }
  return emit(run_command(cfg, log), cfg);
}
