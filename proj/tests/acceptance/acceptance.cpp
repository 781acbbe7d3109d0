// One line per acceptance criterion; nonzero exit if any criterion fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "katzp/cli.hpp"

using namespace katzp;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // 0: no runtime limit
  std::function<Outcome()> run;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.ok) {
    o.ok = false;
    o.detail = what;
  }
}

Outcome pd_group_laws() {
  Outcome o;
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const auto rep = run_pd_suite(p, 16, 16, 500, 1000 + p);
    require(o, rep.group_law, "group law violated at p = " + std::to_string(p));
  }
  return o;
}

Outcome pd_exactness() {
  Outcome o;
  // 500 group-law cases come with 200 exactness cases per prime
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const auto rep = run_pd_suite(p, 16, 16, 500, 2000 + p);
    require(o, rep.exactness, "exactness or a_1^p = 0 violated at p = " + std::to_string(p));
  }
  return o;
}

Outcome taylor_cocycle() {
  Outcome o;
  Rng rng(3000);
  const auto r = check_taylor_multiplicativity(rng, {2, 3, 5}, 200);
  require(o, r.pass(), std::to_string(r.failures) + " of 200 cases failed");
  return o;
}

Outcome p_curvature_suite() {
  Outcome o;
  Rng rng(4000);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const std::vector<std::uint32_t> one{p};
    for (const auto& r : {check_o_linearity(rng, one, 100), check_horizontality(rng, one, 100),
                          check_gauge_covariance(rng, one, 100), check_rank1_oracle(rng, one, 100)})
      require(o, r.pass(), r.name + " failed at p = " + std::to_string(p));
  }
  return o;
}

Outcome legendre_pipeline(std::uint32_t p) {
  Outcome o;
  const auto gm = gm_connection(HyperellipticFamily::legendre(p));
  const auto fc = hodge_filtration(gm);
  require(o, check_griffiths(fc).transversal, "Griffiths transversality");
  require(o, !higgs_field(fc).is_zero(), "theta = 0");
  const auto cf = conj_filtration(gm.conn);
  require(o, !cf.psi.matrix.is_zero(), "psi = 0");
  require(o, (cf.psi.matrix * cf.psi.matrix).is_zero(), "psi^2 != 0");
  require(o, cf.top() == 1 && cf.steps[0].size() == 1, "G_0 is not of rank 1");
  for (const auto& v : cf.steps[0])
    require(o, in_span(cf.steps[0], nabla_apply(gm.conn, v), gm.conn.field()), "G_0 not nabla-stable");
  for (int i = 0; i <= cf.top(); ++i)
    require(o, p_curvature(graded_connection(cf, i)).matrix.is_zero(), "graded p-curvature nonzero");
  return o;
}

Outcome katz_ratio(std::uint32_t p) {
  Outcome o;
  const auto fam = HyperellipticFamily::legendre(p);
  const auto gm = gm_connection(fam);
  const auto cf = conj_filtration(gm.conn);
  const auto cmp = katz_compare(hodge_filtration(gm), cf, cartier_data(fam, cf));
  require(o, cmp.is_constant, "ratio " + cmp.ratio.to_string() + " is not constant");
  require(o, cmp.sign == -1, "ratio is " + cmp.ratio.to_string() + ", expected -1");
  if (o.ok) o.detail = "ratio " + std::to_string(cmp.ratio.num().coeff(0).signed_value());
  return o;
}

Outcome hasse_oracle() {
  Outcome o;
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const Poly h = hasse_polynomial(HyperellipticFamily::legendre(p));
    require(o, h.degree() == static_cast<int>((p - 1) / 2), "degree at p = " + std::to_string(p));
    const std::uint32_t m = (p - 1) / 2;
    PascalTable pascal(p, m);
    std::vector<FpElement> c;
    for (std::uint32_t i = 0; i <= m; ++i) c.emplace_back(std::int64_t{pascal(m, i)} * pascal(m, i), p);
    require(o, h.monic() == Poly(PrimeField(p), c).monic(), "binomial sum mismatch at p = " + std::to_string(p));
  }
  // y^2 = x(x-1)(x-2) over F_3 is supersingular iff it has p + 1 = 4 points
  const Poly h3 = hasse_polynomial(HyperellipticFamily::legendre(3));
  std::uint32_t count = 1;
  for (std::uint32_t x = 0; x < 3; ++x)
    for (std::uint32_t y = 0; y < 3; ++y)
      if ((y * y) % 3 == (x * ((x + 2) % 3) * ((x + 1) % 3)) % 3) ++count;
  require(o, count == 4, "point count at t = 2 is " + std::to_string(count));
  require(o, h3.evaluate(FpElement(2, 3)).is_zero(), "H(2) != 0 mod 3");
  require(o, !h3.evaluate(FpElement(0, 3)).is_zero() && !h3.evaluate(FpElement(1, 3)).is_zero(),
          "H has a root besides 2 mod 3");
  return o;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome cli_determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "katzp_acceptance";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "A.json") << R"([[{"num": [1], "den": [0, 1]}, [0, 1]], [[1], [2, 0, 1]]])";
  std::ofstream(dir / "family.json") << R"({"p": 5, "family": "legendre"})";
  const std::vector<std::string> commands{
      "katz-verify --p 3 --p 5 --p 7 --family legendre",
      "katz-verify --p 5 --family isotrivial",
      "katz-verify --config " + (dir / "family.json").string(),
      "gm --family legendre --p 7",
      "pcurv --p 5 --matrix " + (dir / "A.json").string(),
      "pcurv --fuzz --cases 50 --seed 7",
      "pd-check --p 3 --nilpotence 16 --cases 200 --seed 42",
      "fuzz --module pdcalc --cases 100 --seed 42",
      "fuzz --module conncalc --cases 50 --seed 1",
      "fuzz --module filtration --cases 30 --seed 1",
  };
  for (std::size_t i = 0; i < commands.size(); ++i) {
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
      const auto file = dir / ("out_" + std::to_string(i) + "_" + std::to_string(run) + ".json");
      const std::string cmd =
          "KATZ_LOG=quiet " + std::string(KATZP_CLI_PATH) + " " + commands[i] + " --out " + file.string();
      const int status = std::system(cmd.c_str());
      require(o, WIFEXITED(status) && WEXITSTATUS(status) == 0, "'" + commands[i] + "' exited nonzero");
      outputs[run] = slurp(file);
    }
    require(o, !outputs[0].empty() && outputs[0] == outputs[1], "'" + commands[i] + "' is not byte-reproducible");
  }
  if (o.ok) o.detail = std::to_string(commands.size()) + " commands";
  return o;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "PD group laws, p in {2,3,5,7}, F_p[x]/(x^16), 500 triples", 10, pd_group_laws},
      {2, "PD exactness and a_1^p = 0, 200 sequences per prime", 10, pd_exactness},
      {3, "Taylor multiplicativity to order 2p, 200 cases, p in {2,3,5}", 30, taylor_cocycle},
      {4, "p-curvature suite, 100 cases per property per prime", 60, p_curvature_suite},
  };
  for (std::uint32_t p : {3u, 5u, 7u, 13u})
    criteria.push_back({5, "Legendre pipeline, p = " + std::to_string(p), 60, [p] { return legendre_pipeline(p); }});
  for (std::uint32_t p : {3u, 5u, 7u})
    criteria.push_back({6, "Katz ratio is -1, Legendre p = " + std::to_string(p), 60, [p] { return katz_ratio(p); }});
  criteria.push_back({7, "Hasse oracle p <= 13, p = 3 point count", 10, hasse_oracle});
  criteria.push_back({8, "CLI byte-determinism", 0, cli_determinism});

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.limit_s > 0 && secs > c.limit_s) o = {false, "over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit"};
    if (!o.ok) ++failures;
    std::printf("%s  criterion %d: %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                o.detail.empty() ? "" : " - ", o.detail.c_str());
  }
  std::printf("%d of %zu checks failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
