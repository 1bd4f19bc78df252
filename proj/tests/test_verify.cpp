#include <doctest.h>

#include <cmath>
#include <string>

#include "vdc/verify.hpp"

using namespace vdc;

TEST_CASE("gen_function log_phase envelope matches the closed form") {
  CorpusSpec spec;
  spec.family = CorpusFamily::log_phase;
  spec.t = 1e4;
  spec.window = Window{100.0, 100.0};
  spec.d = 3;
  PhaseFunction f = gen_function(spec);
  REQUIRE(f.envelope().has_value());
  // |f'''(x)| = t * 2! / (2 pi x^3), decreasing
  double lam = 1e4 * 2.0 / (2.0 * M_PI * 200.0 * 200.0 * 200.0);
  double Lam = 1e4 * 2.0 / (2.0 * M_PI * 100.0 * 100.0 * 100.0);
  CHECK(f.envelope()->lambda == doctest::Approx(lam).epsilon(1e-11));
  CHECK(f.envelope()->Lambda == doctest::Approx(Lam).epsilon(1e-11));
  CHECK(f.envelope()->lambda <= lam);
  CHECK(f.envelope()->Lambda >= Lam);
}

TEST_CASE("gen_function monomial envelope from endpoints") {
  CorpusSpec spec;
  spec.family = CorpusFamily::monomial;
  spec.c = 1e-5;
  spec.gamma = 3.5;
  spec.window = Window{10.0, 50.0};
  spec.d = 3;
  PhaseFunction f = gen_function(spec);
  double g = 1e-5 * 3.5 * 2.5 * 1.5;  // c * gamma (gamma-1) (gamma-2)
  double v0 = g * std::pow(10.0, 0.5);
  double v1 = g * std::pow(60.0, 0.5);
  CHECK(f.envelope()->lambda == doctest::Approx(v0).epsilon(1e-11));
  CHECK(f.envelope()->Lambda == doctest::Approx(v1).epsilon(1e-11));
}

TEST_CASE("gen_function cubic_plus has a constant third derivative") {
  CorpusSpec spec;
  spec.family = CorpusFamily::cubic_plus;
  spec.c = 1e-4;
  spec.window = Window{5.0, 40.0};
  spec.d = 3;
  spec.seed = 99;
  PhaseFunction f = gen_function(spec);
  CHECK(f.envelope()->lambda == doctest::Approx(6e-4).epsilon(1e-11));
  CHECK(f.envelope()->Lambda == doctest::Approx(6e-4).epsilon(1e-11));
  CHECK(f.envelope()->lambda <= 6e-4);
  CHECK(f.envelope()->Lambda >= 6e-4);
}

TEST_CASE("gen_function rejects inadmissible parameters") {
  CorpusSpec spec;
  spec.family = CorpusFamily::monomial;
  spec.c = 1e-5;
  spec.gamma = 4.0;  // integer exponent: f''' can vanish structurally
  spec.window = Window{10.0, 50.0};
  spec.d = 3;
  CHECK_THROWS_AS(gen_function(spec), domain_error);
  spec.gamma = 3.5;
  spec.d = 1;
  CHECK_THROWS_AS(gen_function(spec), domain_error);
  spec.d = 3;
  spec.c = -1.0;
  CHECK_THROWS_AS(gen_function(spec), domain_error);
}

TEST_CASE("generated envelopes are honest at 1000 sample points") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 20; ++i) {
    CorpusSpec spec = detail::random_corpus(rng, 2 + static_cast<int>(rng() % 3),
                                            rng());
    if (spec.family == CorpusFamily::cubic_plus && spec.d != 3) continue;
    PhaseFunction f = gen_function(spec);
    const auto& env = *f.envelope();
    for (int j = 0; j < 1000; ++j) {
      double x = spec.window.X + spec.window.Y * (j + 0.5) / 1000.0;
      double v = std::fabs(f.derivative(spec.d, x));
      CAPTURE(x);
      CHECK(v >= env.lambda);
      CHECK(v <= env.Lambda);
    }
  }
}

TEST_CASE("every suite passes at budget 100") {
  for (const auto& name : suite_names()) {
    auto recs = run_suite(name, 100);
    SuiteSummary s = summarize(name, recs);
    CAPTURE(name);
    CHECK(s.failures == 0);
    CHECK(s.total >= 100);
    CHECK(s.max_ratio <= 1.0 + kVerifySlack);
  }
}

TEST_CASE("suites are deterministic for a fixed seed") {
  auto a = run_suite("dth_theorem", 50, 7);
  auto b = run_suite("dth_theorem", 50, 7);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(to_json(a[i]) == to_json(b[i]));
  }
  auto c = run_suite("dth_theorem", 50, 8);
  bool all_same = true;
  for (std::size_t i = 0; i < std::min(a.size(), c.size()); ++i) {
    if (to_json(a[i]) != to_json(c[i])) all_same = false;
  }
  CHECK_FALSE(all_same);
}

TEST_CASE("records are ordered by id and carry pass semantics") {
  auto recs = run_suite("wvdc", 30, 5);
  for (std::size_t i = 0; i < recs.size(); ++i) {
    CHECK(recs[i].id == static_cast<int>(i));
    CHECK(recs[i].pass ==
          (recs[i].direct_value <=
           recs[i].bound_value * (1.0 + kVerifySlack)));
  }
}

TEST_CASE("unknown suite throws") {
  CHECK_THROWS_AS(run_suite("nosuch", 10), domain_error);
  CHECK_THROWS_AS(run_suite("wvdc", 0), domain_error);
}

TEST_CASE("summary JSON shape") {
  auto recs = run_suite("constants", 1);
  SuiteSummary s = summarize("constants", recs);
  std::string j = to_json(s);
  CHECK(j.find("\"suite\":\"constants\"") != std::string::npos);
  CHECK(j.find("\"failures\":0") != std::string::npos);
}
