#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "vdc/bounds.hpp"
#include "vdc/numkernel.hpp"
#include "vdc/phase.hpp"

using namespace vdc;

TEST_CASE("kusmin_landau values and domain") {
  CHECK(kusmin_landau(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(kusmin_landau(0.25) ==
        doctest::Approx(1.0 / std::tan(M_PI / 8.0)).epsilon(1e-15));
  CHECK_THROWS_AS(kusmin_landau(0.0), domain_error);
  CHECK_THROWS_AS(kusmin_landau(0.6), domain_error);
  CHECK_THROWS_AS(kusmin_landau(-0.1), domain_error);
}

TEST_CASE("kusmin_landau soundness on linear phases") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    double theta = 0.05 + 0.45 * u01(rng);
    double mu = std::floor(5.0 * u01(rng)) + theta +
                (1.0 - 2.0 * theta) * u01(rng);
    PhaseFunction f = PhaseFunction::polynomial({u01(rng), mu});
    Window w{u01(rng) * 10.0 + 1.0, 5.0 + 200.0 * u01(rng)};
    CHECK(std::abs(exp_sum(f, w)) <= kusmin_landau(theta) + 1e-9);
  }
}

TEST_CASE("wvdc_rhs hand-checked example") {
  // seq = 1 over ten integers, Y = 10, H = 2:
  // corr = (2-1) * 9 = 9, rhs = 4/2 + (4/20) * (9/2) = 2.9
  std::vector<std::complex<double>> ones(10, {1.0, 0.0});
  CHECK(wvdc_rhs(ones, 10.0, 2) == doctest::Approx(2.9).epsilon(1e-15));
  CHECK(wvdc_rhs(ones, 10.0, 1) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK_THROWS_AS(wvdc_rhs(ones, 10.0, 0), hypothesis_error);
  CHECK_THROWS_AS(wvdc_rhs(ones, 10.0, 11), hypothesis_error);
}

TEST_CASE("wvdc dominates the squared mean") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    int len = 10 + static_cast<int>(rng() % 200);
    std::vector<std::complex<double>> seq;
    std::complex<double> total{0.0, 0.0};
    for (int n = 0; n < len; ++n) {
      double ang = 2.0 * M_PI * u01(rng);
      seq.emplace_back(std::cos(ang), std::sin(ang));
      total += seq.back();
    }
    double Y = static_cast<double>(len);
    double lhs = std::norm(total / Y);
    for (int H = 1; H <= len; H += 7) {
      CHECK(lhs <= wvdc_rhs(seq, Y, H) + 1e-9);
    }
  }
}

TEST_CASE("b_property on a grid") {
  for (std::int64_t H = 1; H <= 1000; H += 13) {
    for (int i = 0; i <= 100; ++i) {
      double T = i * 0.02;
      CHECK(b_property_check(H, T));
    }
  }
}

TEST_CASE("induction_rhs closed form") {
  double B = const_B(Rounding::upward);
  CHECK(induction_rhs({4}, 0.0) ==
        doctest::Approx(B * 0.5).epsilon(1e-12));
  // T_d term dominating: T = B gives B * (B^-1 B)^{1/2^d} = B
  CHECK(induction_rhs({1000000, 1000000}, const_B(Rounding::upward)) ==
        doctest::Approx(B).epsilon(1e-9));
  CHECK_THROWS_AS(induction_rhs({}, 0.1), domain_error);
  CHECK_THROWS_AS(induction_rhs({0}, 0.1), domain_error);
}

TEST_CASE("vdc_dth_bound substitution and active term") {
  DerivativeEnvelope env{3, 1e-6, 2e-6};
  BoundBreakdown b = vdc_dth_bound(env, 1000.0, Rounding::nearest);
  Coefficients c = coeff(3, Rounding::nearest);
  CHECK(b.term_first ==
        doctest::Approx(c.A * std::pow(2e-6 / (1e-6 * 1000.0), 0.25))
            .epsilon(1e-12));
  CHECK(b.term_second ==
        doctest::Approx(c.B * std::pow(4e-12 / 1e-6, 1.0 / 6.0))
            .epsilon(1e-12));
  CHECK(b.term_third ==
        doctest::Approx(c.C * std::pow(1e-6 * 1e9, -0.25)).epsilon(1e-12));
  CHECK(b.value == std::max({b.term_first, b.term_second, b.term_third}));
  CHECK(b.active == BoundBreakdown::Active::third);
  CHECK_THROWS_AS(vdc_dth_bound(env, 3.0), hypothesis_error);
}

TEST_CASE("d2 bounds") {
  DerivativeEnvelope env{2, 1e-4, 3e-4};
  BoundBreakdown b = d2_mean_bound(env, 100.0, Rounding::nearest);
  CHECK(b.term_first == 0.0);
  Coefficients c = coeff(2, Rounding::nearest);
  CHECK(b.term_second ==
        doctest::Approx(c.B * std::sqrt(9e-8 / 1e-4)).epsilon(1e-12));
  CHECK(b.term_third ==
        doctest::Approx(c.C / std::sqrt(1e-4 * 1e4)).epsilon(1e-12));
  double A = const_A(Rounding::nearest);
  CHECK(second_derivative_bound_A(env, 100.0, Rounding::nearest) ==
        doctest::Approx(A / std::sqrt(1e-4) * (3e-4 * 100.0 + 2.0))
            .epsilon(1e-12));
  CHECK(second_derivative_bound_additive(env, 100.0) ==
        doctest::Approx((3e-4 * 100.0 + 2.0) *
                            (1.0 + 4.0 / std::sqrt(M_PI * 1e-4)) +
                        1.0)
            .epsilon(1e-12));
  CHECK_THROWS_AS(d2_mean_bound(DerivativeEnvelope{3, 1.0, 1.0}, 10.0),
                  domain_error);
}

TEST_CASE("titchmarsh corollary") {
  CHECK(titchmarsh_C4(Rounding::nearest) <= 10.016);
  CHECK(titchmarsh_C4(Rounding::nearest) > 10.015);
  DerivativeEnvelope env{4, 1e-7, 5e-7};
  double v = titchmarsh_bound(env, 500.0, Rounding::nearest);
  double t1 = std::pow(5.0, 0.25) * std::pow(1e-7, 1.0 / 14.0);
  double t2 = std::pow(500.0, -0.25) * std::pow(1e-7, -1.0 / 14.0);
  CHECK(v == doctest::Approx(titchmarsh_C4(Rounding::nearest) *
                             std::max(t1, t2))
                 .epsilon(1e-12));
  CHECK_THROWS_AS(titchmarsh_bound(DerivativeEnvelope{3, 1e-7, 5e-7}, 500.0),
                  domain_error);
}

TEST_CASE("bound breakdown JSON is 12-digit stable") {
  DerivativeEnvelope env{3, 1e-6, 2e-6};
  BoundBreakdown b = vdc_dth_bound(env, 1000.0);
  std::string j1 = to_json(b);
  std::string j2 = to_json(vdc_dth_bound(env, 1000.0));
  CHECK(j1 == j2);
  CHECK(j1.find("\"active\":\"third\"") != std::string::npos);
  CHECK(j1.find("\"d\":3") != std::string::npos);
}

TEST_CASE("envelope validation") {
  CHECK_THROWS_AS(DerivativeEnvelope(1, 1.0, 2.0), domain_error);
  CHECK_THROWS_AS(DerivativeEnvelope(3, 0.0, 2.0), domain_error);
  CHECK_THROWS_AS(DerivativeEnvelope(3, 2.0, 1.0), domain_error);
}
