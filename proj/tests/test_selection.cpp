#include <doctest.h>

#include <cmath>
#include <random>

#include "exact_argmin.hpp"
#include "vdc/constants.hpp"
#include "vdc/selection.hpp"

using namespace vdc;
using testutil::exact_argmin_d;

TEST_CASE("quince_select spec examples") {
  // delta = 1, xi = Y: single element, x_1 = Y
  QuinceResult q1 = quince_select(1, 10.0, 10.0);
  REQUIRE(q1.x.size() == 1);
  CHECK(q1.x[0] == doctest::Approx(10.0).epsilon(1e-12));

  // delta = 2, xi = 2, Y = 10: case (a), x = (2^{2/6}, 2^{4/6})
  QuinceResult q2 = quince_select(2, 2.0, 10.0);
  CHECK(q2.branch == QuinceResult::Branch::case_a);
  REQUIRE(q2.x.size() == 2);
  CHECK(q2.x[0] == doctest::Approx(std::pow(2.0, 2.0 / 6.0)).epsilon(1e-14));
  CHECK(q2.x[1] == doctest::Approx(std::pow(2.0, 4.0 / 6.0)).epsilon(1e-14));
  CHECK(q2.x[0] * q2.x[1] == doctest::Approx(2.0).epsilon(1e-13));

  // delta = 3, xi = Y^{2.9}: forces case (b)
  QuinceResult q3 = quince_select(3, std::pow(10.0, 2.9), 10.0);
  CHECK(q3.branch == QuinceResult::Branch::case_b);
  REQUIRE(q3.N.has_value());
}

TEST_CASE("quince_select invariants on a randomized sweep") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    int delta = 1 + static_cast<int>(rng() % 8);
    double Y = 1.0 + 1e4 * u01(rng) + 0.01;
    double xi = std::pow(Y, delta * u01(rng));
    QuinceResult q = quince_select(delta, xi, Y);
    REQUIRE(q.x.size() == static_cast<std::size_t>(delta));
    double prod = 1.0;
    double p2d = std::ldexp(1.0, delta);
    for (int n = 1; n <= delta; ++n) {
      double x = q.x[n - 1];
      prod *= x;
      CHECK(x <= Y * (1.0 + 1e-12));
      double low =
          std::min(std::pow(xi, std::ldexp(1.0, n) / (2.0 * p2d - 2.0)),
                   std::pow(Y, std::ldexp(1.0, n) / p2d));
      CHECK(x >= low * (1.0 - 1e-12));
    }
    CHECK(std::fabs(prod / xi - 1.0) <= 1e-12);
  }
}

TEST_CASE("quince_select precondition errors") {
  CHECK_THROWS_AS(quince_select(2, 0.5, 10.0), hypothesis_error);
  CHECK_THROWS_AS(quince_select(2, 101.0, 10.0), hypothesis_error);
  CHECK_THROWS_AS(quince_select(0, 1.0, 10.0), domain_error);
  CHECK_THROWS_AS(quince_select(2, 1.0, 0.5), domain_error);
}

TEST_CASE("xi_select spec examples") {
  XiChoice all_ones = xi_select(1.0, 1.0, 1.0, 1.0, 1.0);
  CHECK(all_ones.h_value == doctest::Approx(1.0).epsilon(1e-14));

  // beta-cross: M = 4, N = 1 -> xi = 2, h = 2 = sqrt(MN)
  XiChoice bc = xi_select(4.0, 1.0, 100.0, 1.0, 1.0);
  CHECK(bc.xi == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(bc.h_value == doctest::Approx(2.0).epsilon(1e-14));

  CHECK_THROWS_AS(xi_select(0.0, 1.0, 1.0, 1.0, 1.0), domain_error);
}

TEST_CASE("xi_select postcondition on a randomized sweep") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    double M = std::pow(10.0, -4.0 + 8.0 * u01(rng));
    double N = std::pow(10.0, -4.0 + 8.0 * u01(rng));
    double Z = std::pow(10.0, -2.0 + 6.0 * u01(rng));
    double a = 0.05 + 4.0 * u01(rng);
    double b = 0.05 + 4.0 * u01(rng);
    XiChoice xc = xi_select(M, N, Z, a, b);
    CHECK(xc.xi > 0.0);
    CHECK(xc.xi <= Z);
    double rhs = std::max({std::pow(Z, -a), M * std::pow(Z, -b),
                           std::sqrt(M * N), std::pow(N, a / (a + b))});
    CHECK(xc.h_value <= rhs * (1.0 + 1e-12));
    // minimality against random probes, up to the lemma's cap
    for (int j = 0; j < 10; ++j) {
      double probe = Z * u01(rng);
      if (probe <= 0.0) continue;
      double h = std::max({std::pow(probe, -a), M * std::pow(probe, -b),
                           N * std::pow(probe, b)});
      CHECK(std::min(xc.h_value, rhs) <= h * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("optimal_d spec examples") {
  CHECK(optimal_d(0.5) == 3);
  CHECK(optimal_d(0.3) == 5);
  CHECK(optimal_d(2.0) == 2);
  CHECK(optimal_d(1.0) == 2);
  CHECK_THROWS_AS(optimal_d(0.0), domain_error);
  CHECK_THROWS_AS(optimal_d(1e-12), domain_error);
}

TEST_CASE("optimal_d equals the exact-rational argmin at random samples") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double cap = std::ldexp(1.0, 23) / (1.0 + 23.0 * std::ldexp(1.0, 23));
  for (int i = 0; i < 10000; ++i) {
    double alpha;
    if (i % 3 == 0) {
      alpha = cap * 1.0000001 + (4.0 - cap) * u01(rng);
    } else {
      // concentrate near the small-alpha breakpoints
      alpha = cap * 1.0000001 + 0.7 * u01(rng) * u01(rng);
    }
    CAPTURE(alpha);
    CHECK(optimal_d(alpha) == exact_argmin_d(alpha));
  }
}

TEST_CASE("optimal_d at the listed breakpoints") {
  // breakpoints rounded to the nearest double are never exactly the
  // rational, so the exact argmin is well defined at each of them
  for (double bp : {4.0 / 9.0, 8.0 / 25.0, 16.0 / 65.0, 32.0 / 161.0,
                    64.0 / 385.0, 128.0 / 897.0, 256.0 / 2049.0}) {
    CAPTURE(bp);
    CHECK(optimal_d(bp) == exact_argmin_d(bp));
  }
  CHECK(optimal_d(2.0 / 3.0) == exact_argmin_d(2.0 / 3.0));
}

TEST_CASE("tau0_compute spec examples") {
  Coefficients hc = hat_coeff(3, Rounding::nearest);
  double M = std::max({hc.A, hc.B, hc.C});
  double tau0 = tau0_compute(3, 1.0 / 3.0, M);
  CHECK(tau0 == doctest::Approx(81.0).epsilon(1e-9));

  double t2 = tau0_compute(3, 1.0 / 3.0, hc.B);
  // all three inequalities hold at tau0, at least one fails slightly below
  double D = 8.0;
  double mid = (1.0 - 1.0) / 6.0;
  auto ok = [&](double tau) {
    return tau >= std::pow(3.0, D / ((1.0 / 3.0) * 6.0)) &&
           std::pow(tau, 2.0 / D + mid) >= hc.C / hc.B &&
           std::pow(tau, 2.0 / (3.0 * D) * 1.0 + mid) >= hc.A / hc.B;
  };
  CHECK(ok(t2));
  CHECK_FALSE(ok(t2 * (1.0 - 1e-9)));

  CHECK_THROWS_AS(tau0_compute(3, 0.7, 100.0), hypothesis_error);
  CHECK_THROWS_AS(tau0_compute(3, 1.0 / 3.0, 1.0), hypothesis_error);
}

TEST_CASE("tau0 exponents are positive under the hypothesis") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    int d = 2 + static_cast<int>(rng() % 8);
    double D = std::ldexp(1.0, d);
    double bp = std::ldexp(1.0, d - 2) /
                (1.0 + (d - 2) * std::ldexp(1.0, d - 2));
    double alpha = bp * (0.05 + 0.9 * u01(rng));
    double mid = (1.0 - alpha * d) / (D - 2.0);
    CHECK(2.0 / D + mid > 0.0);
    CHECK(2.0 * alpha / D + mid > 0.0);
  }
}
