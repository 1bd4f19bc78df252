#pragma once

// The constructive parameter selections hidden inside the proofs: the x_n
// factorization, the xi minimizer, the optimal derivative order for a given
// exponent, and the tau_0 threshold.

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "vdc/constants.hpp"
#include "vdc/error.hpp"

namespace vdc {

/// Factorization of xi into delta factors x_n with
/// prod x_n = xi and min(xi^{2^n/(2^{delta+1}-2)}, Y^{2^n/2^delta}) <= x_n <= Y.
struct QuinceResult {
  enum class Branch { case_a, case_b };
  std::vector<double> x;
  Branch branch = Branch::case_a;
  std::optional<int> N;  // case_b split index
};

inline QuinceResult quince_select(int delta, double xi, double Y) {
  if (delta < 1) throw domain_error("quince_select: requires delta >= 1");
  if (!(Y > 1.0)) throw domain_error("quince_select: requires Y > 1");
  const double ln_xi = std::log(xi);
  const double ln_Y = std::log(Y);
  if (!(xi >= 1.0) || !(ln_xi <= delta * ln_Y)) {
    throw hypothesis_error("quince_select: requires 1 <= xi <= Y^delta");
  }

  QuinceResult res;
  res.x.resize(delta);
  // case split on xi^{2^delta} <= Y^{2^{delta+1}-2}, decided in log space
  double p2d = std::ldexp(1.0, delta);  // 2^delta
  if (p2d * ln_xi <= (2.0 * p2d - 2.0) * ln_Y) {
    res.branch = QuinceResult::Branch::case_a;
    for (int n = 1; n <= delta; ++n) {
      res.x[n - 1] = std::exp(std::ldexp(1.0, n) * ln_xi / (2.0 * p2d - 2.0));
    }
    return res;
  }

  // case (b): least N in [1, delta-1] with
  //   xi^{2^{N+1}} > Y^{(delta-N+1) 2^{N+1} - 2}
  int N = delta - 1;
  for (int cand = 1; cand <= delta - 1; ++cand) {
    double p = std::ldexp(1.0, cand + 1);  // 2^{N+1}
    if (p * ln_xi > ((delta - cand + 1) * p - 2.0) * ln_Y) {
      N = cand;
      break;
    }
  }
  res.branch = QuinceResult::Branch::case_b;
  res.N = N;
  double pN = std::ldexp(1.0, N + 1);  // 2^{N+1}
  double ln_base = ln_xi + (N - delta) * ln_Y;
  for (int n = 1; n <= N; ++n) {
    res.x[n - 1] = std::exp(std::ldexp(1.0, n) * ln_base / (pN - 2.0));
  }
  for (int n = N + 1; n <= delta; ++n) {
    res.x[n - 1] = Y;
  }
  return res;
}

/// Choice of 0 < xi <= Z minimizing h(xi) = max(xi^-alpha, M xi^-beta,
/// N xi^beta) over the candidate set {Z, N^{-1/(alpha+beta)}, (M/N)^{1/(2 beta)}}.
/// The attained value never exceeds
/// max(Z^-alpha, M Z^-beta, sqrt(MN), N^{alpha/(alpha+beta)}).
struct XiChoice {
  enum class Branch { at_Z, alpha_cross, beta_cross };
  double xi = 0.0;
  Branch branch = Branch::at_Z;
  double h_value = 0.0;
};

inline XiChoice xi_select(double M, double N, double Z, double alpha,
                          double beta) {
  if (!(M > 0.0 && N > 0.0 && Z > 0.0 && alpha > 0.0 && beta > 0.0)) {
    throw domain_error("xi_select: all parameters must be positive");
  }
  auto h = [&](double xi) {
    return std::max({std::pow(xi, -alpha), M * std::pow(xi, -beta),
                     N * std::pow(xi, beta)});
  };
  XiChoice best;
  best.xi = Z;
  best.branch = XiChoice::Branch::at_Z;
  best.h_value = h(Z);
  double xi_alpha = std::pow(N, -1.0 / (alpha + beta));  // xi^-alpha = N xi^beta
  if (xi_alpha > 0.0 && xi_alpha <= Z) {
    double v = h(xi_alpha);
    if (v < best.h_value) {
      best = {xi_alpha, XiChoice::Branch::alpha_cross, v};
    }
  }
  double xi_beta = std::pow(M / N, 1.0 / (2.0 * beta));  // M xi^-beta = N xi^beta
  if (xi_beta > 0.0 && xi_beta <= Z) {
    double v = h(xi_beta);
    if (v < best.h_value) {
      best = {xi_beta, XiChoice::Branch::beta_cross, v};
    }
  }
  return best;
}

namespace detail {

/// Exact comparison of a positive double x against a rational p/q with
/// p <= 2^24, q <= 2^28. Returns -1, 0, +1.
inline int cmp_rational(double x, std::int64_t p, std::int64_t q) {
  if (x >= 1.0) return 1;             // all breakpoints are < 1
  if (x <= 0x1p-40) return -1;        // far below every breakpoint
  int e = 0;
  double m = std::frexp(x, &e);       // x = m 2^e, m in [0.5, 1)
  auto mi = static_cast<__int128>(std::ldexp(m, 53));  // exact
  // x = mi 2^{e-53}, with e in [-39, 0]: compare mi*q against p*2^{53-e}
  __int128 lhs = mi * q;
  __int128 rhs = static_cast<__int128>(p) << (53 - e);
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

/// Breakpoint 2^{d-2} / (1 + (d-2) 2^{d-2}) as an exact rational.
inline void breakpoint(int d, std::int64_t& p, std::int64_t& q) {
  p = std::int64_t{1} << (d - 2);
  q = 1 + (d - 2) * p;
}

}  // namespace detail

inline constexpr int kOptimalDCap = 24;

/// The derivative order minimizing the exponent
/// max(-2 alpha/D, (1 - alpha d)/(D-2), -2/D): d = 2 for alpha > 2/3,
/// otherwise the d >= 3 whose breakpoint interval contains alpha.
/// Comparisons against the (non-dyadic) breakpoints are exact.
inline int optimal_d(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw domain_error("optimal_d: requires alpha > 0");
  }
  std::int64_t p = 0;
  std::int64_t q = 0;
  detail::breakpoint(3, p, q);  // 2/3
  if (detail::cmp_rational(alpha, p, q) > 0) return 2;
  for (int d = 3; d <= kOptimalDCap; ++d) {
    detail::breakpoint(d + 1, p, q);
    if (detail::cmp_rational(alpha, p, q) > 0) return d;
  }
  throw domain_error("optimal_d: alpha below the supported d = 24 breakpoint");
}

/// The least tau_0 satisfying
///   tau_0 >= d^{D/(alpha (D-2))},
///   tau_0^{2/D + (1-alpha d)/(D-2)} >= C^_d / M,
///   tau_0^{2 alpha/D + (1-alpha d)/(D-2)} >= A^_d / M,
/// each solved in closed form; requires alpha below the order-d breakpoint
/// and M >= B^_d. Result padded upward by 2^-40 relative.
inline double tau0_compute(int d, double alpha, double M,
                           Rounding r = Rounding::upward) {
  if (d < 2) throw domain_error("tau0_compute: requires d >= 2");
  const double D = std::ldexp(1.0, d);
  double breakpoint = std::ldexp(1.0, d - 2) / (1.0 + (d - 2) * std::ldexp(1.0, d - 2));
  if (!(alpha > 0.0) || !(alpha < breakpoint)) {
    throw hypothesis_error(
        "tau0_compute: requires 0 < alpha < 2^{d-2}/(1+(d-2)2^{d-2})");
  }
  Coefficients hc = hat_coeff(d, r);
  if (!(M >= hat_coeff(d, Rounding::nearest).B * (1.0 - 0x1p-40))) {
    throw hypothesis_error("tau0_compute: requires M >= hat B_d");
  }
  double mid = (1.0 - alpha * d) / (D - 2.0);
  double e1 = 2.0 / D + mid;
  double e2 = 2.0 * alpha / D + mid;
  // exponent positivity is guaranteed by the alpha hypothesis
  double t_a = std::exp(D * std::log(static_cast<double>(d)) /
                        (alpha * (D - 2.0)));
  double t_b = hc.C > M ? std::exp(std::log(hc.C / M) / e1) : 1.0;
  double t_c = hc.A > M ? std::exp(std::log(hc.A / M) / e2) : 1.0;
  return std::max({t_a, t_b, t_c}) * (1.0 + 0x1p-40);
}

}  // namespace vdc
