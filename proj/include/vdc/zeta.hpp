#pragma once

// Zeta-sum applications: direct oracles for S(X,t) and S_sigma(X,t),
// the derivative-estimate bounds for them, and the critical-line bound.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "vdc/constants.hpp"
#include "vdc/dd.hpp"
#include "vdc/error.hpp"
#include "vdc/numkernel.hpp"

namespace vdc {

inline constexpr double kMaxZetaX = 1e6;    // direct-sum term cap
inline constexpr double kMaxZetaT = 1e8;    // phase-precision cap

/// Parameters of a zeta partial sum: X = tau^alpha with tau = t/(2 pi),
/// weights n^{-sigma-it}.
struct ZetaSumSpec {
  double t;
  double alpha;
  double sigma = 0.0;

  ZetaSumSpec(double t_, double alpha_, double sigma_ = 0.0)
      : t(t_), alpha(alpha_), sigma(sigma_) {
    if (!(t > 2.0 * kPi()) || !std::isfinite(t)) {
      throw domain_error("ZetaSumSpec: requires t > 2*pi");
    }
    if (!(alpha > 0.0)) throw domain_error("ZetaSumSpec: requires alpha > 0");
    if (!(sigma >= 0.0)) throw domain_error("ZetaSumSpec: requires sigma >= 0");
  }

  double tau() const { return t / (2.0 * kPi()); }
  double X() const { return std::pow(tau(), alpha); }

 private:
  static double kPi() { return 3.141592653589793238462643383279502884; }
};

namespace detail {

/// n^{-it} with ~2^-70 phase accuracy: angle reduced mod 2 pi in
/// double-double via t/(2 pi) * ln n mod 1.
inline std::complex<double> n_pow_minus_it(dd t_over_2pi, std::int64_t n) {
  double frac = dd_mod1(dd_mul(t_over_2pi, dd_log(static_cast<double>(n))));
  double ang = 2.0 * 3.141592653589793 * frac;
  return {std::cos(ang), -std::sin(ang)};
}

}  // namespace detail

/// S(X,t) for sigma = 0, S_sigma(X,t) for sigma > 0: the running maximum of
/// |sum_{X < n <= Z} n^{-sigma-it}| over integer endpoints Z in (X, 2X].
inline double zeta_S_direct(const ZetaSumSpec& spec) {
  double X = spec.X();
  if (!(X <= kMaxZetaX)) {
    throw resource_error("zeta_S_direct: X exceeds the 1e6 term cap");
  }
  if (!(spec.t <= kMaxZetaT)) {
    throw resource_error("zeta_S_direct: t exceeds the 1e8 phase cap");
  }
  auto n0 = static_cast<std::int64_t>(std::floor(X)) + 1;
  auto n1 = static_cast<std::int64_t>(std::floor(2.0 * X));
  if (n1 < n0) return 0.0;
  dd t_over_2pi = dd_div(dd{spec.t, 0.0}, dd_two_pi);
  detail::CompensatedSum re;
  detail::CompensatedSum im;
  double best = 0.0;
  for (std::int64_t n = n0; n <= n1; ++n) {
    std::complex<double> term = detail::n_pow_minus_it(t_over_2pi, n);
    if (spec.sigma > 0.0) {
      term *= std::pow(static_cast<double>(n), -spec.sigma);
    }
    re.add(term.real());
    im.add(term.imag());
    best = std::max(best, std::hypot(re.value(), im.value()));
  }
  return best;
}

/// Proposition bound S(tau^alpha, t) <= tau^alpha * max{A^_d tau^{-2 alpha/D},
/// B^_d tau^{(1-alpha d)/(D-2)}, C^_d tau^{-2/D}}; requires X^{1-2/D} >= d.
inline double zeta_S_bound(const ZetaSumSpec& spec, int d,
                           Rounding r = Rounding::upward) {
  if (d < 2) throw domain_error("zeta_S_bound: requires d >= 2");
  double tau = spec.tau();
  double X = spec.X();
  double D = std::ldexp(1.0, d);
  if (!(std::pow(X, 1.0 - 2.0 / D) >= static_cast<double>(d))) {
    throw hypothesis_error("zeta_S_bound: requires X^(1-2/D) >= d");
  }
  Coefficients hc = hat_coeff(d, r);
  double mid = (1.0 - spec.alpha * d) / (D - 2.0);
  double m = std::max({hc.A * std::pow(tau, -2.0 * spec.alpha / D),
                       hc.B * std::pow(tau, mid),
                       hc.C * std::pow(tau, -2.0 / D)});
  return std::pow(tau, spec.alpha) * m;
}

/// The d = 2 form S(tau^alpha, t) <= 2A (tau^{1/2} + 2 tau^{alpha - 1/2}).
inline double zeta_S_d2_bound(const ZetaSumSpec& spec,
                              Rounding r = Rounding::upward) {
  double tau = spec.tau();
  double A = const_A(r);
  return 2.0 * A *
         (std::sqrt(tau) + 2.0 * std::pow(tau, spec.alpha - 0.5));
}

/// S_sigma(X,t) <= X^{-sigma} S(X,t) by partial summation.
inline double partial_sigma_bound(const ZetaSumSpec& spec, double S_bound) {
  if (!(spec.sigma > 0.0)) {
    throw domain_error("partial_sigma_bound: requires sigma > 0");
  }
  return std::pow(spec.X(), -spec.sigma) * S_bound;
}

/// Dyadic decomposition of (tau^{1/3}, tau^{1/2}]: the least K with
/// 2^{-K} tau^{1/2} < tau^{1/3}, equivalently 2^{6(K-1)} <= tau < 2^{6K},
/// and the block exponents alpha_k = 1/2 - k ln2/ln tau.
struct DyadicBlocks {
  int K;
  std::vector<double> alphas;
};

inline DyadicBlocks dyadic_blocks(double tau) {
  if (!(tau > 1.0)) throw domain_error("dyadic_blocks: requires tau > 1");
  int K = static_cast<int>(std::floor(std::log2(tau) / 6.0)) + 1;
  if (K < 1) K = 1;
  // powers of two are exact in double, so fix up boundary rounding exactly
  while (tau >= std::ldexp(1.0, 6 * K)) ++K;
  while (K > 1 && tau < std::ldexp(1.0, 6 * (K - 1))) --K;
  DyadicBlocks blocks;
  blocks.K = K;
  double ln_tau = std::log(tau);
  blocks.alphas.reserve(K);
  for (int k = 1; k <= K; ++k) {
    blocks.alphas.push_back(0.5 - k * dd_ln2.hi / ln_tau);
  }
  return blocks;
}

/// The three tau thresholds of the critical-line proof for d = 3:
/// 2^3 3^4, (C^_3/B^_3)^6/2^3, and (A^_3/B^_3)^24/2^6.
struct CriticalThresholds {
  double hypothesis;  // 2^3 3^4 = 648
  double c_ratio;
  double a_ratio;
};

inline CriticalThresholds critical_line_thresholds(
    Rounding r = Rounding::nearest) {
  Coefficients hc = hat_coeff(3, r);
  CriticalThresholds out;
  out.hypothesis = 8.0 * 81.0;
  out.c_ratio = std::pow(hc.C / hc.B, 6.0) / 8.0;
  out.a_ratio = std::pow(hc.A / hc.B, 24.0) / 64.0;
  return out;
}

inline constexpr double kCriticalTauMin = 648.0;
inline constexpr double kCriticalCoeffLog = 1.89725;   // >= B^_3/(6 ln 2)
inline constexpr double kCriticalCoeffConst = 9.89044; // >= 2 + B^_3
inline constexpr double kCriticalCoeffLogT = 1.39668;
inline constexpr double kCriticalCoeffConstT = 4.71400;

/// |sum_{n <= tau^{1/2}} n^{-1/2-it}| <= 1.89725 tau^{1/6} ln tau
/// + 9.89044 tau^{1/6} for tau >= 648.
inline double zeta_critical_bound(double t) {
  double tau = t / (2.0 * 3.141592653589793238462643383279502884);
  if (!(tau >= kCriticalTauMin)) {
    throw hypothesis_error("zeta_critical_bound: requires t/(2 pi) >= 648");
  }
  // reproduce the proof's shape: a 2 tau^{1/6} head plus B^_3 per dyadic
  // block, with K <= 1 + ln tau / (6 ln 2); the published coefficients
  // must dominate it
  DyadicBlocks blocks = dyadic_blocks(tau);
  double ln_tau = std::log(tau);
  if (!(blocks.K <= 1.0 + ln_tau / (6.0 * dd_ln2.hi) + 1e-9)) {
    throw error("zeta_critical_bound: dyadic block count exceeds proof cap");
  }
  double sixth = std::pow(tau, 1.0 / 6.0);
  double hatB3 = hat_coeff(3, Rounding::nearest).B;
  double proof_form = 2.0 * sixth + hatB3 * blocks.K * sixth;
  double bound = kCriticalCoeffLog * sixth * ln_tau + kCriticalCoeffConst * sixth;
  if (!(proof_form <= bound * (1.0 + 1e-12))) {
    throw error("zeta_critical_bound: coefficient domination failed");
  }
  return bound;
}

/// The Remark's t-form: 1.39668 t^{1/6} ln t + 4.71400 t^{1/6}.
inline double zeta_critical_bound_t_form(double t) {
  double tau = t / (2.0 * 3.141592653589793238462643383279502884);
  if (!(tau >= kCriticalTauMin)) {
    throw hypothesis_error(
        "zeta_critical_bound_t_form: requires t/(2 pi) >= 648");
  }
  double sixth = std::pow(t, 1.0 / 6.0);
  return kCriticalCoeffLogT * sixth * std::log(t) + kCriticalCoeffConstT * sixth;
}

/// Direct oracle for the critical-line sum: |sum_{n <= tau^{1/2}} n^{-1/2-it}|.
inline double zeta_critical_direct(double t) {
  double tau = t / (2.0 * 3.141592653589793238462643383279502884);
  double N = std::sqrt(tau);
  if (!(N <= kMaxZetaX)) {
    throw resource_error("zeta_critical_direct: too many terms");
  }
  if (!(t <= kMaxZetaT)) {
    throw resource_error("zeta_critical_direct: t exceeds the 1e8 phase cap");
  }
  dd t_over_2pi = dd_div(dd{t, 0.0}, dd_two_pi);
  detail::CompensatedSum re;
  detail::CompensatedSum im;
  auto n1 = static_cast<std::int64_t>(std::floor(N));
  for (std::int64_t n = 1; n <= n1; ++n) {
    std::complex<double> term = detail::n_pow_minus_it(t_over_2pi, n);
    term *= 1.0 / std::sqrt(static_cast<double>(n));
    re.add(term.real());
    im.add(term.imag());
  }
  return std::hypot(re.value(), im.value());
}

}  // namespace vdc
