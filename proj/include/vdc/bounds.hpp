#pragma once

// The explicit exponential-sum bounds, each as a function of a derivative
// envelope and a window length. Bound evaluators use upward-rounded
// constants by default and never clamp values above 1: the trivial bound is
// the caller's concern.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <span>
#include <string>
#include <vector>

#include "vdc/constants.hpp"
#include "vdc/error.hpp"
#include "vdc/phase.hpp"

namespace vdc {

/// The three competing terms of the d-th derivative bound and which one is
/// active. For d = 2 the first term is identically 0.
struct BoundBreakdown {
  enum class Active { first, second, third };

  int d = 0;
  double term_first = 0.0;
  double term_second = 0.0;
  double term_third = 0.0;
  double value = 0.0;
  Active active = Active::first;

  double big_D() const { return std::ldexp(1.0, d); }
};

inline const char* to_string(BoundBreakdown::Active a) {
  switch (a) {
    case BoundBreakdown::Active::first: return "first";
    case BoundBreakdown::Active::second: return "second";
    default: return "third";
  }
}

inline std::string to_json(const BoundBreakdown& b) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "{\"d\":%d,\"D\":%.12g,\"term_first\":%.12g,"
                "\"term_second\":%.12g,\"term_third\":%.12g,"
                "\"value\":%.12g,\"active\":\"%s\"}",
                b.d, b.big_D(), b.term_first, b.term_second, b.term_third,
                b.value, to_string(b.active));
  return buf;
}

namespace detail {

inline BoundBreakdown make_breakdown(int d, double t1, double t2, double t3) {
  BoundBreakdown b;
  b.d = d;
  b.term_first = t1;
  b.term_second = t2;
  b.term_third = t3;
  b.value = std::max({t1, t2, t3});
  b.active = BoundBreakdown::Active::third;
  if (b.value == t2) b.active = BoundBreakdown::Active::second;
  if (b.value == t1) b.active = BoundBreakdown::Active::first;
  return b;
}

}  // namespace detail

/// Kusmin-Landau: |sum e(f(n))| <= cot(pi theta / 2) when
/// theta <= f'(x) <= 1 - theta with monotone f'.
inline double kusmin_landau(double theta) {
  if (!(theta > 0.0) || !(theta <= 0.5)) {
    throw domain_error("kusmin_landau: requires 0 < theta <= 1/2");
  }
  return 1.0 / std::tan(M_PI * theta / 2.0);
}

/// Second-derivative bound (Lambda Y + 2)(1 + 4/sqrt(pi lambda)) + 1.
inline double second_derivative_bound_additive(const DerivativeEnvelope& env,
                                               double Y) {
  if (env.d != 2) throw domain_error("bound requires an order-2 envelope");
  if (!(Y > 0.0)) throw invalid_window_error("Y must be positive");
  return (env.Lambda * Y + 2.0) * (1.0 + 4.0 / std::sqrt(M_PI * env.lambda)) +
         1.0;
}

/// van der Corput's version: (A/sqrt(lambda)) (Lambda Y + 2), for Y >= 1.
inline double second_derivative_bound_A(const DerivativeEnvelope& env,
                                        double Y,
                                        Rounding r = Rounding::upward) {
  if (env.d != 2) throw domain_error("bound requires an order-2 envelope");
  if (!(Y >= 1.0)) throw hypothesis_error("bound requires Y >= 1");
  return const_A(r) / std::sqrt(env.lambda) * (env.Lambda * Y + 2.0);
}

/// Two-term mean bound max{B_2 (Lambda^2/lambda)^{1/2}, C_2 (lambda Y^2)^{-1/2}}.
inline BoundBreakdown d2_mean_bound(const DerivativeEnvelope& env, double Y,
                                    Rounding r = Rounding::upward) {
  if (env.d != 2) throw domain_error("bound requires an order-2 envelope");
  if (!(Y >= 1.0)) throw hypothesis_error("bound requires Y >= 1");
  Coefficients c = coeff(2, r);
  double t2 = c.B * std::sqrt(env.Lambda * env.Lambda / env.lambda);
  double t3 = c.C / std::sqrt(env.lambda * Y * Y);
  return detail::make_breakdown(2, 0.0, t2, t3);
}

/// Right-hand side of the Weyl-van der Corput inequality for an explicit
/// complex sequence with |seq_n| <= 1 over the integers of (X, X+Y]:
///   4/H + (4/(H Y)) Re( (1/H) sum_{a=1}^{H-1} (H-a) sum_n seq[n+a] conj(seq[n]) ).
/// The left-hand side it dominates is |sum(seq)/Y|^2.
inline double wvdc_rhs(std::span<const std::complex<double>> seq, double Y,
                       int H) {
  if (H < 1 || static_cast<double>(H) > Y) {
    throw hypothesis_error("wvdc_rhs: requires 1 <= H <= Y");
  }
  double corr = 0.0;
  const std::size_t len = seq.size();
  for (int a = 1; a < H; ++a) {
    std::complex<double> s{0.0, 0.0};
    for (std::size_t n = 0; n + a < len; ++n) {
      s += seq[n + a] * std::conj(seq[n]);
    }
    corr += (H - a) * s.real();
  }
  return 4.0 / H + 4.0 / (H * Y) * (corr / H);
}

/// RHS of the induction theorem:
///   B max(H_1^{-1/2}, ..., H_d^{-1/2^d}, B^{-1/2^d} T_d^{1/2^d}).
inline double induction_rhs(const std::vector<std::int64_t>& H, double T_d,
                            Rounding r = Rounding::upward) {
  if (H.empty()) throw domain_error("induction_rhs: H must be non-empty");
  if (!(T_d >= 0.0)) throw domain_error("induction_rhs: T_d must be >= 0");
  double B = const_B(r);
  double m = 0.0;
  double e = 1.0;
  for (auto h : H) {
    if (h < 1) throw domain_error("induction_rhs: each H_r must be >= 1");
    e *= 0.5;
    m = std::max(m, std::pow(static_cast<double>(h), -e));
  }
  m = std::max(m, std::pow(B, -e) * std::pow(T_d, e));
  return B * m;
}

/// The defining property of B: 4/H + 4T <= max(B^2/H, BT).
/// (Equality holds on the case-split boundary; a one-ulp-scale slack keeps
/// the comparison meaningful there.)
inline bool b_property_check(std::int64_t H, double T) {
  if (H < 1) throw domain_error("b_property_check: requires H >= 1");
  if (!(T >= 0.0)) throw domain_error("b_property_check: requires T >= 0");
  double B = const_B(Rounding::nearest);
  double lhs = 4.0 / H + 4.0 * T;
  double rhs = std::max(B * B / H, B * T);
  return lhs <= rhs * (1.0 + 0x1p-45);
}

/// The d-th derivative theorem bound
///   max{A_d (Lambda/(lambda Y))^{2/D}, B_d (Lambda^2/lambda)^{1/(D-2)},
///       C_d (lambda Y^d)^{-2/D}},
/// for d >= 3 with floor(Y) > d; d = 2 delegates to the two-term form.
inline BoundBreakdown vdc_dth_bound(const DerivativeEnvelope& env, double Y,
                                    Rounding r = Rounding::upward) {
  if (env.d == 2) return d2_mean_bound(env, Y, r);
  if (!(std::floor(Y) > env.d)) {
    throw hypothesis_error("vdc_dth_bound: requires floor(Y) > d");
  }
  Coefficients c = coeff(env.d, r);
  const double D = env.big_D();
  double t1 = c.A * std::pow(env.Lambda / (env.lambda * Y), 2.0 / D);
  double t2 = c.B * std::pow(env.Lambda * env.Lambda / env.lambda,
                             1.0 / (D - 2.0));
  double t3 = c.C * std::pow(env.lambda * std::pow(Y, env.d), -2.0 / D);
  return detail::make_breakdown(env.d, t1, t2, t3);
}

/// C_4 = 2 (2 A B^3)^{1/4} <= 10.016, the supremum of the theorem's
/// coefficients over d >= 4.
inline double titchmarsh_C4(Rounding r = Rounding::upward) {
  double A = const_A(Rounding::nearest);
  double B = const_B(Rounding::nearest);
  return detail::pad(2.0 * std::pow(2.0 * A * B * B * B, 0.25), r);
}

/// Titchmarsh-style two-term form:
///   C_4 max{(Lambda/lambda)^{4/D} lambda^{1/(D-2)}, Y^{-4/D} lambda^{-1/(D-2)}}.
inline double titchmarsh_bound(const DerivativeEnvelope& env, double Y,
                               Rounding r = Rounding::upward) {
  if (env.d < 4) throw domain_error("titchmarsh_bound: requires d >= 4");
  if (!(Y > env.d)) throw hypothesis_error("titchmarsh_bound: requires Y > d");
  const double D = env.big_D();
  double t1 = std::pow(env.Lambda / env.lambda, 4.0 / D) *
              std::pow(env.lambda, 1.0 / (D - 2.0));
  double t2 = std::pow(Y, -4.0 / D) * std::pow(env.lambda, -1.0 / (D - 2.0));
  return titchmarsh_C4(r) * std::max(t1, t2);
}

}  // namespace vdc
