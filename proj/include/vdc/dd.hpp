#pragma once

// Minimal double-double (~106-bit) arithmetic. Used for phase evaluation
// mod 1 where a plain double loses too many bits to the integer part.

#include <cmath>
#include <limits>

#include "vdc/error.hpp"

namespace vdc {

struct dd {
  double hi = 0.0;
  double lo = 0.0;
};

namespace detail {

inline dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

// requires |a| >= |b|
inline dd quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

}  // namespace detail

inline dd dd_add(dd a, dd b) {
  dd s = detail::two_sum(a.hi, b.hi);
  return detail::quick_two_sum(s.hi, s.lo + a.lo + b.lo);
}

inline dd dd_add(dd a, double b) {
  dd s = detail::two_sum(a.hi, b);
  return detail::quick_two_sum(s.hi, s.lo + a.lo);
}

inline dd dd_neg(dd a) { return {-a.hi, -a.lo}; }

inline dd dd_sub(dd a, dd b) { return dd_add(a, dd_neg(b)); }

inline dd dd_mul(dd a, dd b) {
  dd p = detail::two_prod(a.hi, b.hi);
  return detail::quick_two_sum(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}

inline dd dd_mul(dd a, double b) {
  dd p = detail::two_prod(a.hi, b);
  return detail::quick_two_sum(p.hi, p.lo + a.lo * b);
}

inline dd dd_div(dd a, dd b) {
  double q1 = a.hi / b.hi;
  dd r = dd_sub(a, dd_mul(b, q1));
  double q2 = r.hi / b.hi;
  r = dd_sub(r, dd_mul(b, q2));
  double q3 = r.hi / b.hi;
  return dd_add(detail::quick_two_sum(q1, q2), q3);
}

inline dd dd_div(dd a, double b) { return dd_div(a, dd{b, 0.0}); }

inline constexpr dd dd_two_pi{6.283185307179586, 2.4492935982947064e-16};
inline constexpr dd dd_ln2{0.6931471805599453, 2.3190468138462996e-17};

/// log(x) to double-double accuracy, x > 0 finite.
inline dd dd_log(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw domain_error("dd_log: argument must be positive and finite");
  }
  if (x == 1.0) return {0.0, 0.0};
  int k = 0;
  double m = std::frexp(x, &k);  // m in [0.5, 1)
  if (m < 0.7071067811865476) {
    m *= 2.0;
    k -= 1;
  }
  // m in [1/sqrt(2), sqrt(2)); log m = 2 atanh(z), z = (m-1)/(m+1).
  // m - 1 is exact (Sterbenz), |z| <= 0.1716.
  dd z = dd_div(dd{m - 1.0, 0.0}, detail::two_sum(m, 1.0));
  dd zz = dd_mul(z, z);
  dd term = z;
  dd sum = z;
  for (int i = 3; i < 60; i += 2) {
    term = dd_mul(term, zz);
    sum = dd_add(sum, dd_div(term, static_cast<double>(i)));
    if (std::fabs(term.hi) < 1e-35) break;
  }
  return dd_add(dd_mul(sum, 2.0), dd_mul(dd_ln2, static_cast<double>(k)));
}

/// exp(a) to double-double accuracy, |a| < 690.
inline dd dd_exp(dd a) {
  if (!(std::fabs(a.hi) < 690.0)) {
    throw domain_error("dd_exp: argument out of range");
  }
  double k = std::nearbyint(a.hi / dd_ln2.hi);
  dd r = dd_sub(a, dd_mul(dd_ln2, k));  // |r| <= ln2/2 + eps
  dd term = r;
  dd sum = dd_add(r, 1.0);
  for (int i = 2; i < 40; ++i) {
    term = dd_div(dd_mul(term, r), static_cast<double>(i));
    sum = dd_add(sum, term);
    if (std::fabs(term.hi) < 1e-35) break;
  }
  int ki = static_cast<int>(k);
  return {std::ldexp(sum.hi, ki), std::ldexp(sum.lo, ki)};
}

/// x^g for x > 0.
inline dd dd_pow(double x, double g) { return dd_exp(dd_mul(dd_log(x), g)); }

/// Fractional part of a double-double value, collapsed to a double in [0, 1).
inline double dd_mod1(dd a) {
  double f = a.hi - std::floor(a.hi);  // exact
  double y = f + a.lo;
  y -= std::floor(y);
  if (y >= 1.0) y -= 1.0;
  if (y < 0.0) y += 1.0;
  return y;
}

}  // namespace vdc
