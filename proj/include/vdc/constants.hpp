#pragma once

// Closed forms of every explicit constant: A, B, the per-order coefficients
// (A_d, B_d, C_d), their hatted zeta-sum versions, and the two reference
// tables. Exponentials with 2^(2^d)-sized factors are evaluated in log
// space.

#include <cmath>
#include <string>
#include <vector>

#include "vdc/error.hpp"

namespace vdc {

enum class Rounding { nearest, upward };

namespace detail {

/// Upward mode pads by one part in 2^40; portable stand-in for directed
/// rounding, far below the 3-decimal reporting granularity.
inline double pad(double v, Rounding r) {
  return r == Rounding::upward ? v * (1.0 + 0x1p-40) : v;
}

inline double ln_factorial(int n) {
  if (n <= 25) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return std::log(f);
  }
  return std::lgamma(static_cast<double>(n) + 1.0);
}

}  // namespace detail

/// A = (2/sqrt(pi)) (1 + sqrt(1 + 3pi/8)) = 2.79368380731...
inline double const_A(Rounding r = Rounding::nearest) {
  double a = 2.0 / std::sqrt(M_PI) * (1.0 + std::sqrt(1.0 + 3.0 * M_PI / 8.0));
  return detail::pad(a, r);
}

/// B = 2 + 2 sqrt(2) = 4.8284271247..., the constant with
/// 4/H + 4T <= max(B^2/H, BT).
inline double const_B(Rounding r = Rounding::nearest) {
  return detail::pad(2.0 + 2.0 * std::sqrt(2.0), r);
}

struct Coefficients {
  double A;
  double B;
  double C;
};

/// (A_d, B_d, C_d) of the d-th derivative theorem; d = 2 uses the two-term
/// second-derivative case (A_2 = 0, B_2 = 2^{1/4} B,
/// C_2 = 2^{5/4} A B / (2^{1/4} B - A)).
inline Coefficients coeff(int d, Rounding r = Rounding::nearest) {
  if (d < 2) throw domain_error("coeff: requires d >= 2");
  const double A = const_A(Rounding::nearest);
  const double B = const_B(Rounding::nearest);
  if (d == 2) {
    double b2 = std::pow(2.0, 0.25) * B;
    double c2 = std::pow(2.0, 1.25) * A * B / (std::pow(2.0, 0.25) * B - A);
    return {0.0, detail::pad(b2, r), detail::pad(c2, r)};
  }
  const double D = std::ldexp(1.0, d);
  double a_d = B * std::sqrt(2.0) * std::pow(d - 2.0, 2.0 / D);
  // B_d = B ((81/8)(2/3)^{2d} 2^{D/4} A^2 B^{-2})^{1/(D-2)}
  double ln_inner = std::log(81.0 / 8.0) + 2.0 * d * std::log(2.0 / 3.0) +
                    (D / 4.0) * std::log(2.0) + 2.0 * std::log(A) -
                    2.0 * std::log(B);
  double b_d = B * std::exp(ln_inner / (D - 2.0));
  double c_d = B * std::pow(A * D / B, 4.0 / D) *
               std::pow(d - 2.0, 2.0 * (d - 2.0) / D);
  return {detail::pad(a_d, r), detail::pad(b_d, r), detail::pad(c_d, r)};
}

/// A'_d = B (3^2 2^{-1} (2/3)^d A^2 B^{-2} D)^{2/D}, d >= 3; always <= A_d.
inline double coeff_prime_A(int d, Rounding r = Rounding::nearest) {
  if (d < 3) throw domain_error("coeff_prime_A: requires d >= 3");
  const double A = const_A(Rounding::nearest);
  const double B = const_B(Rounding::nearest);
  const double D = std::ldexp(1.0, d);
  double ln_inner = std::log(4.5) + d * std::log(2.0 / 3.0) +
                    2.0 * std::log(A) - 2.0 * std::log(B) + std::log(D);
  return detail::pad(B * std::exp(2.0 * ln_inner / D), r);
}

/// Hatted coefficients of the zeta-sum bound:
/// A^ = 2^{2d/D} A_d, B^ = ((d-1)! D)^{1/(D-2)} B_d,
/// C^ = ((d-1)!/D)^{-2/D} C_d.
inline Coefficients hat_coeff(int d, Rounding r = Rounding::nearest) {
  if (d < 2) throw domain_error("hat_coeff: requires d >= 2");
  Coefficients c = coeff(d, Rounding::nearest);
  const double D = std::ldexp(1.0, d);
  double lf = detail::ln_factorial(d - 1);
  double a_hat = std::pow(2.0, 2.0 * d / D) * c.A;
  double b_hat = std::exp((lf + d * std::log(2.0)) / (D - 2.0)) * c.B;
  double c_hat = std::exp(-2.0 / D * (lf - d * std::log(2.0))) * c.C;
  return {detail::pad(a_hat, r), detail::pad(b_hat, r), detail::pad(c_hat, r)};
}

/// Smallest 3-decimal value >= x (tables report upper bounds).
inline double round_up_3(double x) { return std::ceil(x * 1000.0) / 1000.0; }

enum class Table { table1, table2 };

struct TableRow {
  int d;           // 0 in the limit row
  bool is_limit;
  double A;
  double B;
  double C;
};

/// Rows d = 2..d_max plus the limit (">21") row, entries rounded up at 3
/// decimals.
inline std::vector<TableRow> emit_table(Table which, int d_max,
                                        Rounding r = Rounding::nearest) {
  if (d_max < 2) throw domain_error("emit_table: requires d_max >= 2");
  std::vector<TableRow> rows;
  for (int d = 2; d <= d_max; ++d) {
    Coefficients c = which == Table::table1 ? coeff(d, r) : hat_coeff(d, r);
    rows.push_back(
        {d, false, round_up_3(c.A), round_up_3(c.B), round_up_3(c.C)});
  }
  if (which == Table::table1) {
    // limits: A_d -> B sqrt(2), B_d -> B 2^{1/4} (from below), C_d -> B
    double B = const_B(r);
    rows.push_back({0, true, round_up_3(B * std::sqrt(2.0)),
                    round_up_3(B * std::pow(2.0, 0.25)), round_up_3(B)});
  } else {
    // hatted coefficients approach the same limits from above; the d = 22
    // values dominate everything past the table.
    Coefficients c = hat_coeff(22, r);
    rows.push_back({0, true, round_up_3(c.A), round_up_3(c.B), round_up_3(c.C)});
  }
  return rows;
}

}  // namespace vdc
