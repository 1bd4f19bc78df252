#pragma once

// Phase functions f with exact-enough evaluation of f(x) mod 1, certified
// derivative envelopes, and the iterated finite-difference representation.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <variant>
#include <vector>

#include "vdc/dd.hpp"
#include "vdc/error.hpp"
#include "vdc/window.hpp"

namespace vdc {

/// Certificate 0 < lambda <= f^(d)(x) <= Lambda (or the same for |f^(d)|
/// when the sign is constant; the exponential-sum bounds only see |f^(d)|).
struct DerivativeEnvelope {
  int d;
  double lambda;
  double Lambda;

  DerivativeEnvelope(int order, double lo, double hi)
      : d(order), lambda(lo), Lambda(hi) {
    if (d < 2) throw domain_error("envelope order d must be >= 2");
    if (!(lambda > 0.0) || !(lambda <= Lambda)) {
      throw domain_error("envelope requires 0 < lambda <= Lambda");
    }
  }

  /// D = 2^d.
  double big_D() const { return std::ldexp(1.0, d); }
};

/// Shift vector a = (a_1, ..., a_h), positive integers.
struct ShiftVector {
  std::vector<std::int64_t> a;

  explicit ShiftVector(std::vector<std::int64_t> shifts) : a(std::move(shifts)) {
    if (a.empty()) throw domain_error("shift vector must have h >= 1 entries");
    for (auto v : a) {
      if (v < 1) throw domain_error("all shifts must be >= 1");
    }
  }

  std::int64_t sum() const {
    return std::accumulate(a.begin(), a.end(), std::int64_t{0});
  }
  double product() const {
    double p = 1.0;
    for (auto v : a) p *= static_cast<double>(v);
    return p;
  }
};

enum class PhaseFamily { log_phase, monomial, polynomial, shifted_difference };

namespace families {

/// f(x) = (t/2pi) log x.
struct LogPhase {
  double t;
  dd t_over_2pi;  // cached
};

/// f(x) = c x^gamma.
struct Monomial {
  double c;
  double gamma;
};

/// f(x) = sum_k coeffs[k] x^k (ascending powers).
struct Polynomial {
  std::vector<double> coeffs;
};

using Base = std::variant<LogPhase, Monomial, Polynomial>;

}  // namespace families

/// Supported t cap for the log-phase family: past this the double-double
/// phase reduction can no longer promise 2^-40 absolute accuracy mod 1.
inline constexpr double kMaxLogPhaseT = 1e8;

class PhaseFunction {
 public:
  static PhaseFunction log_phase(double t) {
    if (!(std::fabs(t) <= kMaxLogPhaseT)) {
      throw resource_error("log-phase t exceeds the 1e8 precision cap");
    }
    PhaseFunction f;
    f.base_ = families::LogPhase{t, dd_div(dd{t, 0.0}, dd_two_pi)};
    f.family_ = PhaseFamily::log_phase;
    return f;
  }

  static PhaseFunction monomial(double c, double gamma) {
    PhaseFunction f;
    f.base_ = families::Monomial{c, gamma};
    f.family_ = PhaseFamily::monomial;
    return f;
  }

  static PhaseFunction polynomial(std::vector<double> coeffs) {
    PhaseFunction f;
    f.base_ = families::Polynomial{std::move(coeffs)};
    f.family_ = PhaseFamily::polynomial;
    return f;
  }

  static PhaseFunction zero() { return polynomial({}); }

  PhaseFamily family() const { return family_; }

  const std::optional<DerivativeEnvelope>& envelope() const { return env_; }
  void set_envelope(DerivativeEnvelope env) { env_ = env; }
  void clear_envelope() { env_ = std::nullopt; }

  /// Total shift span sum(a_j) accumulated by differencing; the natural
  /// domain of this function inside a window (X, X+Y] is (X, X+Y-span].
  double shift_span() const { return span_; }

  /// f(x) as a plain double (test/diagnostic use; not phase-accurate).
  double eval(double x) const {
    dd v = eval_dd(x);
    return v.hi + v.lo;
  }

  /// f(x) mod 1 in [0, 1), absolute error below 2^-40.
  double phase_mod1(double x) const { return dd_mod1(eval_dd(x)); }

  /// Exact closed-form derivative of the given order (sum over the shifted
  /// terms). order >= 1.
  double derivative(int order, double x) const {
    double s = 0.0;
    for (const auto& term : terms_) {
      s += term.sign * base_derivative(order, x + term.shift);
    }
    return s;
  }

  /// f_a: iterated finite difference along the shift vector, kept as the
  /// signed combination of shifted evaluations of the base function (2^h
  /// terms with coefficients +-1 indexed by subsets of a).
  friend PhaseFunction diff_function(const PhaseFunction& f,
                                     const ShiftVector& a);

 private:
  struct Term {
    double shift;
    double sign;  // +-1
  };

  dd eval_dd(double x) const {
    dd s{0.0, 0.0};
    for (const auto& term : terms_) {
      dd v = base_eval_dd(x + term.shift);
      s = term.sign > 0 ? dd_add(s, v) : dd_sub(s, v);
    }
    return s;
  }

  dd base_eval_dd(double x) const {
    if (const auto* lp = std::get_if<families::LogPhase>(&base_)) {
      return dd_mul(lp->t_over_2pi, dd_log(x));
    }
    if (const auto* mo = std::get_if<families::Monomial>(&base_)) {
      if (!(x > 0.0)) throw domain_error("monomial phase requires x > 0");
      return dd_mul(dd_pow(x, mo->gamma), mo->c);
    }
    const auto& coeffs = std::get<families::Polynomial>(base_).coeffs;
    dd p{0.0, 0.0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      p = dd_add(dd_mul(p, x), *it);
    }
    return p;
  }

  double base_derivative(int order, double x) const {
    if (order < 1) throw domain_error("derivative order must be >= 1");
    if (const auto* lp = std::get_if<families::LogPhase>(&base_)) {
      // f^(k)(x) = (-1)^(k+1) t (k-1)! / (2 pi x^k)
      double fact = 1.0;
      for (int i = 2; i < order; ++i) fact *= i;
      double v = lp->t * fact / (2.0 * M_PI * std::pow(x, order));
      return (order % 2 == 1) ? v : -v;
    }
    if (const auto* mo = std::get_if<families::Monomial>(&base_)) {
      double coef = mo->c;
      for (int i = 0; i < order; ++i) coef *= (mo->gamma - i);
      return coef * std::pow(x, mo->gamma - order);
    }
    const auto& coeffs = std::get<families::Polynomial>(base_).coeffs;
    double s = 0.0;
    for (std::size_t k = static_cast<std::size_t>(order); k < coeffs.size();
         ++k) {
      double coef = coeffs[k];
      for (std::size_t i = 0; i < static_cast<std::size_t>(order); ++i) {
        coef *= static_cast<double>(k - i);
      }
      s += coef * std::pow(x, static_cast<double>(k) - order);
    }
    return s;
  }

  families::Base base_ = families::Polynomial{};
  std::vector<Term> terms_{{0.0, 1.0}};
  std::optional<DerivativeEnvelope> env_;
  PhaseFamily family_ = PhaseFamily::polynomial;
  double span_ = 0.0;
};

inline PhaseFunction diff_function(const PhaseFunction& f,
                                   const ShiftVector& a) {
  PhaseFunction g = f;
  g.family_ = PhaseFamily::shifted_difference;
  for (auto aj : a.a) {
    std::vector<PhaseFunction::Term> next;
    next.reserve(2 * g.terms_.size());
    for (const auto& t : g.terms_) {
      next.push_back({t.shift + static_cast<double>(aj), t.sign});
      next.push_back({t.shift, -t.sign});
    }
    g.terms_ = std::move(next);
  }
  g.span_ = f.span_ + static_cast<double>(a.sum());

  // Envelope propagation via the integral representation: an order-(2+h)
  // envelope on f gives an order-2 envelope lambda*prod(a) .. Lambda*prod(a)
  // on f_a.
  g.env_.reset();
  if (f.env_ && f.env_->d == 2 + static_cast<int>(a.a.size())) {
    double p = a.product();
    g.env_ = DerivativeEnvelope(2, f.env_->lambda * p, f.env_->Lambda * p);
  }
  return g;
}

}  // namespace vdc
