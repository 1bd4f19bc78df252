#pragma once

// Brute-force exponential-sum evaluation: the trusted oracle every bound in
// the library is certified against.

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <future>
#include <vector>

#include "vdc/phase.hpp"
#include "vdc/window.hpp"

namespace vdc {

namespace detail {

/// Kahan-Babuska (Neumaier) compensated accumulator.
class CompensatedSum {
 public:
  void add(double v) {
    double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline std::complex<double> sum_range(const PhaseFunction& f, std::int64_t n0,
                                      std::int64_t n1) {
  CompensatedSum re, im;
  for (std::int64_t n = n0; n <= n1; ++n) {
    double phase = f.phase_mod1(static_cast<double>(n));
    double angle = 2.0 * M_PI * phase;
    re.add(std::cos(angle));
    im.add(std::sin(angle));
  }
  return {re.value(), im.value()};
}

}  // namespace detail

/// Sum_{X < n <= X+Y} e(f(n)), deterministic left-to-right compensated
/// summation. A window containing no integers gives exactly 0.
inline std::complex<double> exp_sum(const PhaseFunction& f, Window w) {
  w.require_valid();
  if (w.integer_count() == 0) return {0.0, 0.0};
  return detail::sum_range(f, w.first(), w.last());
}

/// Chunked variant: the range is split into fixed-size chunks summed
/// independently (possibly on several threads) and reduced in index order,
/// so the result is bit-reproducible for a fixed chunk size regardless of
/// the thread count.
inline std::complex<double> exp_sum_parallel(const PhaseFunction& f, Window w,
                                             int threads,
                                             std::int64_t chunk = 1 << 16) {
  w.require_valid();
  std::int64_t count = w.integer_count();
  if (count == 0) return {0.0, 0.0};
  std::int64_t n0 = w.first();
  std::int64_t nchunks = (count + chunk - 1) / chunk;
  std::vector<std::complex<double>> partial(nchunks);
  if (threads <= 1 || nchunks == 1) {
    for (std::int64_t c = 0; c < nchunks; ++c) {
      std::int64_t a = n0 + c * chunk;
      std::int64_t b = std::min(a + chunk - 1, w.last());
      partial[c] = detail::sum_range(f, a, b);
    }
  } else {
    std::vector<std::future<void>> jobs;
    std::int64_t per = (nchunks + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      std::int64_t c0 = t * per;
      std::int64_t c1 = std::min(c0 + per, nchunks);
      if (c0 >= c1) break;
      jobs.push_back(std::async(std::launch::async, [&, c0, c1] {
        for (std::int64_t c = c0; c < c1; ++c) {
          std::int64_t a = n0 + c * chunk;
          std::int64_t b = std::min(a + chunk - 1, w.last());
          partial[c] = detail::sum_range(f, a, b);
        }
      }));
    }
    for (auto& j : jobs) j.get();
  }
  // fixed pairwise reduction in index order
  while (partial.size() > 1) {
    std::vector<std::complex<double>> next;
    next.reserve((partial.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < partial.size(); i += 2) {
      next.push_back(partial[i] + partial[i + 1]);
    }
    if (partial.size() % 2 == 1) next.push_back(partial.back());
    partial = std::move(next);
  }
  return partial[0];
}

/// Thread count from the VDC_THREADS environment variable (default 1).
inline int env_thread_count() {
  if (const char* s = std::getenv("VDC_THREADS")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  return 1;
}

/// |E(f)| = |exp_sum| / Y, the mean exponential sum.
inline double mean_exp_sum(const PhaseFunction& f, Window w) {
  return std::abs(exp_sum(f, w)) / w.Y;
}

/// T_d of the induction theorem: exact enumeration over all shift vectors a
/// with 1 <= a_r <= H_r - 1 of |sum_{n in I(a)} e(f_a(n))|, normalized by
/// Y * H_1 ... H_d. Any H_r = 1 empties the index set and gives 0.
inline double brute_T_d(const PhaseFunction& f, Window w,
                        const std::vector<std::int64_t>& H) {
  w.require_valid();
  if (H.empty()) throw domain_error("brute_T_d: H must be non-empty");
  double h_sum = 0.0;
  double h_prod = 1.0;
  for (auto h : H) {
    if (h < 1) throw domain_error("brute_T_d: each H_r must be >= 1");
    h_sum += static_cast<double>(h);
    h_prod *= static_cast<double>(h);
  }
  if (h_sum > w.Y) {
    throw hypothesis_error("brute_T_d: requires H_1 + ... + H_d <= Y");
  }

  const std::size_t depth = H.size();
  std::vector<std::int64_t> a(depth, 1);
  for (auto h : H) {
    if (h == 1) return 0.0;  // empty index set
  }

  detail::CompensatedSum total;
  for (;;) {
    ShiftVector sv(a);
    PhaseFunction fa = diff_function(f, sv);
    double ylen = w.Y - static_cast<double>(sv.sum());
    if (ylen > 0.0) {
      total.add(std::abs(exp_sum(fa, Window{w.X, ylen})));
    }
    // odometer over 1 <= a_r <= H_r - 1
    std::size_t i = 0;
    while (i < depth) {
      if (++a[i] <= H[i] - 1) break;
      a[i] = 1;
      ++i;
    }
    if (i == depth) break;
  }
  return total.value() / (w.Y * h_prod);
}

}  // namespace vdc
