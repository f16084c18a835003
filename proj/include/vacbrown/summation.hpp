#ifndef VACBROWN_SUMMATION_HPP
#define VACBROWN_SUMMATION_HPP

#include <cmath>
#include <cstdint>
#include <functional>

#include "vacbrown/kernels.hpp"

namespace vacbrown {

/// Truncation policy for image sums.
///
/// Pairs of images (+n, -n) are accumulated in blocks whose length doubles
/// until the bound on the neglected tail drops below rel_tol times the
/// partial sum. `block` is the initial block length. `exclusion` is the
/// relative light-cone window (see kernels::KernelOptions).
struct SeriesControl {
  double rel_tol = 1e-13;
  std::int64_t n_min = 8;
  std::int64_t n_max = std::int64_t{1} << 25;
  std::int64_t block = 64;
  double exclusion = kernels::kDefaultExclusion;
};

/// Throws DomainError unless rel_tol > 0 and 1 <= n_min <= n_max.
void validate(const SeriesControl& ctrl);

struct SeriesResult {
  double value = 0.0;
  double tail_estimate = 0.0;
  std::int64_t n_used = 0;
};

/// Neumaier compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) comp_ += (sum_ - t) + x;
    else comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Sums term0 + sum_{n>=1} pair(n) where, beyond n_clear, |pair(n)| decays
/// at least as fast as C/n^4 with n^4 |pair(n)| non-increasing.
///
/// The neglected tail after N terms is bounded by the integral comparison
/// C/(3N^3), with C = N^4 |pair(N)| taken from the last term computed.
/// Throws ConvergenceError if the bound is still above tolerance at n_max.
SeriesResult sum_image_pairs(double term0, const std::function<double(std::int64_t)>& pair,
                             std::int64_t n_clear, const SeriesControl& ctrl);

/// Sums exactly term0 + sum_{n=1}^{n_terms} pair(n) without a tail bound.
SeriesResult sum_image_pairs_fixed(double term0, const std::function<double(std::int64_t)>& pair,
                                   std::int64_t n_terms);

/// Smallest image count past which every offset satisfies 2|x| >= 4 t,
/// i.e. where the kernels are in their monotone far-field decay.
std::int64_t far_field_start(double t, double a);

}  // namespace vacbrown

#endif  // VACBROWN_SUMMATION_HPP
