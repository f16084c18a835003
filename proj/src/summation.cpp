#include "vacbrown/summation.hpp"

#include <algorithm>
#include <sstream>

#include "vacbrown/errors.hpp"

namespace vacbrown {

void validate(const SeriesControl& ctrl) {
  if (!(ctrl.rel_tol > 0.0)) throw DomainError("series rel_tol must be positive");
  if (ctrl.n_min < 1) throw DomainError("series n_min must be >= 1");
  if (ctrl.n_max < ctrl.n_min) throw DomainError("series n_max must be >= n_min");
  if (ctrl.block < 1) throw DomainError("series block must be >= 1");
  if (!(ctrl.exclusion >= 0.0)) throw DomainError("exclusion window must be >= 0");
}

std::int64_t far_field_start(double t, double a) {
  return static_cast<std::int64_t>(std::ceil(2.0 * t / a)) + 2;
}

SeriesResult sum_image_pairs(double term0, const std::function<double(std::int64_t)>& pair,
                             std::int64_t n_clear, const SeriesControl& ctrl) {
  validate(ctrl);
  CompensatedSum acc;
  acc.add(term0);

  std::int64_t n_done = 0;
  std::int64_t target = std::max({ctrl.n_min, ctrl.block, n_clear});
  double last = 0.0;
  double tail = 0.0;
  for (;;) {
    const std::int64_t stop = std::min(target, ctrl.n_max);
    for (std::int64_t n = n_done + 1; n <= stop; ++n) {
      last = pair(n);
      acc.add(last);
    }
    n_done = stop;

    const double nd = static_cast<double>(n_done);
    tail = std::abs(last) * nd / 3.0;  // (N^4 |pair(N)|) / (3 N^3)
    const double value = acc.value();
    if (n_done >= n_clear && (tail <= ctrl.rel_tol * std::abs(value) || tail == 0.0))
      return {value, tail, n_done};
    if (n_done >= ctrl.n_max) {
      std::ostringstream msg;
      msg << "image sum not converged after " << n_done << " terms (tail bound " << tail
          << ", value " << value << ")";
      throw ConvergenceError(msg.str(), tail);
    }
    target = 2 * n_done;
  }
}

SeriesResult sum_image_pairs_fixed(double term0, const std::function<double(std::int64_t)>& pair,
                                   std::int64_t n_terms) {
  if (n_terms < 0) throw DomainError("negative image count");
  CompensatedSum acc;
  acc.add(term0);
  for (std::int64_t n = 1; n <= n_terms; ++n) acc.add(pair(n));
  return {acc.value(), 0.0, n_terms};
}

}  // namespace vacbrown
