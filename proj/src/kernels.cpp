#include "vacbrown/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace vacbrown::kernels {

namespace {

// Power series are used where the closed forms lose digits to cancellation:
// for u = 2|x|/t <= 0.5 and for v = t/(2|x|) <= 0.5. Both converge like 4^-k.
constexpr double kSeriesCut = 0.5;
constexpr int kMaxSeriesTerms = 120;

template <class Coeff>
double power_series(double y, Coeff&& coeff) {
  // sum_{k>=0} coeff(k) y^k
  double sum = 0.0;
  double yk = 1.0;
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    const double term = coeff(k) * yk;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    yk *= y;
  }
  return sum;
}

// Real part of atanh: (1/2) ln |(1+u)/(1-u)|, symmetric under u -> 1/u.
double log_ratio_half(double u) { return u < 1.0 ? std::atanh(u) : std::atanh(1.0 / u); }

// Validates the arguments; returns |x|, or -1 when t == 0 (kernel vanishes).
double checked_abs_x(double x, double t, KernelOptions opt) {
  if (!std::isfinite(x) || x == 0.0) throw DomainError("kernel offset x must be finite and nonzero");
  if (!std::isfinite(t) || t < 0.0) throw DomainError("kernel time t must be finite and >= 0");
  if (t == 0.0) return -1.0;
  const double ax = std::abs(x);
  const double gap = std::abs(t - 2.0 * ax);
  if (gap == 0.0 || gap < opt.exclusion * t) {
    SingularityReport r{gap / t, 2.0 * ax, true};
    std::ostringstream msg;
    msg << "t = " << t << " is within the light-cone window of offset 2|x| = " << 2.0 * ax;
    throw SingularWindowError(msg.str(), r);
  }
  return ax;
}

}  // namespace

double f_long(double x, double t, KernelOptions opt) {
  const double ax = checked_abs_x(x, t, opt);
  if (ax < 0.0) return 0.0;
  const double u = 2.0 * ax / t;
  if (u <= kSeriesCut) {
    // (1/t^2) sum_{k>=1} k/(2k+1) u^(2k-2)
    const double s = power_series(u * u, [](int j) {
      const double k = j + 1;
      return k / (2.0 * k + 1.0);
    });
    return s / (t * t);
  }
  if (u >= 1.0 / kSeriesCut) {
    // -(t^2/(16 x^4)) sum_{k>=0} (k+1)/(2k+1) v^(2k)
    const double v = 1.0 / u;
    const double s = power_series(v * v, [](int k) { return (k + 1.0) / (2.0 * k + 1.0); });
    const double x2 = ax * ax;
    return -t * t / (16.0 * x2 * x2) * s;
  }
  const double x2 = ax * ax;
  return t * t / (8.0 * x2 * (t * t - 4.0 * x2)) - t * log_ratio_half(u) / (16.0 * x2 * ax);
}

double f_trans(double x, double t, KernelOptions opt) {
  const double ax = checked_abs_x(x, t, opt);
  if (ax < 0.0) return 0.0;
  const double u = 2.0 * ax / t;
  return t * log_ratio_half(u) / (8.0 * ax * ax * ax);
}

double g_long(double x, double t, KernelOptions opt) {
  const double ax = checked_abs_x(x, t, opt);
  if (ax < 0.0) return 0.0;
  const double v = t / (2.0 * ax);
  if (v <= kSeriesCut) {
    // -(1/6) v^4 sum_{k>=0} (1/(2k+1) + 1/(k+2)) v^(2k)
    const double s = power_series(v * v, [](int k) { return 1.0 / (2.0 * k + 1.0) + 1.0 / (k + 2.0); });
    const double v2 = v * v;
    return -v2 * v2 * s / 6.0;
  }
  if (v >= 1.0 / kSeriesCut) {
    // (1/6) [-1/3 - 2 ln u - sum_{j>=1} (1/(2j+3) + 1/j) u^(2j)]
    const double u = 1.0 / v;
    const double u2 = u * u;
    const double s = power_series(u2, [](int i) {
      const double j = i + 1;
      return 1.0 / (2.0 * j + 3.0) + 1.0 / j;
    });
    return (-1.0 / 3.0 - 2.0 * std::log(u) - u2 * s) / 6.0;
  }
  const double v2 = v * v;
  return (-v2 * v * log_ratio_half(v) + v2 + std::log(std::abs(v2 - 1.0))) / 6.0;
}

double g_trans(double x, double t, KernelOptions opt) {
  const double ax = checked_abs_x(x, t, opt);
  if (ax < 0.0) return 0.0;
  const double v = t / (2.0 * ax);
  const double v2 = v * v;
  if (v <= kSeriesCut) {
    // (1/6) v^4 sum_{k>=0} (2/(2k+1) - 1/(k+2)) v^(2k)
    const double s = power_series(v2, [](int k) { return 2.0 / (2.0 * k + 1.0) - 1.0 / (k + 2.0); });
    return v2 * v2 * s / 6.0;
  }
  return (v2 + 2.0 * v2 * v * log_ratio_half(v) + std::log(std::abs(v2 - 1.0))) / 6.0;
}

double evaluate(Kernel k, double x, double t, KernelOptions opt) {
  switch (k) {
    case Kernel::f_long: return f_long(x, t, opt);
    case Kernel::f_trans: return f_trans(x, t, opt);
    case Kernel::g_long: return g_long(x, t, opt);
    case Kernel::g_trans: return g_trans(x, t, opt);
  }
  throw DomainError("unknown kernel");
}

double raw_long(double x, double dt) {
  const double s2 = dt * dt;
  const double b2 = 4.0 * x * x;
  const double d = s2 - b2;
  if (d == 0.0) throw DomainError("raw kernel evaluated on the light cone");
  return (s2 + b2) / (d * d * d);
}

double raw_trans(double x, double dt) {
  const double d = dt * dt - 4.0 * x * x;
  if (d == 0.0) throw DomainError("raw kernel evaluated on the light cone");
  return 1.0 / (d * d);
}

namespace {

// Calls visit(offset) for each light-cone time 2|x| within one image step
// of t, over the families 2na (n >= 1), 2(na + z) (n >= 0), 2(na - z) (n >= 1).
template <class Visit>
void visit_offsets_near(double z, double a, double t, std::int64_t n_max, int reach, Visit&& visit) {
  struct Family {
    double shift;
    std::int64_t n_lo;
  };
  const Family families[] = {{0.0, 1}, {z, 0}, {-z, 1}};
  for (const auto& f : families) {
    const double centre = std::round((0.5 * t - f.shift) / a);
    const double lo_d = std::max<double>(centre - reach, static_cast<double>(f.n_lo));
    const double hi_d = std::min<double>(centre + reach, static_cast<double>(n_max));
    for (double n = lo_d; n <= hi_d; n += 1.0) visit(2.0 * (n * a + f.shift));
  }
}

}  // namespace

SingularityReport singularity_report(double z, double a, double t, std::int64_t n_max,
                                     double threshold) {
  if (!(a > 0.0) || !(z > 0.0) || !(z < a)) throw DomainError("require 0 < z < a");
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("require t > 0");
  SingularityReport r;
  visit_offsets_near(z, a, t, std::max<std::int64_t>(n_max, 1), 1, [&](double off) {
    const double d = std::abs(t - off) / t;
    if (d < r.distance) {
      r.distance = d;
      r.nearest_offset = off;
    }
  });
  r.is_near = r.distance == 0.0 || r.distance < threshold;
  return r;
}

SingularityReport singularity_report(double z, double a, double t, double threshold) {
  const auto n_max = static_cast<std::int64_t>(std::ceil(0.5 * t / a)) + 2;
  return singularity_report(z, a, t, n_max, threshold);
}

double regular_time_near(double z, double a, double t) {
  std::vector<double> offsets;
  const auto n_max = static_cast<std::int64_t>(std::ceil(0.5 * t / a)) + 3;
  visit_offsets_near(z, a, t, n_max, 2, [&](double off) { offsets.push_back(off); });
  double lower = -1.0;
  double upper = std::numeric_limits<double>::infinity();
  for (double off : offsets) {
    if (off <= t) lower = std::max(lower, off);
    else upper = std::min(upper, off);
  }
  if (lower < 0.0 || !std::isfinite(upper)) return t;
  return 0.5 * (lower + upper);
}

}  // namespace vacbrown::kernels
