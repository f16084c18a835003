#include "vacbrown/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "vacbrown/kernels.hpp"

namespace vacbrown {

namespace {

constexpr double kLargeTMinRatio = 10.0;
constexpr double kPi4 = kPi * kPi * kPi * kPi;

ReducedValue approx_value(double v, const EvalPoint& p) {
  return {v, 0.0, 0, kernels::singularity_report(p.z(), p.a(), p.t(), 0.0)};
}

void require_large_t(double a, double t) {
  if (!(t > kLargeTMinRatio * a)) throw RegimeError("t >> a expansion requires t > 10a");
}

}  // namespace

const char* to_string(RegimeTag tag) {
  switch (tag) {
    case RegimeTag::large_a: return "large_a";
    case RegimeTag::large_t: return "large_t";
    case RegimeTag::neither: return "neither";
  }
  return "neither";
}

Regime recommend_regime(const EvalPoint& p, RegimeThresholds thresholds) {
  const double t_over_a = p.t_over_a();
  const double a_over_t = 1.0 / t_over_a;
  if (t_over_a <= thresholds.large_a) return {RegimeTag::large_a, t_over_a};
  if (a_over_t <= thresholds.large_t) return {RegimeTag::large_t, a_over_t};
  return {RegimeTag::neither, std::max(t_over_a, a_over_t)};
}

double image_sum_quartic(double z, double a) {
  if (!(a > 0.0) || !(z > 0.0) || !(z < a))
    throw DomainError("image_sum_quartic requires 0 < z < a (poles at z = 0, a)");
  const double s = std::sin(kPi * z / a);
  const double s2 = s * s;
  const double a2 = a * a;
  return kPi4 * (2.0 + std::cos(2.0 * kPi * z / a)) / (3.0 * a2 * a2 * s2 * s2);
}

ReducedValue approx_large_a(DispersionKind kind, const EvalPoint& p) {
  const double a = p.a();
  const double z = p.z();
  const double t = p.t();
  if (!(t < a)) throw RegimeError("a >> t approximation requires t < a");

  const bool velocity = kind.observable == Observable::velocity;
  const double t2 = t * t;
  // Leading small-t coefficient of each far image, |K(x,0)| times the time weight.
  const double c = velocity ? t2 / 16.0 : t2 * t2 / 64.0;
  const double a2 = a * a;
  const double zeta4_pair = kPi4 / (45.0 * a2 * a2);  // sum'_n 1/(na)^4
  const double z2 = z * z;
  const double w2 = (a - z) * (a - z);
  const double lattice = image_sum_quartic(z, a) - 1.0 / (z2 * z2) - 1.0 / (w2 * w2);

  const auto k = kernel_for(kind);
  const double near = kernels::evaluate(k, z, t) + kernels::evaluate(k, a - z, t);
  double v;
  if (kind.axis == Axis::parallel) v = -c * zeta4_pair + c * lattice - near;
  else v = c * zeta4_pair + c * lattice + near;
  return approx_value(v, p);
}

ReducedValue approx_large_a_far(DispersionKind kind, const EvalPoint& p) {
  const double a = p.a();
  const double z = p.z();
  const double t = p.t();
  if (!(t < a) || !(z <= 0.1 * a))
    throw RegimeError("a >> z approximation requires z <= a/10 and t < a");
  const double ta = t / a;
  const double ta4 = ta * ta * ta * ta;
  const double za = z / a;
  const double za8 = std::pow(za, 8);
  double v = 0.0;
  if (kind == kParallelVelocity) v = -kernels::f_long(z, t) + ta4 * za8 / (8.0 * t * t);
  else if (kind == kNormalVelocity) v = kernels::f_trans(z, t) + kPi4 * t * t / (360.0 * a * a * a * a);
  else if (kind == kParallelPosition) v = -kernels::g_long(z, t) + ta4 * za8 / 32.0;
  else v = kernels::g_trans(z, t) + kPi4 * ta4 / 1440.0;
  return approx_value(v, p);
}

double w_function(double u) {
  if (!(u > 0.0) || !(u < 1.0)) throw DomainError("w(u) requires 0 < u < 1");
  if (u < 0.1) {
    // -sum_{k>=1} 2k u^(2k-1) / (4k^2 - 1)
    double sum = 0.0;
    double pw = u;
    for (int k = 1; k < 60; ++k) {
      const double term = 2.0 * k * pw / (4.0 * k * k - 1.0);
      sum += term;
      if (term < 1e-18 * sum) break;
      pw *= u * u;
    }
    return -sum;
  }
  return 1.0 / (2.0 * u) - (1.0 + u * u) * std::atanh(u) / (2.0 * u * u);
}

ReducedValue h_function(const EvalPoint& p, const SeriesControl& ctrl) {
  const double a = p.a();
  const double z = p.z();
  const double t = p.t();
  if (!(t > 2.0 * a)) throw RegimeError("h(z,t) is defined for the t > 2a regime");
  const auto rep = kernels::singularity_report(z, a, t, ctrl.exclusion);
  if (rep.is_near) throw SingularWindowError("h(z,t): t lies on an image light cone", rep);
  const kernels::KernelOptions opt{ctrl.exclusion};
  const auto pair = [&](std::int64_t n) {
    const double na = static_cast<double>(n) * a;
    double v = 2.0 * kernels::f_long(na, t, opt) - kernels::f_long(z + na, t, opt);
    if (n >= 2) v -= kernels::f_long(z - na, t, opt);
    return v;
  };
  const auto r = sum_image_pairs(0.0, pair, far_field_start(t, a), ctrl);
  return {r.value, r.tail_estimate, r.n_used, rep};
}

double h_integral_estimate(const EvalPoint& p) {
  const double t = p.t();
  const double z = p.z();
  const double g = p.gamma();
  const double u0 = 1.0 / g;
  const double u1 = 1.0 / g + 2.0 * z / t;
  const double u2 = 2.0 / g - 2.0 * z / t;
  if (!(u1 < 1.0) || !(u2 < 1.0)) throw RegimeError("h estimate requires t > 2(2a - z) and t > 2(a + z)");
  return g / (t * t) * (w_function(u0) - 0.5 * w_function(u1) - 0.5 * w_function(u2));
}

ReducedValue approx_large_t(DispersionKind kind, const EvalPoint& p) {
  const double a = p.a();
  const double z = p.z();
  const double t = p.t();
  require_large_t(a, t);
  const double w = a - z;  // distance to the far plate
  const double t2 = t * t;
  const double a2 = a * a;
  const double zw = z * w;
  const double ap = a + z;
  const double am = 2.0 * a - z;
  double v = 0.0;
  if (kind == kParallelVelocity) {
    v = -1.0 / (3.0 * t2) + (32.0 * a2 - 24.0 * zw) / (15.0 * t2 * t2);
  } else if (kind == kNormalVelocity) {
    v = (a2 - 2.0 * zw) / (4.0 * zw * zw) + 1.0 / (2.0 * a2) + 3.0 / (4.0 * ap * am) - 1.0 / t2;
  } else if (kind == kParallelPosition) {
    v = -std::log(t / (2.0 * z)) / 3.0 - std::log(t / (2.0 * w)) / 3.0 -
        2.0 * std::log(t / (2.0 * a)) / 3.0 + ap / (3.0 * a) * std::log(t / (2.0 * ap)) +
        am / (3.0 * a) * std::log(t / (2.0 * am));
  } else {
    v = t2 * (a2 - 2.0 * zw) / (8.0 * zw * zw) + t2 / (4.0 * a2) + 3.0 * t2 / (8.0 * ap * am) +
        std::log(t2 / (4.0 * zw)) / 3.0 - 2.0 * std::log(t / (2.0 * a)) / 3.0 -
        ap / (3.0 * a) * std::log(t / (2.0 * ap)) - am / (3.0 * a) * std::log(t / (2.0 * am));
  }
  return approx_value(v, p);
}

ReducedValue midpoint_extremal(DispersionKind kind, double a, double t) {
  const EvalPoint p(Geometry(a, 0.5 * a), t);
  require_large_t(a, t);
  const double t2 = t * t;
  const double a2 = a * a;
  double v = 0.0;
  if (kind == kParallelVelocity) v = -1.0 / (3.0 * t2) + 26.0 * a2 / (15.0 * t2 * t2);
  else if (kind == kNormalVelocity) v = 17.0 / (6.0 * a2) - 1.0 / t2;
  else if (kind == kParallelPosition) v = -2.0 / 3.0 * std::log(t2 / (2.0 * a2)) + std::log(t / (3.0 * a));
  else v = 17.0 * t2 / (12.0 * a2) + 2.0 / 3.0 * std::log(2.0) - std::log(t / (3.0 * a));
  return approx_value(v, p);
}

}  // namespace vacbrown
