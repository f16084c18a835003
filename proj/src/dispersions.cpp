#include "vacbrown/dispersions.hpp"

#include <cmath>

namespace vacbrown {

EvalPoint::EvalPoint(Geometry geom, double t) : geom_(geom), t_(t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("elapsed time t must be positive");
}

kernels::Kernel kernel_for(DispersionKind kind) {
  const bool par = kind.axis == Axis::parallel;
  if (kind.observable == Observable::velocity) return par ? kernels::Kernel::f_long : kernels::Kernel::f_trans;
  return par ? kernels::Kernel::g_long : kernels::Kernel::g_trans;
}

double image_sign(DispersionKind kind) { return kind.axis == Axis::parallel ? -1.0 : 1.0; }

namespace {

SingularityReport checked_report(const EvalPoint& p, double exclusion) {
  auto rep = kernels::singularity_report(p.z(), p.a(), p.t(), exclusion);
  if (rep.is_near)
    throw SingularWindowError("t = " + std::to_string(p.t()) + " lies on an image light cone", rep);
  return rep;
}

}  // namespace

ReducedValue dispersion_exact(DispersionKind kind, const EvalPoint& p, const SeriesControl& ctrl) {
  validate(ctrl);
  const auto rep = checked_report(p, ctrl.exclusion);
  const auto k = kernel_for(kind);
  const double sign = image_sign(kind);
  const double a = p.a();
  const double z = p.z();
  const double t = p.t();
  const kernels::KernelOptions opt{ctrl.exclusion};

  const double term0 = sign * kernels::evaluate(k, z, t, opt);
  // Offsets na, na + z, na - z interleaved so the O(1/n^2) position pieces
  // cancel within each pair.
  const auto pair = [&](std::int64_t n) {
    const double na = static_cast<double>(n) * a;
    return 2.0 * kernels::evaluate(k, na, t, opt) +
           sign * (kernels::evaluate(k, na + z, t, opt) + kernels::evaluate(k, na - z, t, opt));
  };
  const auto r = sum_image_pairs(term0, pair, far_field_start(t, a), ctrl);
  return {r.value, r.tail_estimate, r.n_used, rep};
}

ReducedValue dispersion_partial(DispersionKind kind, const EvalPoint& p, std::int64_t n_images,
                                double exclusion) {
  const auto rep = checked_report(p, exclusion);
  const auto k = kernel_for(kind);
  const double sign = image_sign(kind);
  const double a = p.a();
  const double z = p.z();
  const double t = p.t();
  const kernels::KernelOptions opt{exclusion};
  const double term0 = sign * kernels::evaluate(k, z, t, opt);
  const auto pair = [&](std::int64_t n) {
    const double na = static_cast<double>(n) * a;
    return 2.0 * kernels::evaluate(k, na, t, opt) +
           sign * (kernels::evaluate(k, na + z, t, opt) + kernels::evaluate(k, na - z, t, opt));
  };
  const auto r = sum_image_pairs_fixed(term0, pair, n_images);
  return {r.value, 0.0, r.n_used, rep};
}

ReducedValue single_plate_reference(DispersionKind kind, double z, double t, double exclusion) {
  if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("height z must be positive");
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("elapsed time t must be positive");
  const double gap = std::abs(t - 2.0 * z);
  SingularityReport rep{gap / t, 2.0 * z, gap == 0.0 || gap < exclusion * t};
  if (rep.is_near) throw SingularWindowError("t = 2z light cone of the single plate", rep);
  const double v = image_sign(kind) * kernels::evaluate(kernel_for(kind), z, t, {exclusion});
  return {v, 0.0, 1, rep};
}

}  // namespace vacbrown
