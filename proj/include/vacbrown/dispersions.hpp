#ifndef VACBROWN_DISPERSIONS_HPP
#define VACBROWN_DISPERSIONS_HPP

#include <cstdint>

#include "vacbrown/correlators.hpp"
#include "vacbrown/errors.hpp"
#include "vacbrown/quantities.hpp"

namespace vacbrown {

/// A geometry plus the elapsed time t over which the particle is observed.
class EvalPoint {
 public:
  /// Throws DomainError unless t > 0 and finite.
  EvalPoint(Geometry geom, double t);

  const Geometry& geom() const noexcept { return geom_; }
  double a() const noexcept { return geom_.a(); }
  double z() const noexcept { return geom_.z(); }
  double t() const noexcept { return t_; }
  double t_over_a() const noexcept { return t_ / geom_.a(); }
  double z_over_a() const noexcept { return geom_.z() / geom_.a(); }
  double gamma() const noexcept { return t_ / (2.0 * geom_.a()); }
  EvalPoint mirrored() const { return EvalPoint(geom_.mirrored(), t_); }

 private:
  Geometry geom_;
  double t_;
};

/// A dispersion with the factor e^2/(pi^2 m^2) stripped.
struct ReducedValue {
  double value = 0.0;
  double tail_estimate = 0.0;
  std::int64_t n_used = 0;
  SingularityReport singularity;
};

/// Image-sum dispersions:
///   parallel velocity   sum'_n f_L(na, t) - sum_n f_L(na + z, t)
///   normal velocity     sum'_n f_T(na, t) + sum_n f_T(na + z, t)
///   parallel position   sum'_n g_L(na, t) - sum_n g_L(na + z, t)
///   normal position     sum'_n g_T(na, t) + sum_n g_T(na + z, t)
/// Throws SingularWindowError if t lies within ctrl.exclusion of any image
/// light cone, ConvergenceError if the tail bound is not met by ctrl.n_max.
ReducedValue dispersion_exact(DispersionKind kind, const EvalPoint& p,
                              const SeriesControl& ctrl = {});

/// The same sums cut off after |n| <= n_images, with no tail bound.
ReducedValue dispersion_partial(DispersionKind kind, const EvalPoint& p, std::int64_t n_images,
                                double exclusion = kernels::kDefaultExclusion);

/// Single-plate (a -> infinity) limit: only the image at offset z survives.
ReducedValue single_plate_reference(DispersionKind kind, double z, double t,
                                    double exclusion = kernels::kDefaultExclusion);

/// Kernel used for a dispersion kind.
kernels::Kernel kernel_for(DispersionKind kind);
/// +1 or -1: sign of the sum over the offsets na + z.
double image_sign(DispersionKind kind);

}  // namespace vacbrown

#endif  // VACBROWN_DISPERSIONS_HPP
