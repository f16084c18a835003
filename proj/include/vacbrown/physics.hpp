#ifndef VACBROWN_PHYSICS_HPP
#define VACBROWN_PHYSICS_HPP

#include "vacbrown/dispersions.hpp"
#include "vacbrown/quantities.hpp"

namespace vacbrown {

struct ValidityReport {
  bool falling_time_ok = true;   // t_c(min(z, a - z)) >> a
  bool displacement_ok = true;   // t << (m z) z
  double falling_time_margin = 0.0;   // t_c(min(z, a - z)) / a
  double displacement_margin = 0.0;   // m z^2 / t
};

struct ValidityFactors {
  double falling_time = 10.0;
  double displacement = 10.0;
};

/// T = m <dv_z^2> / k_B, with the dispersion given in units of c^2.
/// Throws DomainError for a negative dispersion.
double effective_temperature(double dv2_normal_c2, const ParticleParams& p);

/// Late-time single-plate normal velocity dispersion, reduced: 1/(4 z^2).
double single_plate_late_normal_velocity(double z);

/// Effective temperature of the late-time single-plate value at a distance
/// z_m (meters) from the plate; equals alpha / (pi k_B m z^2).
double single_plate_effective_temperature(double z_m, const ParticleParams& p);

/// Exact two-plate normal velocity dispersion over the single-plate one,
/// both at the same z and t.
double amplification_ratio(const Geometry& geom, double t, const SeriesControl& ctrl = {});
/// Same at the midpoint z = a/2.
double amplification_ratio(double a, double t, const SeriesControl& ctrl = {});

/// t_c = sqrt(m z0^3 / e^2) in natural units (z0 and t_c in hbar/mc).
double falling_time(double z0, const ParticleParams& p);
/// t_c in seconds for z0 in meters.
double falling_time_si(double z0_m, const ParticleParams& p);

/// Plate separation, in meters, at which t_c(a/2) = a: a = 8 e^2 hbar/(mc).
double falling_time_threshold_m(const ParticleParams& p);

/// Coefficient K in t << K (a/1cm) a at the midpoint, from t << m (a/2)^2.
double displacement_bound_coefficient(const ParticleParams& p);

/// Evaluates both validity margins at natural-unit point p (m = 1).
ValidityReport validity_check(const EvalPoint& p, const ParticleParams& params,
                              ValidityFactors factors = {});

}  // namespace vacbrown

#endif  // VACBROWN_PHYSICS_HPP
