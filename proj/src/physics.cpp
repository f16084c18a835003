#include "vacbrown/physics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vacbrown {

double effective_temperature(double dv2_normal_c2, const ParticleParams& p) {
  validate(p);
  if (!(dv2_normal_c2 >= 0.0)) throw DomainError("effective temperature needs a non-negative dispersion");
  return p.mass_eV * dv2_normal_c2 / p.boltzmann_eV_per_K;
}

double single_plate_late_normal_velocity(double z) {
  if (!(z > 0.0)) throw DomainError("z must be positive");
  return 1.0 / (4.0 * z * z);
}

double single_plate_effective_temperature(double z_m, const ParticleParams& p) {
  const double z = length_to_natural(z_m, p);
  const double dv2 = dispersion_prefactor(p) * single_plate_late_normal_velocity(z);
  return effective_temperature(dv2, p);
}

double amplification_ratio(const Geometry& geom, double t, const SeriesControl& ctrl) {
  const EvalPoint pt(geom, t);
  const double two_plate = dispersion_exact(kNormalVelocity, pt, ctrl).value;
  const double one_plate = single_plate_reference(kNormalVelocity, geom.z(), t, ctrl.exclusion).value;
  return two_plate / one_plate;
}

double amplification_ratio(double a, double t, const SeriesControl& ctrl) {
  return amplification_ratio(Geometry(a, 0.5 * a), t, ctrl);
}

double falling_time(double z0, const ParticleParams& p) {
  validate(p);
  if (!(z0 > 0.0)) throw DomainError("z0 must be positive");
  return std::sqrt(z0 * z0 * z0 / p.charge_squared);
}

double falling_time_si(double z0_m, const ParticleParams& p) {
  return natural_to_time(falling_time(length_to_natural(z0_m, p), p), p);
}

double falling_time_threshold_m(const ParticleParams& p) {
  validate(p);
  return natural_to_length(8.0 * p.charge_squared, p);
}

double displacement_bound_coefficient(const ParticleParams& p) {
  validate(p);
  return 0.01 / (4.0 * p.natural_length_m());
}

ValidityReport validity_check(const EvalPoint& p, const ParticleParams& params, ValidityFactors factors) {
  ValidityReport r;
  const double zmin = std::min(p.z(), p.a() - p.z());
  r.falling_time_margin = falling_time(zmin, params) / p.a();
  r.displacement_margin = p.z() * p.z() / p.t();
  r.falling_time_ok = r.falling_time_margin > factors.falling_time;
  r.displacement_ok = r.displacement_margin > factors.displacement;
  return r;
}

}  // namespace vacbrown
