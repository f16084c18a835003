#include "vacbrown/quantities.hpp"

#include <cmath>

#include "vacbrown/errors.hpp"

namespace vacbrown {

ParticleParams ParticleParams::from_alpha(double alpha, double mass_eV,
                                          double boltzmann_eV_per_K) {
  ParticleParams p{4.0 * kPi * alpha, mass_eV, alpha, boltzmann_eV_per_K};
  validate(p);
  return p;
}

ParticleParams ParticleParams::electron() {
  return from_alpha(codata::alpha, codata::electron_mass_eV);
}

void validate(const ParticleParams& p) {
  if (!(p.charge_squared > 0.0) || !std::isfinite(p.charge_squared))
    throw DomainError("particle charge_squared must be positive");
  if (!(p.mass_eV > 0.0) || !std::isfinite(p.mass_eV))
    throw DomainError("particle mass must be positive");
  if (!(p.boltzmann_eV_per_K > 0.0)) throw DomainError("Boltzmann constant must be positive");
}

std::optional<ParticleParams> particle_by_name(std::string_view name) {
  if (name == "electron" || name == "e") return ParticleParams::electron();
  return std::nullopt;
}

UnitSystem UnitSystem::for_particle(const ParticleParams& p) {
  validate(p);
  return UnitSystem{p.natural_length_m(), p.natural_time_s()};
}

double length_to_natural(double x_m, const ParticleParams& p) {
  if (!(x_m > 0.0) || !std::isfinite(x_m)) throw DomainError("length must be positive");
  validate(p);
  return x_m / p.natural_length_m();
}

double natural_to_length(double x_nat, const ParticleParams& p) {
  if (!(x_nat > 0.0) || !std::isfinite(x_nat)) throw DomainError("length must be positive");
  validate(p);
  return x_nat * p.natural_length_m();
}

double time_to_natural(double t_s, const ParticleParams& p) {
  if (!(t_s > 0.0) || !std::isfinite(t_s)) throw DomainError("time must be positive");
  validate(p);
  return t_s / p.natural_time_s();
}

double natural_to_time(double t_nat, const ParticleParams& p) {
  if (!(t_nat > 0.0) || !std::isfinite(t_nat)) throw DomainError("time must be positive");
  validate(p);
  return t_nat * p.natural_time_s();
}

std::string to_string(DispersionKind kind) {
  std::string s = kind.observable == Observable::velocity ? "dv2-" : "dx2-";
  s += kind.axis == Axis::parallel ? "parallel" : "normal";
  return s;
}

std::optional<DispersionKind> parse_kind(std::string_view name) {
  for (auto k : kAllKinds)
    if (to_string(k) == name) return k;
  return std::nullopt;
}

double dispersion_prefactor(const ParticleParams& p) {
  return p.charge_squared / (kPi * kPi);
}

PhysicalValue physicalize(double reduced, DispersionKind kind, const ParticleParams& p,
                          const UnitSystem& units, OutputUnits out) {
  if (!std::isfinite(reduced)) throw DomainError("reduced value is not finite");
  validate(p);
  const double natural = dispersion_prefactor(p) * reduced;
  const bool velocity = kind.observable == Observable::velocity;
  if (out == OutputUnits::natural) return {natural, velocity ? "c^2" : "(hbar/mc)^2"};
  if (velocity) return {natural * units.c_m_per_s * units.c_m_per_s, "m^2/s^2"};
  return {natural * units.meters_per_length * units.meters_per_length, "m^2"};
}

}  // namespace vacbrown
