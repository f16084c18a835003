#ifndef VACBROWN_QUANTITIES_HPP
#define VACBROWN_QUANTITIES_HPP

// Units: Lorentz-Heaviside with c = hbar = 1, so e^2 = 4*pi*alpha.
//
// Every dispersion is computed as a "reduced value": the universal factor
// e^2/(pi^2 m^2) is stripped and lengths/times are measured in units of the
// particle's reduced Compton wavelength hbar/(m c). In those units m = 1, a
// reduced velocity dispersion times e^2/pi^2 is <dv^2>/c^2 and a reduced
// position dispersion times e^2/pi^2 is <dx^2> in units of (hbar/mc)^2.

#include <optional>
#include <string>
#include <string_view>

namespace vacbrown {

namespace codata {
// CODATA 2018 recommended values.
inline constexpr double alpha = 7.2973525693e-3;
inline constexpr double hbar_c_eV_m = 1.973269804e-7;   // 197.3269804 MeV fm
inline constexpr double hbar_eV_s = 6.582119569e-16;
inline constexpr double c_m_per_s = 299792458.0;
inline constexpr double boltzmann_eV_per_K = 8.617333262e-5;
inline constexpr double electron_mass_eV = 0.51099895000e6;
inline constexpr double electron_reduced_compton_m = 3.8615926796e-13;
}  // namespace codata

inline constexpr double kPi = 3.141592653589793238462643383279502884;

struct ParticleParams {
  double charge_squared;      // e^2, dimensionless
  double mass_eV;             // m c^2
  double alpha;               // fine-structure constant
  double boltzmann_eV_per_K;  // k_B, used only at the SI boundary

  /// Charge e^2 = 4 pi alpha.
  static ParticleParams from_alpha(double alpha, double mass_eV,
                                   double boltzmann_eV_per_K = codata::boltzmann_eV_per_K);
  static ParticleParams electron();

  /// hbar c / (m c^2): one natural length unit, in meters.
  double natural_length_m() const noexcept { return codata::hbar_c_eV_m / mass_eV; }
  /// hbar / (m c^2): one natural time unit, in seconds.
  double natural_time_s() const noexcept { return codata::hbar_eV_s / mass_eV; }
};

/// Throws DomainError if the particle violates charge_squared > 0, mass > 0.
void validate(const ParticleParams& p);

/// Looks up a particle by name ("electron"); nullopt if unknown.
std::optional<ParticleParams> particle_by_name(std::string_view name);

struct UnitSystem {
  double meters_per_length;
  double seconds_per_time;
  double c_m_per_s = codata::c_m_per_s;

  static UnitSystem for_particle(const ParticleParams& p);
};

double length_to_natural(double x_m, const ParticleParams& p);
double natural_to_length(double x_nat, const ParticleParams& p);
double time_to_natural(double t_s, const ParticleParams& p);
double natural_to_time(double t_nat, const ParticleParams& p);

enum class Axis { parallel, normal };
enum class Observable { velocity, position };

struct DispersionKind {
  Axis axis;
  Observable observable;

  friend constexpr bool operator==(DispersionKind, DispersionKind) = default;
};

inline constexpr DispersionKind kParallelVelocity{Axis::parallel, Observable::velocity};
inline constexpr DispersionKind kNormalVelocity{Axis::normal, Observable::velocity};
inline constexpr DispersionKind kParallelPosition{Axis::parallel, Observable::position};
inline constexpr DispersionKind kNormalPosition{Axis::normal, Observable::position};
inline constexpr DispersionKind kAllKinds[] = {kParallelVelocity, kNormalVelocity,
                                               kParallelPosition, kNormalPosition};

/// "dv2-parallel", "dv2-normal", "dx2-parallel", "dx2-normal".
std::string to_string(DispersionKind kind);
std::optional<DispersionKind> parse_kind(std::string_view name);

enum class OutputUnits { natural, si };

struct PhysicalValue {
  double value;
  std::string unit;
};

/// e^2/(pi^2 m^2) in natural units (m = 1).
double dispersion_prefactor(const ParticleParams& p);

/// Applies e^2/(pi^2 m^2) to a reduced dispersion and converts units.
///
/// Natural output: velocity dispersions in units of c^2, position
/// dispersions in (hbar/mc)^2. SI output: m^2/s^2 and m^2.
PhysicalValue physicalize(double reduced, DispersionKind kind, const ParticleParams& p,
                          const UnitSystem& units, OutputUnits out = OutputUnits::si);

}  // namespace vacbrown

#endif  // VACBROWN_QUANTITIES_HPP
