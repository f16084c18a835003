#ifndef VACBROWN_CORRELATORS_HPP
#define VACBROWN_CORRELATORS_HPP

#include <array>
#include <cstdint>

#include "vacbrown/summation.hpp"

namespace vacbrown {

/// Perfectly conducting plates at z = 0 and z = a, particle at height z.
class Geometry {
 public:
  /// Throws DomainError unless a > 0 and 0 < z < a.
  Geometry(double a, double z);

  double a() const noexcept { return a_; }
  double z() const noexcept { return z_; }
  /// The mirror geometry z -> a - z.
  Geometry mirrored() const { return Geometry(a_, a_ - z_); }

 private:
  double a_;
  double z_;
};

struct CorrelatorValue {
  double value = 0.0;
  double tail_estimate = 0.0;
  std::int64_t n_used = 0;
};

/// Minkowski-vacuum photon two-point function in Feynman gauge,
/// eta^{mu nu} / (4 pi^2 (dt^2 - |dx|^2)), with eta = diag(1, -1, -1, -1).
double minkowski_two_point(int mu, int nu, double dt, const std::array<double, 3>& dx);

/// Boundary-induced part of the photon two-point function between the plates,
/// built from images at z + z' + 2na (all n, weight eta + 2 n n with n^mu the
/// unit normal) and z - z' + 2na (n != 0, weight eta), signs as in the image
/// construction. Index 3 is the normal direction.
CorrelatorValue renormalized_photon_two_point(int mu, int nu, double dt, double dx, double dy,
                                              double z, double z_prime, const Geometry& geom,
                                              const SeriesControl& ctrl = {});

/// Renormalized <E_x(t') E_x(t'')> at equal spatial points, dt = t' - t''
/// (equal to <E_y E_y>):
///   (1/pi^2) [ sum'_n K_L(na, dt) - sum_n K_L(na + z, dt) ].
CorrelatorValue exx_renormalized(double dt, const Geometry& geom, const SeriesControl& ctrl = {});

/// Renormalized <E_z(t') E_z(t'')> at equal spatial points:
///   (1/pi^2) [ sum'_n K_T(na, dt) + sum_n K_T(na + z, dt) ].
CorrelatorValue ezz_renormalized(double dt, const Geometry& geom, const SeriesControl& ctrl = {});

}  // namespace vacbrown

#endif  // VACBROWN_CORRELATORS_HPP
