#include "vacbrown/correlators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vacbrown/errors.hpp"
#include "vacbrown/kernels.hpp"
#include "vacbrown/quantities.hpp"

namespace vacbrown {

Geometry::Geometry(double a, double z) : a_(a), z_(z) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("plate separation a must be positive");
  if (!(z > 0.0) || !(z < a)) throw DomainError("particle height must satisfy 0 < z < a");
}

namespace {

double metric(int mu, int nu) {
  if (mu < 0 || mu > 3 || nu < 0 || nu > 3) throw DomainError("tensor index out of range");
  if (mu != nu) return 0.0;
  return mu == 0 ? 1.0 : -1.0;
}

// int_Y^inf dy / (y^2 - sigma), Y > sqrt(max(sigma, 0)).
double inverse_square_tail(double Y, double sigma) {
  if (sigma > 0.0) {
    const double s = std::sqrt(sigma);
    return std::atanh(s / Y) / s;
  }
  if (sigma < 0.0) {
    const double s = std::sqrt(-sigma);
    return std::atan(s / Y) / s;
  }
  return 1.0 / Y;
}

// sum_{n in Z} 1/(sigma - (c + 2na)^2), optionally without n = 0.
//
// These terms decay only like 1/n^2, so the remainder past N is replaced by
// its midpoint-rule integral from N + 1/2; the error of that replacement,
// bounded by |phi'(N + 1/2)|/24 per side, is reported as the tail estimate.
SeriesResult image_family_sum(double c, double sigma, double a, bool skip_zero,
                              const SeriesControl& ctrl) {
  validate(ctrl);
  const auto phi = [&](double n) {
    const double y = c + 2.0 * n * a;
    return 1.0 / (sigma - y * y);
  };
  const double reach = std::sqrt(std::max(sigma, 0.0));
  const auto n_clear = static_cast<std::int64_t>(std::ceil((2.0 * reach + std::abs(c)) / a)) + 2;

  CompensatedSum acc;
  if (!skip_zero) acc.add(phi(0.0));
  std::int64_t n_done = 0;
  std::int64_t target = std::max({ctrl.n_min, ctrl.block, n_clear});
  for (;;) {
    const std::int64_t stop = std::min(target, ctrl.n_max);
    for (std::int64_t n = n_done + 1; n <= stop; ++n) {
      const auto nd = static_cast<double>(n);
      acc.add(phi(nd) + phi(-nd));
    }
    n_done = stop;
    const double edge = static_cast<double>(n_done) + 0.5;
    const double y_plus = c + 2.0 * a * edge;
    const double y_minus = 2.0 * a * edge - c;
    const double tail_integral =
        -(inverse_square_tail(y_plus, sigma) + inverse_square_tail(y_minus, sigma)) / (2.0 * a);
    const auto dphi = [&](double y) {
      const double d = y * y - sigma;
      return 4.0 * a * y / (d * d);
    };
    const double tail = (std::abs(dphi(y_plus)) + std::abs(dphi(y_minus))) / 24.0;
    const double value = acc.value() + tail_integral;
    if (tail <= ctrl.rel_tol * std::abs(value) || tail == 0.0) return {value, tail, n_done};
    if (n_done >= ctrl.n_max) {
      std::ostringstream msg;
      msg << "photon two-point image sum not converged after " << n_done << " terms";
      throw ConvergenceError(msg.str(), tail);
    }
    target = 2 * n_done;
  }
}

void check_family_light_cone(double c, double sigma, double a, bool skip_zero, double exclusion) {
  if (sigma < 0.0) return;
  const double reach = std::sqrt(sigma);
  // Offsets |c + 2na| closest to reach.
  const double centre = std::round((reach - c) / (2.0 * a));
  const double centre_neg = std::round((-reach - c) / (2.0 * a));
  for (double base : {centre, centre_neg}) {
    for (double n = base - 1.0; n <= base + 1.0; n += 1.0) {
      if (skip_zero && n == 0.0) continue;
      const double y = std::abs(c + 2.0 * n * a);
      const double gap = std::abs(reach - y);
      if (gap == 0.0 || gap < exclusion * reach) {
        SingularityReport r{reach > 0.0 ? gap / reach : 0.0, y, true};
        throw SingularWindowError("photon two-point image on its light cone", r);
      }
    }
  }
}

}  // namespace

double minkowski_two_point(int mu, int nu, double dt, const std::array<double, 3>& dx) {
  const double eta = metric(mu, nu);
  const double interval = dt * dt - (dx[0] * dx[0] + dx[1] * dx[1] + dx[2] * dx[2]);
  if (interval == 0.0) throw DomainError("Minkowski two-point function on the light cone");
  if (eta == 0.0) return 0.0;
  return eta / (4.0 * kPi * kPi * interval);
}

CorrelatorValue renormalized_photon_two_point(int mu, int nu, double dt, double dx, double dy,
                                              double z, double z_prime, const Geometry& geom,
                                              const SeriesControl& ctrl) {
  const double eta = metric(mu, nu);
  if (!(z >= 0.0 && z <= geom.a()) || !(z_prime >= 0.0 && z_prime <= geom.a()))
    throw DomainError("field points must lie between the plates");
  const double normal = (mu == 3 && nu == 3) ? 1.0 : 0.0;
  const double w_reflected = eta + 2.0 * normal;
  const double w_direct = eta;
  if (w_reflected == 0.0 && w_direct == 0.0) return {};

  const double sigma = dt * dt - dx * dx - dy * dy;
  const double a = geom.a();
  const double c_reflected = z + z_prime;
  const double c_direct = z - z_prime;
  check_family_light_cone(c_reflected, sigma, a, false, ctrl.exclusion);
  check_family_light_cone(c_direct, sigma, a, true, ctrl.exclusion);
  if (sigma == 0.0 && (c_reflected == 0.0))
    throw SingularWindowError("coincident image on the plate", SingularityReport{0.0, 0.0, true});

  const double norm = 1.0 / (4.0 * kPi * kPi);
  CorrelatorValue out;
  if (w_reflected != 0.0) {
    const auto s = image_family_sum(c_reflected, sigma, a, false, ctrl);
    out.value -= w_reflected * norm * s.value;
    out.tail_estimate += std::abs(w_reflected) * norm * s.tail_estimate;
    out.n_used = std::max(out.n_used, s.n_used);
  }
  if (w_direct != 0.0) {
    const auto s = image_family_sum(c_direct, sigma, a, true, ctrl);
    out.value += w_direct * norm * s.value;
    out.tail_estimate += std::abs(w_direct) * norm * s.tail_estimate;
    out.n_used = std::max(out.n_used, s.n_used);
  }
  return out;
}

namespace {

template <class Raw>
CorrelatorValue equal_point_correlator(double dt, const Geometry& geom, const SeriesControl& ctrl,
                                       double image_sign, Raw raw) {
  if (!std::isfinite(dt)) throw DomainError("time separation must be finite");
  const double s = std::abs(dt);
  const double a = geom.a();
  const double z = geom.z();
  if (s > 0.0) {
    const auto rep = kernels::singularity_report(z, a, s, ctrl.exclusion);
    if (rep.is_near) throw SingularWindowError("time separation on an image light cone", rep);
  }
  const double term0 = image_sign * raw(z, s);
  const auto pair = [&](std::int64_t n) {
    const double na = static_cast<double>(n) * a;
    return 2.0 * raw(na, s) + image_sign * (raw(na + z, s) + raw(na - z, s));
  };
  const auto r = sum_image_pairs(term0, pair, far_field_start(s, a), ctrl);
  const double inv_pi2 = 1.0 / (kPi * kPi);
  return {r.value * inv_pi2, r.tail_estimate * inv_pi2, r.n_used};
}

}  // namespace

CorrelatorValue exx_renormalized(double dt, const Geometry& geom, const SeriesControl& ctrl) {
  return equal_point_correlator(dt, geom, ctrl, -1.0, kernels::raw_long);
}

CorrelatorValue ezz_renormalized(double dt, const Geometry& geom, const SeriesControl& ctrl) {
  return equal_point_correlator(dt, geom, ctrl, +1.0, kernels::raw_trans);
}

}  // namespace vacbrown
