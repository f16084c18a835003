#ifndef VACBROWN_KERNELS_HPP
#define VACBROWN_KERNELS_HPP

// Per-image closed forms of the time-integrated electric-field correlators.
//
// For an image at offset x the equal-point correlators carry the summands
//   K_L(x, s) = (s^2 + 4x^2) / (s^2 - 4x^2)^3      (E_x E_x, E_y E_y)
//   K_T(x, s) = 1 / (s^2 - 4x^2)^2                  (E_z E_z)
// with s the time separation. The kernels below are
//   f(x, t) = int_0^t int_0^t K(x, t' - t'') dt' dt''
//   g(x, t) = int_0^t int_0^t (t - t')(t - t'') K(x, t' - t'') dt' dt''
// in closed form. All logarithms are taken of moduli, so the kernels stay
// real on both sides of the light cone t = 2|x|, where they are singular.

#include <cstdint>

#include "vacbrown/errors.hpp"

namespace vacbrown::kernels {

inline constexpr double kDefaultExclusion = 1e-6;

enum class Kernel { f_long, f_trans, g_long, g_trans };

/// Relative half-width of the excluded window around t = 2|x|.
struct KernelOptions {
  double exclusion = kDefaultExclusion;
};

/// Parallel velocity kernel:
///   t^2/(8x^2(t^2-4x^2)) - t/(64|x|^3) ln((t+2|x|)/(t-2|x|))^2.
/// Tends to 1/(3t^2) for t >> |x| and to -t^2/(16x^4) for t << |x|.
double f_long(double x, double t, KernelOptions opt = {});

/// Normal velocity kernel: t/(32|x|^3) ln((2|x|+t)/(2|x|-t))^2.
double f_trans(double x, double t, KernelOptions opt = {});

/// Parallel position kernel:
///   -t^3/(192|x|^3) ln(...)^2 + t^2/(24x^2) + (1/6) ln(|t^2-4x^2|/(4x^2)).
double g_long(double x, double t, KernelOptions opt = {});

/// Normal position kernel:
///   t^2/(24x^2) + t^3/(96|x|^3) ln(...)^2 + (1/6) ln(|t^2-4x^2|/(4x^2)).
double g_trans(double x, double t, KernelOptions opt = {});

double evaluate(Kernel k, double x, double t, KernelOptions opt = {});

/// Raw correlator summands; throw DomainError exactly on the light cone.
double raw_long(double x, double dt);
double raw_trans(double x, double dt);

/// Minimum of |t - 2|x|| / t over the image offsets of a particle at height z
/// between plates at 0 and a: x = n a (n != 0) and x = n a + z, with |n| <= n_max.
SingularityReport singularity_report(double z, double a, double t, std::int64_t n_max,
                                     double threshold = kDefaultExclusion);

/// Same report with the image range chosen to cover every offset that can
/// come within reach of t.
SingularityReport singularity_report(double z, double a, double t,
                                     double threshold = kDefaultExclusion);

/// The time midway between the two light-cone times 2|x| that bracket t.
/// Returns t unchanged when t lies below the first light cone.
double regular_time_near(double z, double a, double t);

}  // namespace vacbrown::kernels

#endif  // VACBROWN_KERNELS_HPP
