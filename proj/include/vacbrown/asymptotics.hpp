#ifndef VACBROWN_ASYMPTOTICS_HPP
#define VACBROWN_ASYMPTOTICS_HPP

// Approximate dispersions in the two limiting regimes a >> t and t >> a.
// These are fixed-order reference formulas; they are never extended and are
// always compared against the exact image sums rather than trusted.

#include "vacbrown/dispersions.hpp"

namespace vacbrown {

enum class RegimeTag { large_a, large_t, neither };

struct Regime {
  RegimeTag tag;
  double quality;  // t/a for large_a, a/t for large_t, max of the two otherwise
};

struct RegimeThresholds {
  double large_a = 0.1;  // t/a at or below this is large_a
  double large_t = 0.1;  // a/t at or below this is large_t
};

const char* to_string(RegimeTag tag);

Regime recommend_regime(const EvalPoint& p, RegimeThresholds thresholds = {});

/// sum_{n in Z} 1/(na + z)^4 = pi^4 (2 + cos(2 pi z/a)) csc^4(pi z/a) / (3 a^4).
double image_sum_quartic(double z, double a);

/// a >> t: all images except those at z and a - z replaced by their leading
/// small-t term (t^2 K(x,0) for velocities, t^4 K(x,0)/4 for positions), the
/// lattice sums done in closed form. Throws RegimeError for t >= a.
ReducedValue approx_large_a(DispersionKind kind, const EvalPoint& p);

/// Further a >> z: single-plate kernel at z plus the second-plate correction
///   parallel velocity  -f_L(z,t) + (1/8)(t/a)^4 (z/a)^8 / t^2
///   normal velocity     f_T(z,t) + pi^4 t^2 / (360 a^4)
///   parallel position  -g_L(z,t) + (1/32)(t/a)^4 (z/a)^8
///   normal position     g_T(z,t) + pi^4 (t/a)^4 / 1440
/// Throws RegimeError unless z <= a/10 and t < a.
ReducedValue approx_large_a_far(DispersionKind kind, const EvalPoint& p);

/// w(u) = PV int_u^inf [1/(x^2 (1 - x^2)) - atanh(x)/x^3] dx
///      = 1/(2u) - (1 + u^2) atanh(u) / (2 u^2),   0 < u < 1.
double w_function(double u);

/// h(z,t) = sum_{n>=1} [2 f_L(na,t) - f_L(z+na,t)] - sum_{n>=2} f_L(z-na,t),
/// summed directly. Requires t > 2a.
ReducedValue h_function(const EvalPoint& p, const SeriesControl& ctrl = {});

/// Sum-by-integration estimate of h:
///   (gamma/t^2) [w(1/gamma) - w(1/gamma + 2z/t)/2 - w(2/gamma - 2z/t)/2],
/// gamma = t/(2a). Requires every argument of w inside (0, 1), i.e. t > 4a.
double h_integral_estimate(const EvalPoint& p);

/// t >> a expansions (through 1/t^4 for velocities, through logs for
/// positions). Throws RegimeError unless t > 10a.
ReducedValue approx_large_t(DispersionKind kind, const EvalPoint& p);

/// approx_large_t specialised to z = a/2.
ReducedValue midpoint_extremal(DispersionKind kind, double a, double t);

}  // namespace vacbrown

#endif  // VACBROWN_ASYMPTOTICS_HPP
