#ifndef VACBROWN_ORACLE_HPP
#define VACBROWN_ORACLE_HPP

// Independent numerical route to every dispersion: quadrature of the raw
// correlator summands over the time window, with no use of the closed-form
// kernels. Used to certify the closed forms and the sign conventions.

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "vacbrown/dispersions.hpp"
#include "vacbrown/quadrature.hpp"

namespace vacbrown::oracle {

enum class RawKernel { longitudinal, transverse };  // K_L and K_T

struct QuadratureSpec {
  double abs_tol = 1e-15;
  double rel_tol = 1e-12;
  int max_subdivisions = 4000;
  /// Half-width, relative to the light-cone time 2|x|, of the window treated
  /// analytically when the time window straddles it (clamped to 1/2).
  double pv_excision = 0.25;
};

void validate(const QuadratureSpec& spec);

struct OracleValue {
  double value = 0.0;
  double error = 0.0;
  bool finite_part = false;  // the window crossed t' - t'' = 2|x|
};

/// int_0^t int_0^t K(x, t' - t'') dt' dt'', evaluated as 2 int_0^t (t - s) K(x, s) ds.
/// For t > 2|x| the pole at s = 2|x| is taken in the Hadamard finite-part sense.
OracleValue velocity_integral(RawKernel k, double x, double t, const QuadratureSpec& spec = {});

/// int_0^t dt1 int_0^t1 dt' int_0^t dt2 int_0^t2 dt'' K(x, t' - t''),
/// evaluated as 2 int_0^t W(s) K(x, s) ds with W(s) = (t - s)^2 (2t + s) / 6.
OracleValue position_integral(RawKernel k, double x, double t, const QuadratureSpec& spec = {});

/// Plain two-dimensional iterated quadrature of the same integrals (without
/// the one-dimensional reduction). Regular window only: requires t < 2|x|.
OracleValue velocity_integral_2d(RawKernel k, double x, double t, const QuadratureSpec& spec = {});
OracleValue position_integral_2d(RawKernel k, double x, double t, const QuadratureSpec& spec = {});

/// Image-by-image quadrature of a dispersion over |n| <= n_images, with the
/// image signs read off the correlators (E_x E_x: +primed, -unprimed;
/// E_z E_z: +primed, +unprimed).
OracleValue dispersion_via_quadrature(DispersionKind kind, const EvalPoint& p,
                                      std::int64_t n_images, const QuadratureSpec& spec = {});

inline constexpr int kReportVersion = 1;

/// Runs the certification grid (x in {0.5, 1, 2}, t/|x| in {0.1, 0.5, 1.5}
/// plus the finite-part point 3) for all four kernels, and the two
/// convention checks (log modulus, normal-position sign).
nlohmann::json adjudication_report(const QuadratureSpec& spec = {});

/// 64-bit FNV-1a of a byte string, as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace vacbrown::oracle

#endif  // VACBROWN_ORACLE_HPP
