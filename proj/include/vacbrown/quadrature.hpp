#ifndef VACBROWN_QUADRATURE_HPP
#define VACBROWN_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace vacbrown::quad {

struct Tolerance {
  double abs_tol = 1e-15;
  double rel_tol = 1e-12;
  int max_subdivisions = 4000;
};

struct Result {
  double value = 0.0;
  double error = 0.0;
  long evaluations = 0;
};

/// Adaptive Gauss-Kronrod (7/15) quadrature with global bisection of the
/// interval carrying the largest error estimate.
/// Throws QuadratureError if the tolerance is not met.
Result integrate(const std::function<double(double)>& f, double lo, double hi, Tolerance tol = {});

/// Truncated Taylor series c_0 + c_1 s + ... + c_N s^N about some point.
class Series {
 public:
  explicit Series(std::size_t order, double c0 = 0.0) : c_(order + 1, 0.0) { c_[0] = c0; }
  /// The series of (x0 + s), i.e. the identity map expanded about x0.
  static Series variable(std::size_t order, double x0);

  std::size_t order() const noexcept { return c_.size() - 1; }
  double operator[](std::size_t i) const { return c_[i]; }
  double& operator[](std::size_t i) { return c_[i]; }

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(double k);
  friend Series operator+(Series l, const Series& r) { return l += r; }
  friend Series operator-(Series l, const Series& r) { return l -= r; }
  friend Series operator*(Series l, double k) { return l *= k; }
  friend Series operator*(double k, Series r) { return r *= k; }
  friend Series operator*(const Series& l, const Series& r);
  friend Series operator/(const Series& l, const Series& r);

 private:
  std::vector<double> c_;
};

/// Hadamard finite part of int_lo^hi psi(x) / (x - b)^p dx for lo < b < hi,
/// where `psi` holds the Taylor coefficients of an analytic psi about b whose
/// radius of convergence exceeds max(b - lo, hi - b). The regular part is
/// integrated term by term; the singular terms take their finite parts
/// (odd powers in principal value).
double finite_part(const Series& psi, double b, int p, double lo, double hi);

}  // namespace vacbrown::quad

#endif  // VACBROWN_QUADRATURE_HPP
