#ifndef VACBROWN_ERRORS_HPP
#define VACBROWN_ERRORS_HPP

#include <limits>
#include <stdexcept>
#include <string>

namespace vacbrown {

/// Proximity of an evaluation time to the nearest image light cone.
///
/// `distance` is min |t - 2|x|| / t over the image offsets x that were
/// inspected; `is_near` is set when that distance falls below the
/// exclusion threshold in force.
struct SingularityReport {
  double distance = std::numeric_limits<double>::infinity();
  double nearest_offset = 0.0;  // the 2|x| that attains `distance`
  bool is_near = false;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation time too close to t = 2|x| for some image offset x.
class SingularWindowError : public Error {
 public:
  SingularWindowError(const std::string& what, SingularityReport report)
      : Error(what), report_(report) {}
  const SingularityReport& report() const noexcept { return report_; }

 private:
  SingularityReport report_;
};

/// Image sum did not reach its tolerance within the allowed number of terms.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double tail_estimate)
      : Error(what), tail_estimate_(tail_estimate) {}
  double tail_estimate() const noexcept { return tail_estimate_; }

 private:
  double tail_estimate_;
};

/// An approximation was requested outside the regime it was derived for.
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature failed to reach its tolerance.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double achieved_error)
      : Error(what), achieved_error_(achieved_error) {}
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

}  // namespace vacbrown

#endif  // VACBROWN_ERRORS_HPP
