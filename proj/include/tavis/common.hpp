#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace tavis {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr cplx kI{0.0, 1.0};

/// Base class of everything the library throws. The C API maps the
/// concrete type onto a status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The complex Rabi frequency vanished; the trigonometric root formula is 0/0.
class ExceptionalPoint : public Error {
 public:
  using Error::Error;
};

/// The adaptive integrator could not keep the step above its floor.
class IntegrationFailure : public Error {
 public:
  IntegrationFailure(const std::string& what, double t_start, double t_end)
      : Error(what), t_start_(t_start), t_end_(t_end) {}
  double interval_start() const { return t_start_; }
  double interval_end() const { return t_end_; }

 private:
  double t_start_;
  double t_end_;
};

/// A quadrature refinement loop ran out of budget before meeting tolerance.
class ConvergenceFailure : public Error {
 public:
  ConvergenceFailure(const std::string& what, double achieved)
      : Error(what), achieved_(achieved) {}
  double achieved_delta() const { return achieved_; }

 private:
  double achieved_;
};

}  // namespace tavis
