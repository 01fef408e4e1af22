#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "tavis/liouvillian.hpp"

namespace tavis {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

class DormandPrince {
 public:
  DormandPrince(const System& system, const EvolveOptions& opt) : sys_(system), opt_(opt) {}

  // Advances rho from t0 to t1 in place.
  void advance(Matrix& rho, double t0, double t1) {
    double t = t0;
    double h = h_ > 0.0 ? std::min(h_, t1 - t0) : initial_step(t1 - t0);
    Matrix k1 = lindblad_rhs(sys_, rho);
    std::size_t steps = 0;
    while (t < t1) {
      if (++steps > opt_.max_steps_per_interval) fail("step budget exhausted", t0, t1);
      const bool last = t + h >= t1;
      if (last) h = t1 - t;
      const Matrix k2 = lindblad_rhs(sys_, rho + h * (a21 * k1));
      const Matrix k3 = lindblad_rhs(sys_, rho + h * (a31 * k1 + a32 * k2));
      const Matrix k4 = lindblad_rhs(sys_, rho + h * (a41 * k1 + a42 * k2 + a43 * k3));
      const Matrix k5 = lindblad_rhs(sys_, rho + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
      const Matrix k6 =
          lindblad_rhs(sys_, rho + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
      const Matrix next = rho + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
      const Matrix k7 = lindblad_rhs(sys_, next);
      const Matrix err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

      double norm = 0.0;
      for (Eigen::Index i = 0; i < err.size(); ++i) {
        const double scale =
            opt_.atol + opt_.rtol * std::max(std::abs(rho.data()[i]), std::abs(next.data()[i]));
        norm = std::max(norm, std::abs(err.data()[i]) / scale);
      }
      if (norm <= 1.0) {
        t = last ? t1 : t + h;
        rho = next;
        k1 = k7;
        const double grow = norm == 0.0 ? 5.0 : std::min(5.0, 0.9 * std::pow(norm, -0.2));
        if (!last) h *= grow;
        else h_ = h * grow;
      } else {
        h *= std::max(0.2, 0.9 * std::pow(norm, -0.2));
        if (h < opt_.min_step) fail("step size underflow", t0, t1);
      }
    }
    if (h_ <= 0.0) h_ = h;
  }

 private:
  double initial_step(double span) const {
    const double scale = std::max(sys_.effective_hamiltonian().cwiseAbs().maxCoeff(), 1e-12);
    return std::min(span, 0.01 / scale);
  }

  [[noreturn]] static void fail(const char* why, double t0, double t1) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "integration failed (" << why << ") on interval [" << t0 << ", " << t1 << "]";
    throw IntegrationFailure(msg.str(), t0, t1);
  }

  const System& sys_;
  EvolveOptions opt_;
  double h_ = 0.0;
};

void check_grid(std::span<const double> t_grid) {
  if (t_grid.empty()) throw InvalidArgument("time grid is empty");
  if (t_grid.front() != 0.0) throw InvalidArgument("time grid must start at 0");
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > t_grid[i - 1])) throw InvalidArgument("time grid must be strictly increasing");
  }
}

}  // namespace

Trajectory evolve(const System& system, const Matrix& rho0, std::span<const double> t_grid,
                  const EvolveOptions& options) {
  check_grid(t_grid);
  if (rho0.rows() != system.dimension() || rho0.cols() != system.dimension()) {
    throw InvalidArgument("initial density matrix shape does not match the basis");
  }
  system.require_supported(rho0);

  Trajectory traj;
  traj.states.reserve(t_grid.size());
  traj.states.push_back({rho0, 0.0});
  Matrix rho = rho0;

  if (options.backend == EvolveBackend::RungeKutta) {
    DormandPrince stepper(system, options);
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
      stepper.advance(rho, t_grid[i - 1], t_grid[i]);
      traj.states.push_back({rho, t_grid[i]});
    }
    return traj;
  }

  const Matrix gen = build_generator(system);
  const Eigen::Index d = system.dimension();
  std::map<double, Matrix> propagators;
  Vector v = Eigen::Map<const Vector>(rho.data(), d * d);
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    const double dt = t_grid[i] - t_grid[i - 1];
    auto it = propagators.find(dt);
    if (it == propagators.end()) it = propagators.emplace(dt, Matrix((gen * dt).exp())).first;
    v = it->second * v;
    Matrix next = Eigen::Map<const Matrix>(v.data(), d, d);
    traj.states.push_back({0.5 * (next + next.adjoint()), t_grid[i]});
  }
  return traj;
}

}  // namespace tavis
