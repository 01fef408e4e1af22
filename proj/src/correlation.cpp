#include <unsupported/Eigen/MatrixFunctions>

#include "tavis/liouvillian.hpp"
#include "tavis/spectrum.hpp"

namespace tavis {

namespace {

void check_grid(std::span<const double> grid, const char* name) {
  if (grid.empty()) throw InvalidArgument(std::string(name) + " grid is empty");
  if (grid.front() < 0.0) throw InvalidArgument(std::string(name) + " grid must be non-negative");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw InvalidArgument(std::string(name) + " grid must be increasing");
  }
}

Vector gather(const Matrix& rho, const OperatorBlock& sector) {
  Vector v(static_cast<Eigen::Index>(sector.pairs.size()));
  for (std::size_t k = 0; k < sector.pairs.size(); ++k) {
    const auto [l, u] = sector.pairs[k];
    v(static_cast<Eigen::Index>(k)) = rho(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(l));
  }
  return v;
}

}  // namespace

CorrelationGrid two_time_correlation(const System& system, EmissionOperator op, const Matrix& rho0,
                                     std::span<const double> t_grid, std::span<const double> tau_grid) {
  check_grid(t_grid, "t");
  check_grid(tau_grid, "tau");
  system.require_supported(rho0);

  const OperatorBlock pop = population_matrix(system);
  const OperatorBlock reg = regression_matrix(system);
  const Matrix& o = system.emission(op);
  const Matrix o_dag = o.adjoint();

  // Row vector c with G* = c . w, c_k = O(l_k, u_k).
  Eigen::RowVectorXcd c(static_cast<Eigen::Index>(reg.pairs.size()));
  for (std::size_t k = 0; k < reg.pairs.size(); ++k) {
    const auto [l, u] = reg.pairs[k];
    c(static_cast<Eigen::Index>(k)) = o(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(u));
  }

  CorrelationGrid out;
  out.op = op;
  out.t.assign(t_grid.begin(), t_grid.end());
  out.tau.assign(tau_grid.begin(), tau_grid.end());
  out.values = Matrix::Zero(static_cast<Eigen::Index>(t_grid.size()), static_cast<Eigen::Index>(tau_grid.size()));

  std::vector<Eigen::RowVectorXcd> rows;  // c exp(-i L tau_j)
  rows.reserve(tau_grid.size());
  for (double tau : tau_grid) rows.push_back(c * Matrix((-kI * tau) * reg.matrix).exp());

  Vector y = gather(rho0, pop);
  double t_prev = 0.0;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    const double dt = t_grid[i] - t_prev;
    if (dt > 0.0) y = Matrix((-kI * dt) * pop.matrix).exp() * y;
    t_prev = t_grid[i];

    Matrix rho = Matrix::Zero(system.dimension(), system.dimension());
    for (std::size_t k = 0; k < pop.pairs.size(); ++k) {
      const auto [l, u] = pop.pairs[k];
      rho(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(l)) = y(static_cast<Eigen::Index>(k));
    }
    const Vector w0 = gather(rho * o_dag, reg);
    for (std::size_t j = 0; j < tau_grid.size(); ++j) {
      out.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = std::conj((rows[j] * w0).value());
    }
  }
  return out;
}

CorrelationGrid two_time_correlation_direct(const System& system, EmissionOperator op,
                                            const Matrix& rho0, std::span<const double> t_grid,
                                            std::span<const double> tau_grid) {
  check_grid(t_grid, "t");
  check_grid(tau_grid, "tau");
  system.require_supported(rho0);
  const Eigen::Index d = system.dimension();
  const Matrix gen = build_generator(system);
  const Matrix& o = system.emission(op);
  const Matrix o_dag = o.adjoint();

  CorrelationGrid out;
  out.op = op;
  out.t.assign(t_grid.begin(), t_grid.end());
  out.tau.assign(tau_grid.begin(), tau_grid.end());
  out.values = Matrix::Zero(static_cast<Eigen::Index>(t_grid.size()), static_cast<Eigen::Index>(tau_grid.size()));

  auto propagate = [&](const Matrix& x, double time) {
    const Vector v = Matrix(gen * time).exp() * Eigen::Map<const Vector>(x.data(), d * d);
    return Matrix(Eigen::Map<const Matrix>(v.data(), d, d));
  };
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    const Matrix rho_t = propagate(rho0, t_grid[i]);
    const Matrix source = o * rho_t;
    for (std::size_t j = 0; j < tau_grid.size(); ++j) {
      out.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          (o_dag * propagate(source, tau_grid[j])).trace();
    }
  }
  return out;
}

}  // namespace tavis
