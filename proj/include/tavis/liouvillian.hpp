#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "tavis/system.hpp"

namespace tavis {

/// 2 O rho O^dag - O^dag O rho - rho O^dag O.
Matrix dissipator(const Matrix& op, const Matrix& rho);

/// Right-hand side of the master equation,
/// d rho/dt = i[rho, H] + gamma_a/2 L_a + gamma_s/2 sum_i L_{sigma_i}.
/// The result is exactly Hermitian whenever rho is.
Matrix lindblad_rhs(const System& system, const Matrix& rho);

/// Superoperator of the master equation acting on column-major vec(rho);
/// a dim^2 x dim^2 matrix in the manifold-major basis.
Matrix build_generator(const System& system);

/// Generator entry <p| L(|a><b|) |q> without assembling the full matrix.
cplx generator_element(const System& system, std::size_t p, std::size_t q, std::size_t a,
                       std::size_t b);

cplx expectation(const Matrix& rho, const Matrix& op);

struct DensityMatrix {
  Matrix rho;
  double time = 0.0;
};

struct DensityDiagnostics {
  double trace_error = 0.0;        ///< |tr rho - 1|
  double hermiticity_error = 0.0;  ///< max |rho - rho^dag|
  double min_eigenvalue = 0.0;
};

DensityDiagnostics diagnose(const Matrix& rho);

/// |psi><psi| for a normalized amplitude vector.
Matrix pure_density(const Vector& psi);

/// Operator-average block of the form d<X>/dt = -i M <X>.
///
/// Basis operators are |l><u| ordered lexicographically by (l, u) in basis
/// order; `pairs` holds (l, u). Averages of |l><u| are rho(u, l).
struct OperatorBlock {
  int manifold = -1;  ///< m, or -1 for a matrix spanning every sector
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  Matrix matrix;
};

/// Regression block L_m on |l><u| with l in manifold m-1 and u in m.
/// Throws if either manifold is photon-truncated.
OperatorBlock regression_block(const System& system, int m);

/// Population block D_m on |l><u| with both states in manifold m (decay-out
/// part only; cascade terms from m+1 are not included).
OperatorBlock population_block(const System& system, int m);

/// Regression matrix over every coherence sector present in the basis
/// (block upper triangular, feed-in from higher sectors included).
OperatorBlock regression_matrix(const System& system);

/// Population matrix over every manifold present in the basis.
OperatorBlock population_matrix(const System& system);

enum class EvolveBackend { RungeKutta, Exponential };

struct EvolveOptions {
  EvolveBackend backend = EvolveBackend::RungeKutta;
  double rtol = 1e-11;
  double atol = 1e-13;
  double min_step = 1e-12;
  std::size_t max_steps_per_interval = 2'000'000;
};

struct Trajectory {
  std::vector<DensityMatrix> states;
};

/// Propagates rho0 through t_grid (t_grid[0] == 0, strictly increasing).
/// No trace renormalization is applied.
Trajectory evolve(const System& system, const Matrix& rho0, std::span<const double> t_grid,
                  const EvolveOptions& options = {});

}  // namespace tavis
