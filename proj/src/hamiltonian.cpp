#include "tavis/hamiltonian.hpp"

#include <cmath>
#include <string>

namespace tavis {

void SystemParams::validate() const {
  if (!std::isfinite(omega0) || !std::isfinite(delta) || !std::isfinite(g) ||
      !std::isfinite(gamma_a) || !std::isfinite(gamma_sigma)) {
    throw InvalidArgument("system parameters must be finite");
  }
  if (!(g > 0.0)) throw InvalidArgument("coupling g must be positive");
  if (gamma_a < 0.0 || gamma_sigma < 0.0) throw InvalidArgument("decay rates must be non-negative");
}

Matrix build_hamiltonian(const SystemParams& params, const TruncatedBasis& basis) {
  const BareOperators ops = bare_operators(basis);
  const Matrix photons = ops.a.adjoint() * ops.a;
  const Matrix matter = ops.sigma1.adjoint() * ops.sigma1 + ops.sigma2.adjoint() * ops.sigma2;
  const Matrix coupling = ops.sigma1.adjoint() * ops.a + ops.sigma2.adjoint() * ops.a;
  Matrix h = params.omega0 * photons + (params.omega0 - params.delta) * matter +
             params.g * (coupling + coupling.adjoint());
  // Remove rounding asymmetry from the products above.
  return 0.5 * (h + h.adjoint());
}

std::vector<DressedLevel> dressed_levels_analytic(int n, const SystemParams& params) {
  if (n < 1) throw InvalidArgument("dressed levels are defined for manifolds n >= 1");
  if (params.delta != 0.0) throw InvalidArgument("closed-form dressed levels require zero detuning");

  const double nd = n;
  const double center = nd * params.omega0;
  const double split = params.g * std::sqrt(4.0 * nd - 2.0);
  const auto dim = static_cast<Eigen::Index>(TruncatedBasis::full_manifold_dimension(n));

  // Positions inside the manifold follow TruncatedBasis: T-1, T0, T1, S.
  // For n = 1 the T1 slot is absent and the singlet moves to index 2.
  const Eigen::Index t_minus = 0, t_zero = 1, t_plus = 2, singlet = (n == 1) ? 2 : 3;

  std::vector<DressedLevel> levels;
  if (n >= 2) {
    Vector v = Vector::Zero(dim);
    v(t_plus) = std::sqrt(nd / (2.0 * nd - 1.0));
    v(t_minus) = -std::sqrt((nd - 1.0) / (2.0 * nd - 1.0));
    levels.push_back({n, 1, center, v});
  }
  for (int sign : {+1, -1}) {
    Vector v = Vector::Zero(dim);
    v(t_minus) = std::sqrt(nd / (4.0 * nd - 2.0));
    v(t_zero) = sign / std::sqrt(2.0);
    if (n >= 2) v(t_plus) = std::sqrt((nd - 1.0) / (4.0 * nd - 2.0));
    levels.push_back({n, sign > 0 ? 2 : 3, center + sign * split, v});
  }
  Vector s = Vector::Zero(dim);
  s(singlet) = 1.0;
  levels.push_back({n, 4, center, s});
  return levels;
}

std::vector<HamiltonianLine> hamiltonian_transition_frequencies(int n, const SystemParams& params) {
  if (n < 1) throw InvalidArgument("transitions require n >= 1");
  if (params.delta != 0.0) throw InvalidArgument("closed-form transitions require zero detuning");
  std::vector<HamiltonianLine> lines;
  const auto upper = dressed_levels_analytic(n, params);
  if (n == 1) {
    for (const auto& u : upper) lines.push_back({u.branch, 0, u.energy});
    return lines;
  }
  const auto lower = dressed_levels_analytic(n - 1, params);
  for (const auto& u : upper) {
    for (const auto& l : lower) lines.push_back({u.branch, l.branch, u.energy - l.energy});
  }
  return lines;
}

}  // namespace tavis
