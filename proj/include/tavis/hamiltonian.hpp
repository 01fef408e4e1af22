#pragma once

#include <vector>

#include "tavis/params.hpp"
#include "tavis/space.hpp"

namespace tavis {

/// H = w0 a^dag a + sum_i [(w0 - delta) s_i^dag s_i + g (s_i^dag a + a^dag s_i)].
Matrix build_hamiltonian(const SystemParams& params, const TruncatedBasis& basis);

/// Eigenstate of the resonant Hamiltonian restricted to manifold n.
///
/// Branches 1-3 live in the triplet sector (1 at n w0, 2/3 at n w0 +/- g sqrt(4n-2)),
/// branch 4 is the singlet |n-1,S>. For n = 1 branch 1 does not exist.
struct DressedLevel {
  int manifold = 0;
  int branch = 0;
  double energy = 0.0;
  /// Amplitudes over the states of the manifold, in TruncatedBasis order.
  Vector state;
};

/// Closed-form dressed levels at zero detuning. Throws for n < 1 or delta != 0.
std::vector<DressedLevel> dressed_levels_analytic(int n, const SystemParams& params);

struct HamiltonianLine {
  int upper_branch = 0;  ///< branch in manifold n
  int lower_branch = 0;  ///< branch in manifold n - 1 (0 for the vacuum)
  double frequency = 0.0;
};

/// All differences omega_n^(i) - omega_{n-1}^(j) at zero detuning.
std::vector<HamiltonianLine> hamiltonian_transition_frequencies(int n, const SystemParams& params);

}  // namespace tavis
