#pragma once

#include "tavis/hamiltonian.hpp"
#include "tavis/params.hpp"
#include "tavis/space.hpp"

namespace tavis {

/// Which emission channel a correlation or spectrum refers to.
enum class EmissionOperator { Cavity, Emitter1, Emitter2 };

std::string to_string(EmissionOperator op);
std::optional<EmissionOperator> parse_emission_operator(std::string_view text);

/// Immutable bundle of parameters, basis and the matrices every solver needs.
class System {
 public:
  System(const SystemParams& params, int photon_cutoff);

  const SystemParams& params() const { return params_; }
  const TruncatedBasis& basis() const { return basis_; }
  const BareOperators& operators() const { return ops_; }
  Eigen::Index dimension() const { return static_cast<Eigen::Index>(basis_.size()); }

  const Matrix& hamiltonian() const { return hamiltonian_; }
  /// H - i/2 sum_c gamma_c C^dag C over the three decay channels.
  const Matrix& effective_hamiltonian() const { return effective_; }

  const Matrix& emission(EmissionOperator op) const;

  /// Largest excitation number carried by rho (entries above `tol`).
  int max_excitation(const Matrix& rho, double tol = 0.0) const;
  /// Throws InvalidArgument if rho touches an incomplete manifold.
  void require_supported(const Matrix& rho) const;

 private:
  SystemParams params_;
  TruncatedBasis basis_;
  BareOperators ops_;
  Matrix hamiltonian_;
  Matrix effective_;
};

}  // namespace tavis
