#include "tavis/system.hpp"

#include <algorithm>

namespace tavis {

std::string to_string(EmissionOperator op) {
  switch (op) {
    case EmissionOperator::Cavity:
      return "a";
    case EmissionOperator::Emitter1:
      return "sigma1";
    case EmissionOperator::Emitter2:
      return "sigma2";
  }
  return "?";
}

std::optional<EmissionOperator> parse_emission_operator(std::string_view text) {
  if (text == "a" || text == "cavity") return EmissionOperator::Cavity;
  if (text == "sigma1") return EmissionOperator::Emitter1;
  if (text == "sigma2") return EmissionOperator::Emitter2;
  return std::nullopt;
}

System::System(const SystemParams& params, int photon_cutoff)
    : params_(params), basis_(photon_cutoff), ops_(bare_operators(basis_)) {
  params_.validate();
  hamiltonian_ = build_hamiltonian(params_, basis_);
  const Matrix decay = 0.5 * params_.gamma_a * (ops_.a.adjoint() * ops_.a) +
                       0.5 * params_.gamma_sigma *
                           (ops_.sigma1.adjoint() * ops_.sigma1 + ops_.sigma2.adjoint() * ops_.sigma2);
  effective_ = hamiltonian_ - kI * decay;
}

const Matrix& System::emission(EmissionOperator op) const {
  switch (op) {
    case EmissionOperator::Cavity:
      return ops_.a;
    case EmissionOperator::Emitter1:
      return ops_.sigma1;
    case EmissionOperator::Emitter2:
      return ops_.sigma2;
  }
  throw InvalidArgument("unknown emission operator");
}

int System::max_excitation(const Matrix& rho, double tol) const {
  if (rho.rows() != dimension() || rho.cols() != dimension()) {
    throw InvalidArgument("density matrix shape does not match the basis");
  }
  int top = 0;
  for (Eigen::Index r = 0; r < rho.rows(); ++r) {
    for (Eigen::Index c = 0; c < rho.cols(); ++c) {
      if (std::abs(rho(r, c)) > tol) {
        top = std::max({top, basis_.state(static_cast<std::size_t>(r)).excitation(),
                        basis_.state(static_cast<std::size_t>(c)).excitation()});
      }
    }
  }
  return top;
}

void System::require_supported(const Matrix& rho) const {
  const int top = max_excitation(rho);
  if (top > basis_.photon_cutoff()) {
    throw InvalidArgument("initial state reaches manifold " + std::to_string(top) +
                          " but only manifolds up to the photon cutoff " +
                          std::to_string(basis_.photon_cutoff()) + " are complete");
  }
}

}  // namespace tavis
