#include "tavis/liouvillian.hpp"

#include <Eigen/Eigenvalues>
#include <string>

namespace tavis {

namespace {

void require_square_match(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw InvalidArgument(std::string(what) + ": shape mismatch");
  }
}

struct Channel {
  double rate;
  const Matrix* op;
};

std::vector<Channel> channels(const System& s) {
  const auto& ops = s.operators();
  return {{s.params().gamma_a, &ops.a},
          {s.params().gamma_sigma, &ops.sigma1},
          {s.params().gamma_sigma, &ops.sigma2}};
}

// i * L restricted to the given (l, u) pairs, i.e. the matrix M of d<X>/dt = -i M <X>.
Matrix sector_matrix(const System& system, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  const auto n = static_cast<Eigen::Index>(pairs.size());
  Matrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto [lr, ur] = pairs[static_cast<std::size_t>(r)];
    for (Eigen::Index c = 0; c < n; ++c) {
      const auto [lc, uc] = pairs[static_cast<std::size_t>(c)];
      m(r, c) = kI * generator_element(system, ur, lr, uc, lc);
    }
  }
  return m;
}

void require_complete(const System& system, int n) {
  if (!system.basis().is_complete(n)) {
    throw InvalidArgument("manifold " + std::to_string(n) + " is truncated at photon cutoff " +
                          std::to_string(system.basis().photon_cutoff()));
  }
}

}  // namespace

Matrix dissipator(const Matrix& op, const Matrix& rho) {
  require_square_match(op, rho, "dissipator");
  const Matrix od_o = op.adjoint() * op;
  return 2.0 * op * rho * op.adjoint() - od_o * rho - rho * od_o;
}

Matrix lindblad_rhs(const System& system, const Matrix& rho) {
  require_square_match(system.hamiltonian(), rho, "lindblad_rhs");
  // -i H_eff rho plus its adjoint carries the commutator and anticommutators.
  const Matrix k = -kI * (system.effective_hamiltonian() * rho);
  Matrix jumps = Matrix::Zero(rho.rows(), rho.cols());
  for (const auto& ch : channels(system)) {
    if (ch.rate == 0.0) continue;
    jumps.noalias() += ch.rate * ((*ch.op) * rho * ch.op->adjoint());
  }
  return k + k.adjoint() + 0.5 * (jumps + jumps.adjoint());
}

cplx generator_element(const System& system, std::size_t p, std::size_t q, std::size_t a, std::size_t b) {
  const Matrix& heff = system.effective_hamiltonian();
  const auto pi = static_cast<Eigen::Index>(p), qi = static_cast<Eigen::Index>(q);
  const auto ai = static_cast<Eigen::Index>(a), bi = static_cast<Eigen::Index>(b);
  cplx v{};
  if (q == b) v += -kI * heff(pi, ai);
  if (p == a) v += kI * std::conj(heff(qi, bi));
  for (const auto& ch : channels(system)) {
    if (ch.rate == 0.0) continue;
    v += ch.rate * (*ch.op)(pi, ai) * std::conj((*ch.op)(qi, bi));
  }
  return v;
}

Matrix build_generator(const System& system) {
  const Eigen::Index d = system.dimension();
  const Matrix& heff = system.effective_hamiltonian();
  const Matrix id = Matrix::Identity(d, d);
  Matrix gen = Matrix::Zero(d * d, d * d);
  // vec(A X B) = (B^T kron A) vec(X), column-major.
  auto add_kron = [&](const Matrix& left, const Matrix& right, cplx scale) {
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        const cplx lij = left(i, j);
        if (lij == cplx{}) continue;
        gen.block(i * d, j * d, d, d) += (scale * lij) * right;
      }
    }
  };
  add_kron(id, heff, -kI);
  add_kron(heff.conjugate(), id, kI);
  for (const auto& ch : channels(system)) {
    if (ch.rate == 0.0) continue;
    add_kron(ch.op->conjugate(), *ch.op, ch.rate);
  }
  return gen;
}

cplx expectation(const Matrix& rho, const Matrix& op) {
  require_square_match(rho, op, "expectation");
  return (rho * op).trace();
}

DensityDiagnostics diagnose(const Matrix& rho) {
  DensityDiagnostics d;
  d.trace_error = std::abs(rho.trace() - cplx{1.0, 0.0});
  d.hermiticity_error = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  const Matrix herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  d.min_eigenvalue = es.eigenvalues().minCoeff();
  return d;
}

Matrix pure_density(const Vector& psi) { return psi * psi.adjoint(); }

OperatorBlock regression_block(const System& system, int m) {
  if (m < 1) throw InvalidArgument("regression blocks start at m = 1");
  require_complete(system, m - 1);
  require_complete(system, m);
  OperatorBlock block;
  block.manifold = m;
  for (std::size_t l : system.basis().manifold(m - 1)) {
    for (std::size_t u : system.basis().manifold(m)) block.pairs.emplace_back(l, u);
  }
  block.matrix = sector_matrix(system, block.pairs);
  return block;
}

OperatorBlock population_block(const System& system, int m) {
  if (m < 0) throw InvalidArgument("population blocks start at m = 0");
  require_complete(system, m);
  OperatorBlock block;
  block.manifold = m;
  for (std::size_t l : system.basis().manifold(m)) {
    for (std::size_t u : system.basis().manifold(m)) block.pairs.emplace_back(l, u);
  }
  block.matrix = sector_matrix(system, block.pairs);
  return block;
}

namespace {

OperatorBlock difference_sector(const System& system, int excitation_gap) {
  const auto& basis = system.basis();
  OperatorBlock block;
  for (std::size_t l = 0; l < basis.size(); ++l) {
    for (std::size_t u = 0; u < basis.size(); ++u) {
      if (basis.state(u).excitation() - basis.state(l).excitation() == excitation_gap) {
        block.pairs.emplace_back(l, u);
      }
    }
  }
  block.matrix = sector_matrix(system, block.pairs);
  return block;
}

}  // namespace

OperatorBlock regression_matrix(const System& system) { return difference_sector(system, 1); }

OperatorBlock population_matrix(const System& system) { return difference_sector(system, 0); }

}  // namespace tavis
