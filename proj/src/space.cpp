#include "tavis/space.hpp"

#include <cmath>

namespace tavis {

std::string to_string(Dicke d) {
  switch (d) {
    case Dicke::TMinus:
      return "T-1";
    case Dicke::TZero:
      return "T0";
    case Dicke::TPlus:
      return "T1";
    case Dicke::Singlet:
      return "S";
  }
  return "?";
}

std::optional<Dicke> parse_dicke(std::string_view text) {
  for (Dicke d : kDickeLabels) {
    if (text == to_string(d)) return d;
  }
  if (text == "T+1") return Dicke::TPlus;
  return std::nullopt;
}

std::string to_string(const BasisState& s) {
  return "|" + std::to_string(s.photons) + "," + to_string(s.matter) + ">";
}

TruncatedBasis::TruncatedBasis(int photon_cutoff) : cutoff_(photon_cutoff) {
  if (photon_cutoff < 0) throw InvalidArgument("photon cutoff must be non-negative");
  manifolds_.resize(static_cast<std::size_t>(cutoff_ + 3));
  auto add = [&](int n, int photons, Dicke matter) {
    if (photons < 0 || photons > cutoff_) return;
    manifolds_[static_cast<std::size_t>(n)].push_back(states_.size());
    states_.push_back({photons, matter});
  };
  for (int n = 0; n <= cutoff_ + 2; ++n) {
    add(n, n, Dicke::TMinus);
    add(n, n - 1, Dicke::TZero);
    add(n, n - 2, Dicke::TPlus);
    add(n, n - 1, Dicke::Singlet);
  }
}

std::optional<std::size_t> TruncatedBasis::index_of(const BasisState& s) const {
  const int n = s.excitation();
  if (n < 0 || n > max_manifold()) return std::nullopt;
  for (std::size_t i : manifolds_[static_cast<std::size_t>(n)]) {
    if (states_[i] == s) return i;
  }
  return std::nullopt;
}

std::span<const std::size_t> TruncatedBasis::manifold(int n) const {
  if (n < 0 || n > max_manifold()) {
    throw InvalidArgument("manifold index " + std::to_string(n) + " outside 0.." +
                          std::to_string(max_manifold()));
  }
  return manifolds_[static_cast<std::size_t>(n)];
}

std::size_t TruncatedBasis::full_manifold_dimension(int n) {
  if (n < 0) return 0;
  if (n == 0) return 1;
  if (n == 1) return 3;
  return 4;
}

bool TruncatedBasis::is_complete(int n) const {
  return n >= 0 && n <= max_manifold() && manifold_dimension(n) == full_manifold_dimension(n);
}

TruncatedBasis build_basis(int photon_cutoff) { return TruncatedBasis(photon_cutoff); }

Eigen::Matrix4cd product_to_dicke() {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
  // columns: |GG>, |XG>, |GX>, |XX>
  u(0, 0) = 1.0;
  u(1, 1) = r;
  u(1, 2) = r;
  u(2, 3) = 1.0;
  u(3, 1) = r;
  u(3, 2) = -r;
  return u;
}

namespace {

// Emitter lowering operators in the product basis.
Eigen::Matrix4cd product_sigma(int emitter) {
  Eigen::Matrix4cd s = Eigen::Matrix4cd::Zero();
  if (emitter == 1) {
    s(0, 1) = 1.0;  // |XG> -> |GG>
    s(2, 3) = 1.0;  // |XX> -> |GX>
  } else {
    s(0, 2) = 1.0;  // |GX> -> |GG>
    s(1, 3) = 1.0;  // |XX> -> |XG>
  }
  return s;
}

Matrix lift_matter(const TruncatedBasis& basis, const Eigen::Matrix4cd& dicke_op) {
  const auto dim = static_cast<Eigen::Index>(basis.size());
  Matrix out = Matrix::Zero(dim, dim);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const BasisState& from = basis.state(c);
    for (Dicke to : kDickeLabels) {
      const cplx amp = dicke_op(static_cast<int>(to), static_cast<int>(from.matter));
      if (amp == cplx{}) continue;
      if (auto r = basis.index_of({from.photons, to})) {
        out(static_cast<Eigen::Index>(*r), static_cast<Eigen::Index>(c)) = amp;
      }
    }
  }
  return out;
}

}  // namespace

BareOperators bare_operators(const TruncatedBasis& basis) {
  const auto dim = static_cast<Eigen::Index>(basis.size());
  BareOperators ops;
  ops.a = Matrix::Zero(dim, dim);
  ops.number = Matrix::Zero(dim, dim);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const BasisState& s = basis.state(c);
    const auto ci = static_cast<Eigen::Index>(c);
    ops.number(ci, ci) = static_cast<double>(s.excitation());
    if (s.photons == 0) continue;
    const auto r = basis.index_of({s.photons - 1, s.matter});
    ops.a(static_cast<Eigen::Index>(*r), ci) = std::sqrt(static_cast<double>(s.photons));
  }
  const Eigen::Matrix4cd u = product_to_dicke();
  ops.sigma1 = lift_matter(basis, u * product_sigma(1) * u.adjoint());
  ops.sigma2 = lift_matter(basis, u * product_sigma(2) * u.adjoint());
  return ops;
}

Matrix manifold_projector(const TruncatedBasis& basis, int n) {
  const auto dim = static_cast<Eigen::Index>(basis.size());
  Matrix p = Matrix::Zero(dim, dim);
  for (std::size_t i : basis.manifold(n)) {
    p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 1.0;
  }
  return p;
}

Matrix manifold_block(const Matrix& op, const TruncatedBasis& basis, int row_n, int col_n) {
  const auto rows = basis.manifold(row_n);
  const auto cols = basis.manifold(col_n);
  Matrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          op(static_cast<Eigen::Index>(rows[r]), static_cast<Eigen::Index>(cols[c]));
    }
  }
  return out;
}

}  // namespace tavis
