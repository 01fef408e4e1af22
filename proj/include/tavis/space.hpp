#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tavis/common.hpp"

namespace tavis {

/// Collective state of the two emitters: the triplet T-1, T0, T1 and the
/// singlet S.
enum class Dicke : std::uint8_t { TMinus, TZero, TPlus, Singlet };

inline constexpr std::array<Dicke, 4> kDickeLabels = {Dicke::TMinus, Dicke::TZero,
                                                      Dicke::TPlus, Dicke::Singlet};

constexpr int matter_excitations(Dicke d) {
  switch (d) {
    case Dicke::TMinus:
      return 0;
    case Dicke::TPlus:
      return 2;
    default:
      return 1;
  }
}

constexpr bool is_triplet(Dicke d) { return d != Dicke::Singlet; }

std::string to_string(Dicke d);
std::optional<Dicke> parse_dicke(std::string_view text);

/// Fock state of the mode times a Dicke state: |photons, matter>.
struct BasisState {
  int photons = 0;
  Dicke matter = Dicke::TMinus;

  int excitation() const { return photons + matter_excitations(matter); }
  friend bool operator==(const BasisState&, const BasisState&) = default;
};

std::string to_string(const BasisState& s);

/// The 4(n_ph + 1) states with at most n_ph photons, ordered manifold-major.
///
/// Within manifold n the order is |n,T-1>, |n-1,T0>, |n-2,T1>, |n-1,S>
/// (triplet first, singlet last), skipping states that do not exist.
/// Manifolds 0..n_ph are complete; n_ph + 1 and n_ph + 2 lose their
/// high-photon members. Dynamics never climbs manifolds, so truncation is
/// exact as long as the initial state lives in complete manifolds, i.e.
/// n_ph is at least the largest excitation number present initially.
class TruncatedBasis {
 public:
  explicit TruncatedBasis(int photon_cutoff);

  int photon_cutoff() const { return cutoff_; }
  std::size_t size() const { return states_.size(); }
  const std::vector<BasisState>& states() const { return states_; }
  const BasisState& state(std::size_t i) const { return states_.at(i); }
  std::optional<std::size_t> index_of(const BasisState& s) const;

  /// Highest manifold index with at least one state (n_ph + 2).
  int max_manifold() const { return cutoff_ + 2; }
  /// Indices (into states()) of manifold n, in canonical order.
  std::span<const std::size_t> manifold(int n) const;
  std::size_t manifold_dimension(int n) const { return manifold(n).size(); }
  /// Full dimension of an untruncated manifold: 1, 3, 4, 4, ...
  static std::size_t full_manifold_dimension(int n);
  bool is_complete(int n) const;

 private:
  int cutoff_;
  std::vector<BasisState> states_;
  std::vector<std::vector<std::size_t>> manifolds_;
};

TruncatedBasis build_basis(int photon_cutoff);

/// Unitary taking the product basis {|GG>, |XG>, |GX>, |XX>} (columns) to
/// Dicke amplitudes (rows ordered T-1, T0, T1, S).
Eigen::Matrix4cd product_to_dicke();

struct BareOperators {
  Matrix a;       ///< cavity annihilation
  Matrix sigma1;  ///< |G><X| on emitter 1
  Matrix sigma2;  ///< |G><X| on emitter 2
  Matrix number;  ///< a^dag a + sum_i sigma_i^dag sigma_i
};

BareOperators bare_operators(const TruncatedBasis& basis);

/// Orthogonal projector onto manifold n, for 0 <= n <= n_ph + 2.
Matrix manifold_projector(const TruncatedBasis& basis, int n);

/// Restriction of an operator to rows of manifold `row_n`, columns of
/// manifold `col_n`.
Matrix manifold_block(const Matrix& op, const TruncatedBasis& basis, int row_n, int col_n);

}  // namespace tavis
