#pragma once

#include <span>
#include <vector>

#include "tavis/common.hpp"

namespace tavis {

/// Minimum-cost perfect matching on a square cost matrix (Hungarian method).
/// Returns column index assigned to each row.
std::vector<int> min_cost_assignment(const Eigen::MatrixXd& cost);

struct MatchResult {
  double max_deviation = 0.0;
  std::vector<int> assignment;  ///< index into `b` for every element of `a`
};

/// Optimally pairs two equally sized multisets of complex numbers by |a - b|
/// and reports the worst pair distance.
MatchResult match_multisets(std::span<const cplx> a, std::span<const cplx> b);

/// Worst distance from each element of `needles` to its nearest element of `haystack`.
double max_nearest_distance(std::span<const cplx> needles, std::span<const cplx> haystack);

}  // namespace tavis
