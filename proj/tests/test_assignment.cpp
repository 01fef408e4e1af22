#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "tavis/assignment.hpp"

using namespace tavis;

namespace {

double brute_force_cost(const Eigen::MatrixXd& cost) {
  std::vector<int> perm(static_cast<std::size_t>(cost.rows()));
  std::iota(perm.begin(), perm.end(), 0);
  double best = 1e300;
  do {
    double total = 0.0;
    for (std::size_t i = 0; i < perm.size(); ++i) total += cost(long(i), perm[i]);
    best = std::min(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

TEST_CASE("Hungarian assignment reaches the brute-force optimum") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (int size = 1; size <= 7; ++size) {
    for (int trial = 0; trial < 20; ++trial) {
      Eigen::MatrixXd cost(size, size);
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) cost(i, j) = u(rng);
      const auto a = min_cost_assignment(cost);
      std::vector<int> sorted = a;
      std::sort(sorted.begin(), sorted.end());
      for (int i = 0; i < size; ++i) CHECK(sorted[std::size_t(i)] == i);
      double total = 0.0;
      for (int i = 0; i < size; ++i) total += cost(i, a[std::size_t(i)]);
      CHECK(total == doctest::Approx(brute_force_cost(cost)).epsilon(1e-12));
    }
  }
}

TEST_CASE("multiset matching is permutation invariant") {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> n;
  std::vector<cplx> a(10);
  for (auto& x : a) x = {n(rng), n(rng)};
  std::vector<cplx> b = a;
  std::shuffle(b.begin(), b.end(), rng);
  for (auto& x : b) x += cplx(1e-9, -1e-9);
  const auto m = match_multisets(a, b);
  CHECK(m.max_deviation < 2e-9);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[std::size_t(m.assignment[i])]) < 2e-9);
}

TEST_CASE("matching detects a displaced element and size mismatch") {
  const std::vector<cplx> a = {1.0, 2.0, 3.0};
  const std::vector<cplx> b = {3.0, 1.0, 2.5};
  CHECK(match_multisets(a, b).max_deviation == doctest::Approx(0.5));
  CHECK_THROWS(match_multisets(a, std::vector<cplx>{1.0}));
  CHECK(max_nearest_distance(std::vector<cplx>{2.9}, a) == doctest::Approx(0.1));
}
