#include "tavis/cubic.hpp"

#include <cmath>
#include <numbers>

namespace tavis {

std::array<cplx, 3> solve_depressed_cubic(cplx p, cplx q) {
  if (p == cplx{} && q == cplx{}) return {cplx{}, cplx{}, cplx{}};

  const cplx disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
  // Take the larger of the two Cardano radicands to avoid cancellation.
  cplx u3 = -q / 2.0 + disc;
  const cplx alt = -q / 2.0 - disc;
  if (std::abs(alt) > std::abs(u3)) u3 = alt;
  const cplx u = std::pow(u3, 1.0 / 3.0);
  const cplx v = (u == cplx{}) ? cplx{} : -p / (3.0 * u);

  const cplx w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  std::array<cplx, 3> roots = {u + v, w * u + std::conj(w) * v, std::conj(w) * u + w * v};

  for (cplx& x : roots) {
    for (int it = 0; it < 3; ++it) {
      const cplx f = x * x * x + p * x + q;
      const cplx df = 3.0 * x * x + p;
      if (std::abs(df) == 0.0) break;
      const cplx step = f / df;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      x -= step;
    }
  }
  return roots;
}

}  // namespace tavis
