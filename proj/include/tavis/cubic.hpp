#pragma once

#include <array>

#include "tavis/common.hpp"

namespace tavis {

/// Roots of x^3 + p x + q = 0 for complex p, q (Cardano, Newton-polished).
std::array<cplx, 3> solve_depressed_cubic(cplx p, cplx q);

}  // namespace tavis
