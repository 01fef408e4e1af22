#include "tavis/eigenanalysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "tavis/cubic.hpp"

namespace tavis {

namespace {

constexpr double kSqrt3 = 1.7320508075688772935;

void require_manifold(int n, int lowest) {
  if (n < lowest) {
    throw InvalidArgument("manifold index " + std::to_string(n) + " below minimum " +
                          std::to_string(lowest));
  }
}

void sort_descending(std::array<cplx, 3>& roots, double scale) {
  const double tol = 1e-12 * scale;
  std::sort(roots.begin(), roots.end(), [tol](const cplx& a, const cplx& b) {
    if (std::abs(a.real() - b.real()) > tol) return a.real() > b.real();
    return a.imag() > b.imag();
  });
}

// Residual of the footnote cubic in x = -iP, relative to its term sizes.
double footnote_residual(cplx p, cplx rabi_sq, cplx z, double g) {
  const cplx x = -kI * p;
  const cplx c0 = -4.0 * z * g * g;
  const cplx value = x * x * x + rabi_sq * x + c0;
  const double size = std::abs(x * x * x) + std::abs(rabi_sq * x) + std::abs(c0);
  return size == 0.0 ? 0.0 : std::abs(value) / size;
}

// P^3 - R^2 P + 4 i z g^2 = 0 solved directly.
std::array<cplx, 3> direct_roots(cplx rabi_sq, cplx z, double g) {
  auto r = solve_depressed_cubic(-rabi_sq, 4.0 * kI * z * g * g);
  return r;
}

std::array<cplx, 3> triplet_roots(int n, const SystemParams& params, const ClosedFormOptions& opt,
                                  bool allow_exceptional) {
  require_manifold(n, 1);
  const double g = params.g;
  const cplx z = effective_detuning(params);
  const cplx rabi = complex_rabi(n, params, opt);
  const cplx rabi_sq = rabi * rabi;
  const double scale = std::max(g, std::abs(rabi));

  std::array<cplx, 3> roots;
  if (std::abs(rabi) < 1e-8 * g) {
    if (rabi == cplx{} && !allow_exceptional) {
      throw ExceptionalPoint("complex Rabi frequency vanishes for manifold " + std::to_string(n));
    }
    roots = direct_roots(rabi_sq, z, g);
  } else {
    const cplx q = discriminant(n, params, opt);
    const cplx phi = std::acos(-kI * q);
    const double norm = std::cos(std::numbers::pi / 6.0);
    for (int k = 1; k <= 3; ++k) {
      roots[static_cast<std::size_t>(k - 1)] =
          rabi * std::cos((phi + 2.0 * k * std::numbers::pi) / 3.0) / norm;
    }
    double worst = 0.0;
    for (const cplx& p : roots) worst = std::max(worst, footnote_residual(p, rabi_sq, z, g));
    if (worst > 1e-10) roots = direct_roots(rabi_sq, z, g);
  }
  sort_descending(roots, scale);
  return roots;
}

}  // namespace

cplx effective_detuning(const SystemParams& params) {
  return {params.gamma_minus(), params.delta / 2.0};
}

cplx rabi_manifold1(const SystemParams& params, const ClosedFormOptions& opt) {
  const cplx z = effective_detuning(params);
  return opt.rabi_scale * std::sqrt(2.0 * params.g * params.g - z * z);
}

std::array<ComplexEigenenergy, 3> eps_manifold1(const SystemParams& params, const ClosedFormOptions& opt) {
  const cplx rabi = rabi_manifold1(params, opt);
  const cplx center{params.omega0 - params.delta / 2.0, -params.gamma_plus()};
  const cplx singlet{params.omega0 - params.delta, -params.gamma_sigma / 2.0};
  return {{{1, 1, center + rabi, false}, {1, 2, center - rabi, false}, {1, 3, singlet, true}}};
}

cplx complex_rabi(int n, const SystemParams& params, const ClosedFormOptions& opt) {
  require_manifold(n, 1);
  const cplx z = effective_detuning(params);
  return opt.rabi_scale * std::sqrt((4.0 * n - 2.0) * params.g * params.g - 4.0 * z * z);
}

cplx discriminant(int n, const SystemParams& params, const ClosedFormOptions& opt) {
  const cplx rabi = complex_rabi(n, params, opt);
  if (rabi == cplx{}) {
    throw ExceptionalPoint("discriminant undefined: complex Rabi frequency vanishes for manifold " +
                           std::to_string(n));
  }
  const cplx r = rabi / params.g;
  return 6.0 * kSqrt3 * (effective_detuning(params) / params.g) / (r * r * r);
}

std::array<cplx, 3> splitting_roots(int n, const SystemParams& params, const ClosedFormOptions& opt) {
  require_manifold(n, 2);
  return triplet_roots(n, params, opt, false);
}

double manifold_width(int n, const SystemParams& params) {
  require_manifold(n, 1);
  return (n - 1) * params.gamma_a + params.gamma_sigma;
}

std::array<ComplexEigenenergy, 4> eps_manifold(int n, const SystemParams& params, const ClosedFormOptions& opt) {
  require_manifold(n, 2);
  const auto p = splitting_roots(n, params, opt);
  const cplx center{n * params.omega0 - params.delta, -manifold_width(n, params) / 2.0};
  return {{{n, 1, center + p[0], false},
           {n, 2, center + p[1], false},
           {n, 3, center + p[2], false},
           {n, 4, center, true}}};
}

std::vector<ComplexEigenenergy> eigenenergies(int n, const SystemParams& params, const ClosedFormOptions& opt) {
  require_manifold(n, 0);
  if (n == 0) return {{0, 1, cplx{}, false}};
  if (n == 1) {
    const auto e = eps_manifold1(params, opt);
    return {e.begin(), e.end()};
  }
  const auto e = eps_manifold(n, params, opt);
  return {e.begin(), e.end()};
}

double rabi_splitting(int n, const SystemParams& params, const ClosedFormOptions& opt) {
  require_manifold(n, 1);
  if (n == 1) return std::abs(rabi_manifold1(params, opt).real());
  double best = 0.0;
  for (const cplx& p : triplet_roots(n, params, opt, true)) best = std::max(best, std::abs(p.real()));
  return best;
}

ScCriterion sc_criterion(int n, const SystemParams& params) {
  require_manifold(n, 1);
  if (params.delta != 0.0) throw InvalidArgument("strong-coupling criterion is defined at zero detuning");
  ScCriterion out;
  const double y = params.gamma_minus() / params.g;
  const double rabi_sq = (4.0 * n - 2.0) - 4.0 * y * y;  // (R_n / g)^2
  if (rabi_sq > 0.0) {
    out.rabi_real = true;
    out.strong_coupling = true;
    return out;
  }
  if (rabi_sq == 0.0) {
    out.exceptional = true;
    out.strong_coupling = true;
    out.im_q = std::copysign(std::numeric_limits<double>::infinity(), y);
    return out;
  }
  const double s = std::sqrt(-rabi_sq);
  out.im_q = 6.0 * kSqrt3 * y / (s * s * s);
  const double excess = std::abs(out.im_q) - 1.0;
  if (std::abs(excess) <= 1e-12) {
    out.on_boundary = true;
  } else {
    out.strong_coupling = excess > 0.0;
  }
  return out;
}

double sc_boundary(int n) {
  require_manifold(n, 1);
  const double c = 4.0 * n - 2.0;
  auto f = [c](double y) {
    const double s = 4.0 * y * y - c;
    return 6.0 * kSqrt3 * y - s * std::sqrt(s);
  };
  double lo = std::sqrt(n - 0.5) * (1.0 + 1e-12);
  double hi = 10.0;
  while (f(hi) > 0.0) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

double sc_contour_manifold(double gamma_minus_over_g) {
  const double y = std::abs(gamma_minus_over_g);
  return (4.0 * y * y - std::cbrt(6.0 * kSqrt3 * y) * std::cbrt(6.0 * kSqrt3 * y) + 2.0) / 4.0;
}

std::array<cplx, 3> perturbative_splitting(int n, const SystemParams& params) {
  require_manifold(n, 2);
  if (params.delta != 0.0) throw InvalidArgument("perturbative splitting is defined at zero detuning");
  const double g = params.g;
  const double gm = params.gamma_minus();
  const double y = gm / g;
  const double two_n1 = 2.0 * n - 1.0;
  const double outer = g * std::sqrt(4.0 * n - 2.0);
  const double shift = g * (16.0 * n * (n - 1) + 1.0) / (std::pow(2.0, 1.5) * std::pow(two_n1, 2.5)) * y * y;
  const double damp = gm / two_n1;
  return {cplx{outer - shift, -damp}, cplx{0.0, 2.0 * damp}, cplx{-outer + shift, -damp}};
}

std::vector<TransitionEigenvalue> transition_eigenvalues(int m, const SystemParams& params,
                                                         const ClosedFormOptions& opt) {
  require_manifold(m, 1);
  const auto upper = eigenenergies(m, params, opt);
  const auto lower = eigenenergies(m - 1, params, opt);
  std::vector<TransitionEigenvalue> out;
  for (const auto& u : upper) {
    for (const auto& l : lower) {
      out.push_back({m, u.branch, m == 1 ? 0 : l.branch, u.value - std::conj(l.value),
                     u.singlet || l.singlet});
    }
  }
  return out;
}

std::vector<TransitionEigenvalue> population_eigenvalues(int m, const SystemParams& params,
                                                         const ClosedFormOptions& opt) {
  require_manifold(m, 0);
  const auto levels = eigenenergies(m, params, opt);
  std::vector<TransitionEigenvalue> out;
  for (const auto& a : levels) {
    for (const auto& b : levels) {
      out.push_back({m, a.branch, b.branch, a.value - std::conj(b.value), a.singlet || b.singlet});
    }
  }
  return out;
}

JcReference jc_reference(int n, const SystemParams& params) {
  require_manifold(n, 1);
  const double gm = params.gamma_minus();
  JcReference ref;
  ref.n = n;
  ref.rabi = std::sqrt(cplx{n * params.g * params.g - gm * gm, 0.0});
  ref.strong_coupling = std::sqrt(static_cast<double>(n)) * params.g > std::abs(gm);
  return ref;
}

}  // namespace tavis
