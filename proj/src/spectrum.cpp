#include <unsupported/Eigen/MatrixFunctions>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "tavis/liouvillian.hpp"
#include "tavis/spectrum.hpp"

namespace tavis {

namespace {

// Everything the quadrature needs that does not depend on the step.
struct QuadratureSetup {
  OperatorBlock pop;
  OperatorBlock reg;
  Matrix initial_map;  // y -> tr(rho O^dag X_k)
  Eigen::RowVectorXcd readout;
  Vector y0;
};

QuadratureSetup make_setup(const System& system, EmissionOperator op, const Matrix& rho0) {
  QuadratureSetup s{population_matrix(system), regression_matrix(system), {}, {}, {}};
  const Matrix& o = system.emission(op);
  const Matrix o_dag = o.adjoint();

  std::map<std::pair<std::size_t, std::size_t>, Eigen::Index> pop_index;
  for (std::size_t k = 0; k < s.pop.pairs.size(); ++k) pop_index[s.pop.pairs[k]] = static_cast<Eigen::Index>(k);

  const auto n_reg = static_cast<Eigen::Index>(s.reg.pairs.size());
  const auto n_pop = static_cast<Eigen::Index>(s.pop.pairs.size());
  s.initial_map = Matrix::Zero(n_reg, n_pop);
  s.readout.resize(n_reg);
  const auto dim = system.basis().size();
  for (Eigen::Index k = 0; k < n_reg; ++k) {
    const auto [l, u] = s.reg.pairs[static_cast<std::size_t>(k)];
    s.readout(k) = o(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(u));
    // (rho O^dag)(u, l) = sum_b rho(u, b) O^dag(b, l); rho(u, b) is pair (b, u).
    for (std::size_t b = 0; b < dim; ++b) {
      const cplx od = o_dag(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(l));
      if (od == cplx{}) continue;
      auto it = pop_index.find({b, u});
      if (it != pop_index.end()) s.initial_map(k, it->second) += od;
    }
  }
  s.y0.resize(n_pop);
  for (Eigen::Index k = 0; k < n_pop; ++k) {
    const auto [l, u] = s.pop.pairs[static_cast<std::size_t>(k)];
    s.y0(k) = rho0(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(l));
  }
  return s;
}

double suggested_step(const QuadratureSetup& s, std::span<const double> omega, double kappa, double horizon) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (double w : omega) {
    lo = std::min(lo, w);
    hi = std::max(hi, w);
  }
  double fastest = kappa;
  if (s.reg.pairs.size() > 0) {
    Eigen::ComplexEigenSolver<Matrix> es(s.reg.matrix, false);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      const double nu = es.eigenvalues()(i).real();
      fastest = std::max({fastest, std::abs(nu - lo), std::abs(nu - hi)});
    }
  }
  if (s.pop.pairs.size() > 0) {
    Eigen::ComplexEigenSolver<Matrix> es(s.pop.matrix, false);
    fastest = std::max(fastest, es.eigenvalues().cwiseAbs().maxCoeff());
  }
  const double h = fastest > 0.0 ? 0.3 / fastest : horizon / 64.0;
  return std::min(h, horizon / 64.0);
}

std::vector<double> evaluate(const QuadratureSetup& s, double omega0, std::span<const double> omega,
                             const SpectrumOptions& opt, std::size_t steps) {
  const double big_t = opt.collection_time;
  const double h = big_t / static_cast<double>(steps);
  const double kappa = opt.kappa;
  const auto n_reg = static_cast<Eigen::Index>(s.reg.pairs.size());

  const Matrix pop_step = Matrix((-kI * h) * s.pop.matrix).exp();
  const Matrix reg_step = Matrix((-kI * h) * s.reg.matrix).exp();

  // cumulative[M] = trapezoid over t in [0, t_M] of exp(-2 kappa (T - t)) w(t).
  std::vector<Vector> cumulative(steps + 1, Vector::Zero(n_reg));
  Vector y = s.y0;
  Vector running = Vector::Zero(n_reg);
  Vector first;
  for (std::size_t i = 0; i <= steps; ++i) {
    const double t = h * static_cast<double>(i);
    const Vector f = std::exp(-2.0 * kappa * (big_t - t)) * (s.initial_map * y);
    running += f;
    if (i == 0) first = f;
    cumulative[i] = i == 0 ? Vector::Zero(n_reg) : Vector(h * (running - 0.5 * (first + f)));
    if (i < steps) y = pop_step * y;
  }

  // inner[j] = e^{-i omega0 tau_j} conj(c exp(-i L tau_j) cumulative[N - j])
  std::vector<cplx> inner(steps + 1);
  Eigen::RowVectorXcd row = s.readout;
  for (std::size_t j = 0; j <= steps; ++j) {
    const double tau = h * static_cast<double>(j);
    inner[j] = std::polar(1.0, -omega0 * tau) * std::conj((row * cumulative[steps - j]).value());
    if (j < steps) row = row * reg_step;
  }

  const double sign = opt.kernel == SpectrumKernel::Filtered ? 1.0 : -1.0;
  std::vector<double> out(omega.size());
  for (std::size_t w = 0; w < omega.size(); ++w) {
    const cplx rate{sign * kappa, -(omega[w] - omega0)};
    const cplx advance = std::exp(rate * h);
    cplx z{1.0, 0.0};
    cplx acc{};
    for (std::size_t j = 0; j <= steps; ++j) {
      const double weight = (j == 0 || j == steps) ? 0.5 * h : h;
      acc += weight * z * inner[j];
      z *= advance;
    }
    out[w] = 2.0 * kappa * acc.real();
  }
  return out;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

SpectrumOptions default_spectrum_options(const SystemParams& params) {
  SpectrumOptions opt;
  opt.kappa = 0.1 * params.g;
  double slowest = std::numeric_limits<double>::infinity();
  for (double r : {params.gamma_a, params.gamma_sigma}) {
    if (r > 0.0) slowest = std::min(slowest, r);
  }
  if (!std::isfinite(slowest)) slowest = opt.kappa;
  opt.collection_time = 20.0 / slowest;
  return opt;
}

SpectrumSeries physical_spectrum(const System& system, EmissionOperator op, const Matrix& rho0,
                                 std::span<const double> omega_grid, const SpectrumOptions& options) {
  if (!(options.kappa > 0.0)) throw InvalidArgument("spectrometer bandwidth kappa must be positive");
  if (!(options.collection_time > 0.0)) throw InvalidArgument("collection time T must be positive");
  if (omega_grid.empty()) throw InvalidArgument("omega grid is empty");
  system.require_supported(rho0);

  const QuadratureSetup setup = make_setup(system, op, rho0);
  const double omega0 = system.params().omega0;
  const double big_t = options.collection_time;
  const double h0 = options.step > 0.0
                        ? options.step
                        : suggested_step(setup, omega_grid, options.kappa, big_t);
  auto steps = static_cast<std::size_t>(std::ceil(big_t / h0));
  steps = std::max<std::size_t>(steps, 2);

  SpectrumSeries series;
  series.op = op;
  series.kappa = options.kappa;
  series.collection_time = big_t;
  series.omega.assign(omega_grid.begin(), omega_grid.end());

  std::vector<double> coarse = evaluate(setup, omega0, omega_grid, options, steps);
  for (int level = 0;; ++level) {
    steps *= 2;
    std::vector<double> fine = evaluate(setup, omega0, omega_grid, options, steps);
    double diff = 0.0;
    for (std::size_t i = 0; i < fine.size(); ++i) diff = std::max(diff, std::abs(fine[i] - coarse[i]));
    const double scale = max_abs(fine);
    series.convergence_delta = scale > 0.0 ? diff / scale : 0.0;
    series.values = std::move(fine);
    series.step = big_t / static_cast<double>(steps);
    if (series.convergence_delta < options.tolerance) break;
    if (level >= options.max_refinements) {
      series.converged = false;
      break;
    }
    coarse = series.values;
  }
  return series;
}

std::size_t PeakTable::distinct_positions(int m) const {
  std::size_t n = 0;
  for (const Peak& p : peaks) n += p.m == m ? 1 : 0;
  return n;
}

PeakTable peak_table(const SystemParams& params, int m_max, bool symmetric_only, const ClosedFormOptions& opt) {
  if (m_max < 1) throw InvalidArgument("peak table needs m_max >= 1");
  PeakTable table;
  for (int m = 1; m <= m_max; ++m) {
    for (const auto& t : transition_eigenvalues(m, params, opt)) {
      if (symmetric_only && t.involves_singlet) continue;
      table.transitions.push_back(
          {m, t.upper_branch, t.lower_branch, t.value.real(), -2.0 * t.value.imag(), t.involves_singlet});
    }
  }
  std::stable_sort(table.transitions.begin(), table.transitions.end(),
                   [](const Transition& a, const Transition& b) { return a.position < b.position; });

  const double tol = 1e-9 * params.g;
  for (const Transition& t : table.transitions) {
    auto same = std::find_if(table.peaks.begin(), table.peaks.end(), [&](const Peak& p) {
      return p.m == t.m && std::abs(p.position - t.position) <= tol;
    });
    if (same == table.peaks.end()) {
      table.peaks.push_back({t.m, t.position, t.width, 1, t.upper_branch, t.lower_branch, t.involves_singlet});
    } else {
      ++same->multiplicity;
      same->width = std::min(same->width, t.width);
      same->involves_singlet = same->involves_singlet && t.involves_singlet;
    }
  }
  std::stable_sort(table.peaks.begin(), table.peaks.end(), [](const Peak& a, const Peak& b) {
    return a.position != b.position ? a.position < b.position : a.m < b.m;
  });
  return table;
}

std::vector<std::size_t> find_local_maxima(std::span<const double> values, double relative_floor) {
  std::vector<std::size_t> out;
  if (values.size() < 3) return out;
  double top = 0.0;
  for (double v : values) top = std::max(top, v);
  if (top <= 0.0) return out;
  for (std::size_t i = 1; i + 1 < values.size(); ++i) {
    if (values[i] > values[i - 1] && values[i] >= values[i + 1] && values[i] > relative_floor * top) {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace tavis
