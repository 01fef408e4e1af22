#pragma once

#include <span>
#include <vector>

#include "tavis/eigenanalysis.hpp"
#include "tavis/system.hpp"

namespace tavis {

/// G(t, tau) = <O^dag(t + tau) O(t)> sampled on a (t, tau) grid.
struct CorrelationGrid {
  EmissionOperator op = EmissionOperator::Cavity;
  std::vector<double> t;
  std::vector<double> tau;
  Matrix values;  ///< rows follow t, columns follow tau
};

/// Quantum-regression evaluation: initial vectors tr(rho(t) O^dag X_k),
/// propagated in tau with the regression matrix.
CorrelationGrid two_time_correlation(const System& system, EmissionOperator op, const Matrix& rho0,
                                     std::span<const double> t_grid, std::span<const double> tau_grid);

/// Brute-force evaluation tr(O^dag Phi_tau[O rho(t)]) with the full generator.
CorrelationGrid two_time_correlation_direct(const System& system, EmissionOperator op,
                                            const Matrix& rho0, std::span<const double> t_grid,
                                            std::span<const double> tau_grid);

/// Sign of kappa in the tau kernel exp((+/-kappa - i(omega - omega0)) tau).
/// `Filtered` is the time-dependent filtered-spectrum formula as written,
/// where the growth is bounded by the exp(-2 kappa (T - t)) factor.
enum class SpectrumKernel { Filtered, Decaying };

struct SpectrumOptions {
  double kappa = 0.0;            ///< spectrometer bandwidth, > 0
  double collection_time = 0.0;  ///< T, > 0
  double step = 0.0;             ///< initial quadrature step; <= 0 picks one from the line frequencies
  SpectrumKernel kernel = SpectrumKernel::Filtered;
  double tolerance = 0.005;      ///< allowed relative change of max S when halving the step
  int max_refinements = 4;
};

struct SpectrumSeries {
  EmissionOperator op = EmissionOperator::Cavity;
  double kappa = 0.0;
  double collection_time = 0.0;
  std::vector<double> omega;
  std::vector<double> values;
  double step = 0.0;               ///< finest step used
  double convergence_delta = 0.0;  ///< max |S_h - S_{h/2}| / max S at the finest pair
  bool converged = true;
};

/// Filtered emission spectrum S_O(omega, T) by trapezoidal double quadrature.
/// The correlation is taken in the frame rotating at omega0.
SpectrumSeries physical_spectrum(const System& system, EmissionOperator op, const Matrix& rho0,
                                 std::span<const double> omega_grid, const SpectrumOptions& options);

/// Default spectrometer settings: kappa = 0.1 g, T = 20 / min(nonzero rates).
SpectrumOptions default_spectrum_options(const SystemParams& params);

struct Transition {
  int m = 0;
  int upper_branch = 0;
  int lower_branch = 0;
  double position = 0.0;  ///< Re lambda
  double width = 0.0;     ///< -2 Im lambda
  bool involves_singlet = false;
};

/// Transitions sharing m and position, merged.
struct Peak {
  int m = 0;
  double position = 0.0;
  double width = 0.0;  ///< narrowest member
  int multiplicity = 0;
  int upper_branch = 0;  ///< first member
  int lower_branch = 0;
  bool involves_singlet = false;  ///< every member goes through the singlet
};

struct PeakTable {
  std::vector<Transition> transitions;  ///< sorted by position
  std::vector<Peak> peaks;              ///< sorted by position
  std::size_t distinct_positions(int m) const;
};

/// Analytic line list for manifolds 1..m_max. With `symmetric_only`,
/// transitions through a singlet branch are dropped.
PeakTable peak_table(const SystemParams& params, int m_max, bool symmetric_only = false,
                     const ClosedFormOptions& opt = {});

/// Indices of local maxima of `values` above `relative_floor * max`.
std::vector<std::size_t> find_local_maxima(std::span<const double> values, double relative_floor);

}  // namespace tavis
