#pragma once

#include <array>
#include <vector>

#include "tavis/params.hpp"
#include "tavis/common.hpp"

namespace tavis {

/// Complex eigenenergy of the dissipative ladder.
/// Real part: line position. Imaginary part: -width/2.
struct ComplexEigenenergy {
  int manifold = 0;
  int branch = 0;
  cplx value;
  bool singlet = false;
};

/// Knobs for the closed forms. `rabi_scale` multiplies every complex Rabi
/// frequency and exists only as a mutation hook for negative-control runs.
struct ClosedFormOptions {
  double rabi_scale = 1.0;
};

/// gamma_- + i delta / 2: the "imaginary detuning" the splittings depend on.
cplx effective_detuning(const SystemParams& params);

/// sqrt(2 g^2 - (gamma_- + i delta/2)^2), the first-manifold Rabi frequency.
cplx rabi_manifold1(const SystemParams& params, const ClosedFormOptions& opt = {});

/// First manifold: branches 1/2 are the polariton pair, branch 3 the singlet
/// |0,S>. Center of the pair is omega0 - delta/2.
std::array<ComplexEigenenergy, 3> eps_manifold1(const SystemParams& params,
                                                 const ClosedFormOptions& opt = {});

/// R_n = sqrt((4n - 2) g^2 - 4 (gamma_- + i delta/2)^2), principal root.
cplx complex_rabi(int n, const SystemParams& params, const ClosedFormOptions& opt = {});

/// Q_n = 6 sqrt(3) (gamma_- + i delta/2)/g / (R_n/g)^3. Throws ExceptionalPoint at R_n = 0.
cplx discriminant(int n, const SystemParams& params, const ClosedFormOptions& opt = {});

/// Triplet splittings P_n^(1,2,3), sorted by descending real part (ties by
/// descending imaginary part). -i P are the roots of
/// x^3 + x((4n-2)g^2 - (2 gamma_- + i delta)^2) - 2(2 gamma_- + i delta) g^2.
std::array<cplx, 3> splitting_roots(int n, const SystemParams& params,
                                    const ClosedFormOptions& opt = {});

/// Width of the singlet and center width of the triplet in manifold n >= 2.
double manifold_width(int n, const SystemParams& params);

/// Manifolds n >= 2: branches 1-3 from splitting_roots, branch 4 the singlet.
std::array<ComplexEigenenergy, 4> eps_manifold(int n, const SystemParams& params,
                                                const ClosedFormOptions& opt = {});

/// Every branch of manifold n (one value for n = 0, three for n = 1, four above).
std::vector<ComplexEigenenergy> eigenenergies(int n, const SystemParams& params,
                                              const ClosedFormOptions& opt = {});

/// Largest |Re| splitting from the triplet center of manifold n.
double rabi_splitting(int n, const SystemParams& params, const ClosedFormOptions& opt = {});

struct ScCriterion {
  bool strong_coupling = false;
  bool rabi_real = false;     ///< R_n real and nonzero
  double im_q = 0.0;          ///< Im Q_n when R_n is imaginary (0 otherwise)
  bool on_boundary = false;   ///< |Im Q_n| == 1 within rounding
  bool exceptional = false;   ///< R_n == 0
};

/// Zero-detuning strong-coupling test for manifold n >= 1.
ScCriterion sc_criterion(int n, const SystemParams& params);

/// Critical gamma_-/g where |Im Q_n| = 1 (the strong/weak coupling boundary).
double sc_boundary(int n);

/// Real n on the |Im Q_n| = 1 contour for a given gamma_-/g.
double sc_contour_manifold(double gamma_minus_over_g);

/// Second-order small-gamma_- expansion of the triplet splittings, Delta = 0.
std::array<cplx, 3> perturbative_splitting(int n, const SystemParams& params);

struct TransitionEigenvalue {
  int m = 0;
  int upper_branch = 0;  ///< i, branch in manifold m
  int lower_branch = 0;  ///< j, branch in manifold m-1 (or m for populations); 0 for vacuum
  cplx value;
  bool involves_singlet = false;
};

/// lambda_m^{i,j} = eps_m^(i) - conj(eps_{m-1}^(j)).
std::vector<TransitionEigenvalue> transition_eigenvalues(int m, const SystemParams& params,
                                                         const ClosedFormOptions& opt = {});

/// delta_m^{i,j} = eps_m^(i) - conj(eps_m^(j)).
std::vector<TransitionEigenvalue> population_eigenvalues(int m, const SystemParams& params,
                                                         const ClosedFormOptions& opt = {});

struct JcReference {
  int n = 0;
  cplx rabi;  ///< sqrt(n g^2 - gamma_-^2)
  bool strong_coupling = false;
};

/// Single-emitter (Jaynes-Cummings) reference with the same rates.
JcReference jc_reference(int n, const SystemParams& params);

}  // namespace tavis
