/* C interface to the two-emitter cavity library.
 *
 * Every call returns a tavis_status. On failure the message is available from
 * tavis_last_error() on the same thread until the next failing call. Buffers
 * handed out by the library are released with the matching free function.
 */
#ifndef TAVIS_TAVIS_H
#define TAVIS_TAVIS_H

#include <stddef.h>
#include <stdint.h>

#if defined(TAVIS_BUILDING_LIBRARY)
#define TAVIS_API __attribute__((visibility("default")))
#else
#define TAVIS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tavis_status {
  TAVIS_OK = 0,
  TAVIS_INVALID_ARGUMENT = 1,
  TAVIS_EXCEPTIONAL_POINT = 2,
  TAVIS_INTEGRATION_FAILURE = 3,
  TAVIS_CONVERGENCE_FAILURE = 4,
  TAVIS_OUT_OF_MEMORY = 5,
  TAVIS_INTERNAL_ERROR = 6
} tavis_status;

typedef enum tavis_operator { TAVIS_OP_CAVITY = 0, TAVIS_OP_EMITTER1 = 1, TAVIS_OP_EMITTER2 = 2 } tavis_operator;

typedef enum tavis_dicke { TAVIS_T_MINUS = 0, TAVIS_T_ZERO = 1, TAVIS_T_PLUS = 2, TAVIS_SINGLET = 3 } tavis_dicke;

typedef enum tavis_kernel { TAVIS_KERNEL_FILTERED = 0, TAVIS_KERNEL_DECAYING = 1 } tavis_kernel;

typedef struct tavis_params {
  double omega0;
  double delta; /* emitter frequency is omega0 - delta */
  double g;
  double gamma_a;
  double gamma_sigma;
} tavis_params;

typedef struct tavis_complex {
  double re;
  double im;
} tavis_complex;

typedef struct tavis_eigenenergy {
  int manifold;
  int branch;
  tavis_complex value;
  int singlet;
} tavis_eigenenergy;

typedef struct tavis_criterion {
  int strong_coupling;
  int rabi_real;
  double im_q;
  int on_boundary;
  int exceptional;
} tavis_criterion;

typedef struct tavis_observables {
  double t;
  double trace;
  double excitations;
  double photons;
  double emitter1;
  double emitter2;
  double singlet;
  double min_eigenvalue;
} tavis_observables;

typedef struct tavis_spectrum_options {
  double kappa;           /* <= 0 selects 0.1 g */
  double collection_time; /* <= 0 selects 20 / smallest nonzero rate */
  double step;            /* <= 0 selects automatically */
  tavis_kernel kernel;
  double tolerance;       /* <= 0 selects 0.005 */
  int max_refinements;    /* < 0 selects 4 */
} tavis_spectrum_options;

typedef struct tavis_spectrum_info {
  double kappa;
  double collection_time;
  double step;
  double convergence_delta;
  int converged;
} tavis_spectrum_info;

typedef struct tavis_peak {
  int m;
  double position;
  double width;
  int multiplicity;
  int upper_branch;
  int lower_branch;
  int involves_singlet;
} tavis_peak;

typedef struct tavis_system tavis_system;

TAVIS_API const char* tavis_version(void);
TAVIS_API const char* tavis_last_error(void);
TAVIS_API const char* tavis_status_name(tavis_status status);

TAVIS_API tavis_status tavis_system_create(const tavis_params* params, int photon_cutoff, tavis_system** out);
TAVIS_API void tavis_system_destroy(tavis_system* system);
TAVIS_API tavis_status tavis_system_dimension(const tavis_system* system, size_t* out);
TAVIS_API tavis_status tavis_system_index_of(const tavis_system* system, int photons, tavis_dicke matter,
                                             size_t* out);

/* Closed-form analysis. `out` must hold 4 entries; `count` receives 1, 3 or 4. */
TAVIS_API tavis_status tavis_eigenenergies(const tavis_params* params, int manifold, double rabi_scale,
                                           tavis_eigenenergy* out, size_t* count);
TAVIS_API tavis_status tavis_rabi_splitting(const tavis_params* params, int manifold, double rabi_scale,
                                            double* out);
TAVIS_API tavis_status tavis_sc_criterion(const tavis_params* params, int manifold, tavis_criterion* out);
TAVIS_API tavis_status tavis_sc_boundary(int manifold, double* out);
TAVIS_API tavis_status tavis_sc_contour(double gamma_minus_over_g, double* out);

/* Evolves the density matrix built from `amplitudes` (length = dimension, normalized
 * by the library). `out` must hold `count` entries. */
TAVIS_API tavis_status tavis_evolve(const tavis_system* system, const tavis_complex* amplitudes,
                                    const double* times, size_t count, tavis_observables* out);

/* Physical spectrum of a pure initial state. `values` must hold `count` entries. */
TAVIS_API tavis_status tavis_spectrum(const tavis_system* system, tavis_operator op,
                                      const tavis_complex* amplitudes, const double* omega, size_t count,
                                      const tavis_spectrum_options* options, double* values,
                                      tavis_spectrum_info* info);

/* Merged line table for manifolds 1..m_max. Free with tavis_peaks_free. */
TAVIS_API tavis_status tavis_peak_table(const tavis_params* params, int m_max, int symmetric_only,
                                        tavis_peak** peaks, size_t* count);
TAVIS_API void tavis_peaks_free(tavis_peak* peaks);

/* Runs the self-check suite. The JSON report is written to `*report` (free with
 * tavis_string_free); `*passed` is 1 when every check held. */
TAVIS_API tavis_status tavis_verify(double rabi_scale, uint64_t seed, int include_spectrum, char** report,
                                    int* passed);
TAVIS_API void tavis_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif
