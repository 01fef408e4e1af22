#include "tavis/tavis.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "tavis/eigenanalysis.hpp"
#include "tavis/liouvillian.hpp"
#include "tavis/spectrum.hpp"
#include "tavis/verify.hpp"

struct tavis_system {
  tavis::System impl;
};

namespace {

thread_local std::string g_last_error;

tavis_status fail(tavis_status s, const char* what) {
  g_last_error = what;
  return s;
}

template <class F>
tavis_status guard(F&& f) {
  try {
    f();
    return TAVIS_OK;
  } catch (const tavis::InvalidArgument& e) {
    return fail(TAVIS_INVALID_ARGUMENT, e.what());
  } catch (const tavis::ExceptionalPoint& e) {
    return fail(TAVIS_EXCEPTIONAL_POINT, e.what());
  } catch (const tavis::IntegrationFailure& e) {
    return fail(TAVIS_INTEGRATION_FAILURE, e.what());
  } catch (const tavis::ConvergenceFailure& e) {
    return fail(TAVIS_CONVERGENCE_FAILURE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(TAVIS_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(TAVIS_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(TAVIS_INTERNAL_ERROR, "unknown error");
  }
}

void require(bool cond, const char* what) {
  if (!cond) throw tavis::InvalidArgument(what);
}

tavis::SystemParams to_params(const tavis_params* p) {
  require(p != nullptr, "params is null");
  tavis::SystemParams out{p->omega0, p->delta, p->g, p->gamma_a, p->gamma_sigma};
  out.validate();
  return out;
}

tavis::EmissionOperator to_operator(tavis_operator op) {
  switch (op) {
    case TAVIS_OP_CAVITY:
      return tavis::EmissionOperator::Cavity;
    case TAVIS_OP_EMITTER1:
      return tavis::EmissionOperator::Emitter1;
    case TAVIS_OP_EMITTER2:
      return tavis::EmissionOperator::Emitter2;
  }
  throw tavis::InvalidArgument("unknown operator");
}

tavis::Matrix density_from(const tavis::System& sys, const tavis_complex* amplitudes) {
  require(amplitudes != nullptr, "amplitudes is null");
  tavis::Vector psi(sys.dimension());
  for (Eigen::Index i = 0; i < psi.size(); ++i) psi(i) = {amplitudes[i].re, amplitudes[i].im};
  const double norm = psi.norm();
  require(norm > 0.0 && std::isfinite(norm), "initial state has zero or non-finite norm");
  return tavis::pure_density(psi / norm);
}

tavis_complex to_c(tavis::cplx z) { return {z.real(), z.imag()}; }

double diagonal_sum(const tavis::Matrix& rho, const tavis::TruncatedBasis& basis, tavis::Dicke d) {
  double s = 0.0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (basis.state(k).matter == d) s += rho(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)).real();
  }
  return s;
}

}  // namespace

extern "C" {

const char* tavis_version(void) { return "1.0.0"; }

const char* tavis_last_error(void) { return g_last_error.c_str(); }

const char* tavis_status_name(tavis_status status) {
  switch (status) {
    case TAVIS_OK:
      return "ok";
    case TAVIS_INVALID_ARGUMENT:
      return "invalid_argument";
    case TAVIS_EXCEPTIONAL_POINT:
      return "exceptional_point";
    case TAVIS_INTEGRATION_FAILURE:
      return "integration_failure";
    case TAVIS_CONVERGENCE_FAILURE:
      return "convergence_failure";
    case TAVIS_OUT_OF_MEMORY:
      return "out_of_memory";
    case TAVIS_INTERNAL_ERROR:
      return "internal_error";
  }
  return "unknown";
}

tavis_status tavis_system_create(const tavis_params* params, int photon_cutoff, tavis_system** out) {
  return guard([&] {
    require(out != nullptr, "out is null");
    *out = new tavis_system{tavis::System(to_params(params), photon_cutoff)};
  });
}

void tavis_system_destroy(tavis_system* system) { delete system; }

tavis_status tavis_system_dimension(const tavis_system* system, size_t* out) {
  return guard([&] {
    require(system != nullptr && out != nullptr, "null argument");
    *out = system->impl.basis().size();
  });
}

tavis_status tavis_system_index_of(const tavis_system* system, int photons, tavis_dicke matter, size_t* out) {
  return guard([&] {
    require(system != nullptr && out != nullptr, "null argument");
    require(matter >= TAVIS_T_MINUS && matter <= TAVIS_SINGLET, "unknown Dicke label");
    const auto idx = system->impl.basis().index_of({photons, static_cast<tavis::Dicke>(matter)});
    require(idx.has_value(), "state is outside the truncated basis");
    *out = *idx;
  });
}

tavis_status tavis_eigenenergies(const tavis_params* params, int manifold, double rabi_scale,
                                 tavis_eigenenergy* out, size_t* count) {
  return guard([&] {
    require(out != nullptr && count != nullptr, "null argument");
    const auto levels = tavis::eigenenergies(manifold, to_params(params), {rabi_scale});
    for (std::size_t i = 0; i < levels.size(); ++i) {
      out[i] = {levels[i].manifold, levels[i].branch, to_c(levels[i].value), levels[i].singlet ? 1 : 0};
    }
    *count = levels.size();
  });
}

tavis_status tavis_rabi_splitting(const tavis_params* params, int manifold, double rabi_scale, double* out) {
  return guard([&] {
    require(out != nullptr, "out is null");
    *out = tavis::rabi_splitting(manifold, to_params(params), {rabi_scale});
  });
}

tavis_status tavis_sc_criterion(const tavis_params* params, int manifold, tavis_criterion* out) {
  return guard([&] {
    require(out != nullptr, "out is null");
    const auto c = tavis::sc_criterion(manifold, to_params(params));
    *out = {c.strong_coupling, c.rabi_real, c.im_q, c.on_boundary, c.exceptional};
  });
}

tavis_status tavis_sc_boundary(int manifold, double* out) {
  return guard([&] {
    require(out != nullptr, "out is null");
    *out = tavis::sc_boundary(manifold);
  });
}

tavis_status tavis_sc_contour(double gamma_minus_over_g, double* out) {
  return guard([&] {
    require(out != nullptr, "out is null");
    *out = tavis::sc_contour_manifold(gamma_minus_over_g);
  });
}

tavis_status tavis_evolve(const tavis_system* system, const tavis_complex* amplitudes, const double* times,
                          size_t count, tavis_observables* out) {
  return guard([&] {
    require(system != nullptr && times != nullptr && out != nullptr, "null argument");
    const auto& sys = system->impl;
    const auto traj = tavis::evolve(sys, density_from(sys, amplitudes), std::span(times, count));
    const auto& ops = sys.operators();
    const tavis::Matrix n1 = ops.sigma1.adjoint() * ops.sigma1;
    const tavis::Matrix n2 = ops.sigma2.adjoint() * ops.sigma2;
    const tavis::Matrix np = ops.a.adjoint() * ops.a;
    for (std::size_t i = 0; i < traj.states.size(); ++i) {
      const auto& rho = traj.states[i].rho;
      const auto diag = tavis::diagnose(rho);
      out[i] = {traj.states[i].time,
                rho.trace().real(),
                tavis::expectation(rho, ops.number).real(),
                tavis::expectation(rho, np).real(),
                tavis::expectation(rho, n1).real(),
                tavis::expectation(rho, n2).real(),
                diagonal_sum(rho, sys.basis(), tavis::Dicke::Singlet),
                diag.min_eigenvalue};
    }
  });
}

tavis_status tavis_spectrum(const tavis_system* system, tavis_operator op, const tavis_complex* amplitudes,
                            const double* omega, size_t count, const tavis_spectrum_options* options,
                            double* values, tavis_spectrum_info* info) {
  return guard([&] {
    require(system != nullptr && omega != nullptr && values != nullptr, "null argument");
    const auto& sys = system->impl;
    tavis::SpectrumOptions so = tavis::default_spectrum_options(sys.params());
    if (options != nullptr) {
      if (options->kappa > 0.0) so.kappa = options->kappa;
      if (options->collection_time > 0.0) so.collection_time = options->collection_time;
      if (options->step > 0.0) so.step = options->step;
      if (options->tolerance > 0.0) so.tolerance = options->tolerance;
      if (options->max_refinements >= 0) so.max_refinements = options->max_refinements;
      so.kernel = options->kernel == TAVIS_KERNEL_DECAYING ? tavis::SpectrumKernel::Decaying
                                                            : tavis::SpectrumKernel::Filtered;
    }
    const auto s = tavis::physical_spectrum(sys, to_operator(op), density_from(sys, amplitudes),
                                            std::span(omega, count), so);
    std::copy(s.values.begin(), s.values.end(), values);
    if (info != nullptr) *info = {s.kappa, s.collection_time, s.step, s.convergence_delta, s.converged ? 1 : 0};
  });
}

tavis_status tavis_peak_table(const tavis_params* params, int m_max, int symmetric_only, tavis_peak** peaks,
                              size_t* count) {
  return guard([&] {
    require(peaks != nullptr && count != nullptr, "null argument");
    const auto table = tavis::peak_table(to_params(params), m_max, symmetric_only != 0);
    const std::size_t n = std::max<std::size_t>(1, table.peaks.size());
    auto* buf = static_cast<tavis_peak*>(std::malloc(sizeof(tavis_peak) * n));
    if (buf == nullptr) throw std::bad_alloc();
    for (std::size_t i = 0; i < table.peaks.size(); ++i) {
      const auto& p = table.peaks[i];
      buf[i] = {p.m, p.position, p.width, p.multiplicity, p.upper_branch, p.lower_branch, p.involves_singlet ? 1 : 0};
    }
    *peaks = buf;
    *count = table.peaks.size();
  });
}

void tavis_peaks_free(tavis_peak* peaks) { std::free(peaks); }

tavis_status tavis_verify(double rabi_scale, uint64_t seed, int include_spectrum, char** report, int* passed) {
  return guard([&] {
    require(report != nullptr && passed != nullptr, "null argument");
    tavis::VerifyOptions opt;
    opt.rabi_scale = rabi_scale;
    opt.seed = seed;
    opt.include_spectrum = include_spectrum != 0;
    const auto checks = tavis::run_verification(opt);
    const std::string json = tavis::verification_report_json(checks, opt);
    char* buf = static_cast<char*>(std::malloc(json.size() + 1));
    if (buf == nullptr) throw std::bad_alloc();
    std::memcpy(buf, json.c_str(), json.size() + 1);
    *report = buf;
    *passed = tavis::all_passed(checks) ? 1 : 0;
  });
}

void tavis_string_free(char* text) { std::free(text); }

}  // extern "C"
