// Command-line front end. Talks to the library only through tavis.h.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tavis/tavis.h"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct LibraryError : std::runtime_error {
  LibraryError(tavis_status s, const std::string& what) : std::runtime_error(what), status(s) {}
  tavis_status status;
};

void check(tavis_status s) {
  if (s != TAVIS_OK) throw LibraryError(s, std::string(tavis_status_name(s)) + ": " + tavis_last_error());
}

// ---------------------------------------------------------------------------
// Configuration

json default_config() {
  return json{
      {"units", "g"},
      {"omega0", 10.0},
      {"delta", 0.0},
      {"g", 1.0},
      {"gamma_a", 0.1},
      {"gamma_sigma", 0.05},
      {"photon_cutoff", nullptr},
      {"initial_state", "both-excited"},
      {"operator", "a"},
      {"kappa", 0.1},
      {"collection_time", nullptr},
      {"kernel", "filtered"},
      {"spectrum_step", nullptr},
      {"spectrum_tolerance", 0.005},
      {"t_max", 20.0},
      {"t_steps", 200},
      {"omega_min", nullptr},
      {"omega_max", nullptr},
      {"omega_points", 1001},
      {"peak_m_max", nullptr},
      {"manifolds", {1, 2}},
      {"sweep", {{"parameter", "gamma_a"}, {"start", 0.0}, {"stop", 12.0}, {"count", 121}}},
      {"criterion", {{"gamma_minus_min", 0.0}, {"gamma_minus_max", 3.0}, {"points", 301}, {"n_max", 4}}},
  };
}

json parse_scalar(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error&) {
    return text;
  }
}

// Overlays `patch` onto `base`, rejecting keys the defaults do not know.
void overlay(json& base, const json& patch, const std::string& where) {
  if (!patch.is_object()) throw UsageError("config " + (where.empty() ? "root" : where) + " must be an object");
  for (const auto& [key, value] : patch.items()) {
    const std::string path = where.empty() ? key : where + "." + key;
    if (!base.contains(key)) throw UsageError("unknown config key '" + path + "'");
    if (base[key].is_object() && value.is_object()) {
      overlay(base[key], value, path);
    } else {
      base[key] = value;
    }
  }
}

void apply_set(json& config, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) throw UsageError("--set expects key=value, got '" + assignment + "'");
  const std::string key = assignment.substr(0, eq);
  json patch = parse_scalar(assignment.substr(eq + 1));
  // Build a nested patch from a dotted key.
  std::vector<std::string> parts;
  std::stringstream ss(key);
  for (std::string part; std::getline(ss, part, '.');) parts.push_back(part);
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) patch = json{{*it, patch}};
  overlay(config, patch, "");
}

double number(const json& config, const char* key) {
  const auto& v = config.at(key);
  if (!v.is_number()) throw UsageError(std::string("config key '") + key + "' must be a number");
  return v.get<double>();
}

int integer(const json& v, const std::string& key) {
  if (!v.is_number_integer()) throw UsageError("config key '" + key + "' must be an integer");
  return v.get<int>();
}

std::optional<double> optional_number(const json& config, const char* key) {
  if (config.at(key).is_null()) return std::nullopt;
  return number(config, key);
}

tavis_params params_from(const json& config) {
  const std::string units = config.at("units").is_string() ? config.at("units").get<std::string>() : "";
  if (units != "g" && units != "absolute") throw UsageError("units must be \"g\" or \"absolute\"");
  tavis_params p{number(config, "omega0"), number(config, "delta"), number(config, "g"), number(config, "gamma_a"),
                 number(config, "gamma_sigma")};
  // In units of g every frequency is a ratio, so the coupling itself is 1.
  if (units == "g" && p.g != 1.0) throw ValidationError("units \"g\" requires g = 1; use units \"absolute\"");
  if (!(p.g > 0.0) || p.gamma_a < 0.0 || p.gamma_sigma < 0.0) {
    throw ValidationError("parameters need g > 0 and nonnegative rates");
  }
  return p;
}

tavis_dicke parse_matter(const std::string& s) {
  if (s == "T-1" || s == "t_minus") return TAVIS_T_MINUS;
  if (s == "T0" || s == "t_zero") return TAVIS_T_ZERO;
  if (s == "T1" || s == "t_plus") return TAVIS_T_PLUS;
  if (s == "S" || s == "singlet") return TAVIS_SINGLET;
  throw UsageError("unknown matter state '" + s + "' (expected T-1, T0, T1 or S)");
}

int matter_excitations(tavis_dicke d) { return d == TAVIS_T_MINUS ? 0 : d == TAVIS_T_PLUS ? 2 : 1; }

struct Component {
  int photons;
  tavis_dicke matter;
  double re;
  double im;
};

std::vector<Component> state_components(const json& spec) {
  if (spec.is_string()) {
    const std::string name = spec.get<std::string>();
    if (name == "vacuum") return {{0, TAVIS_T_MINUS, 1.0, 0.0}};
    if (name == "one-photon") return {{1, TAVIS_T_MINUS, 1.0, 0.0}};
    if (name == "both-excited") return {{0, TAVIS_T_PLUS, 1.0, 0.0}};
    if (name == "symmetric-one") return {{0, TAVIS_T_ZERO, 1.0, 0.0}};
    throw UsageError("unknown named state '" + name + "'");
  }
  if (!spec.is_array() || spec.empty()) throw UsageError("initial_state must be a name or a list of amplitudes");
  std::vector<Component> out;
  for (const auto& c : spec) {
    if (!c.is_object() || !c.contains("photons") || !c.contains("matter")) {
      throw UsageError("amplitude entries need photons, matter and re/im");
    }
    out.push_back({integer(c.at("photons"), "initial_state.photons"), parse_matter(c.at("matter").get<std::string>()),
                   c.value("re", 0.0), c.value("im", 0.0)});
  }
  double norm = 0.0;
  for (const auto& c : out) norm += c.re * c.re + c.im * c.im;
  if (std::abs(norm - 1.0) > 1e-12) throw ValidationError("initial_state amplitudes must be normalized to 1e-12");
  return out;
}

struct Scenario {
  tavis_params params;
  int cutoff;
  int max_excitation;
  std::vector<Component> state;
};

Scenario scenario_from(json& config) {
  Scenario s;
  s.params = params_from(config);
  s.state = state_components(config.at("initial_state"));
  int max_photons = 0;
  s.max_excitation = 0;
  for (const auto& c : s.state) {
    if (c.photons < 0) throw ValidationError("photon numbers must be nonnegative");
    max_photons = std::max(max_photons, c.photons);
    s.max_excitation = std::max(s.max_excitation, c.photons + matter_excitations(c.matter));
  }
  if (config.at("photon_cutoff").is_null()) {
    // Dissipation only lowers the excitation number, so this cutoff is exact.
    s.cutoff = std::max(1, s.max_excitation);
    config["photon_cutoff"] = s.cutoff;
  } else {
    s.cutoff = integer(config.at("photon_cutoff"), "photon_cutoff");
    if (s.cutoff < std::max(max_photons, s.max_excitation)) {
      throw ValidationError("photon_cutoff must be at least the largest excitation number in initial_state");
    }
  }
  return s;
}

struct SystemHandle {
  tavis_system* ptr = nullptr;
  explicit SystemHandle(const Scenario& s) { check(tavis_system_create(&s.params, s.cutoff, &ptr)); }
  ~SystemHandle() { tavis_system_destroy(ptr); }
  SystemHandle(const SystemHandle&) = delete;
  SystemHandle& operator=(const SystemHandle&) = delete;
};

std::vector<tavis_complex> amplitudes(const SystemHandle& sys, const Scenario& s) {
  size_t dim = 0;
  check(tavis_system_dimension(sys.ptr, &dim));
  std::vector<tavis_complex> amp(dim, tavis_complex{0.0, 0.0});
  for (const auto& c : s.state) {
    size_t idx = 0;
    check(tavis_system_index_of(sys.ptr, c.photons, c.matter, &idx));
    amp[idx].re += c.re;
    amp[idx].im += c.im;
  }
  return amp;
}

std::vector<double> linspace(double a, double b, int n) {
  if (n < 1) throw ValidationError("grid sizes must be positive");
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n == 1 ? a : a + (b - a) * i / (n - 1);
  return v;
}

// ---------------------------------------------------------------------------
// Output

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

class CsvWriter {
 public:
  CsvWriter(const fs::path& path, const std::vector<std::string>& header) : out_(path) {
    if (!out_) throw UsageError("cannot write " + path.string());
    row_text(header);
  }
  void row(std::initializer_list<double> values) {
    std::vector<std::string> cells;
    for (double v : values) cells.push_back(fmt(v));
    row_text(cells);
  }

 private:
  void row_text(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
    out_ << '\n';
  }
  std::ofstream out_;
};

void write_sidecar(const fs::path& csv, const std::string& command, const json& config, const json& extra = {}) {
  json meta{{"tool", "tavis"}, {"version", tavis_version()}, {"command", command}, {"data", csv.filename().string()},
            {"config", config}};
  if (extra.is_object()) {
    for (const auto& [k, v] : extra.items()) meta[k] = v;
  }
  fs::path path = csv;
  path.replace_extension(".json");
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path.string());
  out << meta.dump(2) << '\n';
}

// Runs fn(i) for i in [0, count) on `threads` workers. Results land by index,
// so output order never depends on scheduling.
template <class F>
void parallel_for(std::size_t count, int threads, F&& fn) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const auto n = static_cast<std::size_t>(std::max(1, threads));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(n, count); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// ---------------------------------------------------------------------------
// Commands

struct Common {
  fs::path out_dir = ".";
  int threads = 1;
};

void cmd_eigen(json& config, const Common& common) {
  const tavis_params base = params_from(config);
  const json& sweep = config.at("sweep");
  const std::string parameter = sweep.at("parameter").get<std::string>();
  if (parameter != "gamma_a" && parameter != "gamma_sigma" && parameter != "delta" && parameter != "omega0") {
    throw UsageError("sweep.parameter must be gamma_a, gamma_sigma, delta or omega0");
  }
  const auto values = linspace(sweep.at("start").get<double>(), sweep.at("stop").get<double>(),
                               integer(sweep.at("count"), "sweep.count"));
  std::vector<int> manifolds;
  for (const auto& m : config.at("manifolds")) manifolds.push_back(integer(m, "manifolds"));
  if (manifolds.empty()) throw UsageError("manifolds must not be empty");

  struct Row {
    double value;
    tavis_eigenenergy e;
  };
  std::vector<std::vector<Row>> rows(values.size());
  parallel_for(values.size(), common.threads, [&](std::size_t i) {
    tavis_params p = base;
    double* target = parameter == "gamma_a" ? &p.gamma_a : parameter == "gamma_sigma" ? &p.gamma_sigma
                     : parameter == "delta" ? &p.delta : &p.omega0;
    *target = values[i];
    for (int n : manifolds) {
      tavis_eigenenergy buf[4];
      size_t count = 0;
      check(tavis_eigenenergies(&p, n, 1.0, buf, &count));
      for (size_t k = 0; k < count; ++k) rows[i].push_back({values[i], buf[k]});
    }
  });
  const fs::path csv = common.out_dir / "eigen.csv";
  CsvWriter w(csv, {"sweep_value", "n", "branch", "re_eps", "im_eps"});
  for (const auto& point : rows) {
    for (const auto& r : point) w.row({r.value, double(r.e.manifold), double(r.e.branch), r.e.value.re, r.e.value.im});
  }
  write_sidecar(csv, "eigen", config, json{{"singlet_branch", {{"n=1", 3}, {"n>=2", 4}}}});
}

void cmd_criterion(json& config, const Common& common) {
  const json& c = config.at("criterion");
  const auto grid = linspace(c.at("gamma_minus_min").get<double>(), c.at("gamma_minus_max").get<double>(),
                             integer(c.at("points"), "criterion.points"));
  const int n_max = integer(c.at("n_max"), "criterion.n_max");
  if (n_max < 1) throw ValidationError("criterion.n_max must be at least 1");
  if (grid.front() < 0.0) throw ValidationError("gamma_minus/g must be nonnegative");

  std::vector<double> contour(grid.size());
  std::vector<std::vector<double>> split(grid.size(), std::vector<double>(static_cast<std::size_t>(n_max)));
  parallel_for(grid.size(), common.threads, [&](std::size_t i) {
    check(tavis_sc_contour(grid[i], &contour[i]));
    // gamma_sigma = 0, so gamma_- = gamma_a / 4.
    const tavis_params p{0.0, 0.0, 1.0, 4.0 * grid[i], 0.0};
    for (int n = 1; n <= n_max; ++n) {
      check(tavis_rabi_splitting(&p, n, 1.0, &split[i][static_cast<std::size_t>(n - 1)]));
    }
  });
  std::vector<double> boundaries;
  for (int n = 1; n <= n_max; ++n) {
    double b = 0.0;
    check(tavis_sc_boundary(n, &b));
    boundaries.push_back(b);
  }
  const json extra{{"sc_boundary_gamma_minus_over_g", boundaries}};
  const fs::path contour_csv = common.out_dir / "criterion_contour.csv";
  {
    CsvWriter w(contour_csv, {"gamma_minus_over_g", "n_contour"});
    for (std::size_t i = 0; i < grid.size(); ++i) w.row({grid[i], contour[i]});
  }
  write_sidecar(contour_csv, "criterion", config, extra);
  const fs::path split_csv = common.out_dir / "criterion_splitting.csv";
  {
    CsvWriter w(split_csv, {"gamma_minus_over_g", "n", "splitting_over_g"});
    for (std::size_t i = 0; i < grid.size(); ++i) {
      for (int n = 1; n <= n_max; ++n) w.row({grid[i], double(n), split[i][static_cast<std::size_t>(n - 1)]});
    }
  }
  write_sidecar(split_csv, "criterion", config, extra);
}

void cmd_evolve(json& config, const Common& common) {
  const Scenario s = scenario_from(config);
  const SystemHandle sys(s);
  const auto amp = amplitudes(sys, s);
  const double t_max = number(config, "t_max");
  if (!(t_max > 0.0)) throw ValidationError("t_max must be positive");
  const auto t = linspace(0.0, t_max, integer(config.at("t_steps"), "t_steps") + 1);
  std::vector<tavis_observables> obs(t.size());
  check(tavis_evolve(sys.ptr, amp.data(), t.data(), t.size(), obs.data()));
  const fs::path csv = common.out_dir / "evolve.csv";
  CsvWriter w(csv, {"t", "tr_rho", "expect_n", "expect_photons", "expect_sigma1", "expect_sigma2",
                    "singlet_population", "min_eig_rho"});
  for (const auto& o : obs) {
    w.row({o.t, o.trace, o.excitations, o.photons, o.emitter1, o.emitter2, o.singlet, o.min_eigenvalue});
  }
  write_sidecar(csv, "evolve", config);
}

tavis_operator parse_operator(const std::string& s) {
  if (s == "a") return TAVIS_OP_CAVITY;
  if (s == "sigma1") return TAVIS_OP_EMITTER1;
  if (s == "sigma2") return TAVIS_OP_EMITTER2;
  throw UsageError("operator must be a, sigma1 or sigma2");
}

void cmd_spectrum(json& config, const Common& common) {
  const Scenario s = scenario_from(config);
  const SystemHandle sys(s);
  const auto amp = amplitudes(sys, s);
  const tavis_operator op = parse_operator(config.at("operator").get<std::string>());

  const double w0 = s.params.omega0;
  const double span = 5.0 * s.params.g;
  if (config.at("omega_min").is_null()) config["omega_min"] = w0 - span;
  if (config.at("omega_max").is_null()) config["omega_max"] = w0 + span;
  const auto omega = linspace(number(config, "omega_min"), number(config, "omega_max"),
                              integer(config.at("omega_points"), "omega_points"));

  const std::string kernel = config.at("kernel").get<std::string>();
  if (kernel != "filtered" && kernel != "decaying") throw UsageError("kernel must be filtered or decaying");
  tavis_spectrum_options so{};
  so.kappa = number(config, "kappa");
  if (!(so.kappa > 0.0)) throw ValidationError("kappa must be positive");
  so.collection_time = optional_number(config, "collection_time").value_or(0.0);
  so.step = optional_number(config, "spectrum_step").value_or(0.0);
  so.kernel = kernel == "decaying" ? TAVIS_KERNEL_DECAYING : TAVIS_KERNEL_FILTERED;
  so.tolerance = number(config, "spectrum_tolerance");
  so.max_refinements = -1;

  std::vector<double> values(omega.size());
  tavis_spectrum_info info{};
  check(tavis_spectrum(sys.ptr, op, amp.data(), omega.data(), omega.size(), &so, values.data(), &info));
  config["collection_time"] = info.collection_time;

  const int m_max = config.at("peak_m_max").is_null() ? std::max(1, s.max_excitation)
                                                       : integer(config.at("peak_m_max"), "peak_m_max");
  config["peak_m_max"] = m_max;
  tavis_peak* peaks = nullptr;
  size_t peak_count = 0;
  check(tavis_peak_table(&s.params, m_max, 0, &peaks, &peak_count));
  json table = json::array();
  for (size_t i = 0; i < peak_count; ++i) {
    const auto& p = peaks[i];
    table.push_back({{"m", p.m},
                     {"position", p.position},
                     {"width", p.width},
                     {"multiplicity", p.multiplicity},
                     {"upper_branch", p.upper_branch},
                     {"lower_branch", p.lower_branch},
                     {"involves_singlet", p.involves_singlet != 0}});
  }
  tavis_peaks_free(peaks);

  const fs::path csv = common.out_dir / "spectrum.csv";
  {
    CsvWriter w(csv, {"omega", "s"});
    for (std::size_t i = 0; i < omega.size(); ++i) w.row({omega[i], values[i]});
  }
  write_sidecar(csv, "spectrum", config,
                json{{"quadrature",
                      {{"step", info.step}, {"convergence_delta", info.convergence_delta},
                       {"converged", info.converged != 0}}},
                     {"peak_table", table}});
  if (!info.converged) {
    std::cerr << "warning: spectrum quadrature did not reach tolerance (delta " << fmt(info.convergence_delta)
              << ")\n";
  }
}

int cmd_verify(const Common& common, double rabi_scale, std::uint64_t seed) {
  char* report = nullptr;
  int passed = 0;
  check(tavis_verify(rabi_scale, seed, 1, &report, &passed));
  const std::string text = report;
  tavis_string_free(report);
  std::cout << text << '\n';
  std::ofstream out(common.out_dir / "verify.json");
  if (!out) throw UsageError("cannot write verify.json");
  out << text << '\n';
  return passed ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-emitter cavity QED analysis"};
  app.require_subcommand(1);
  Common common;
  std::string config_path;
  std::vector<std::string> sets;
  std::uint64_t seed = 20111004;
  bool perturb_rabi = false;
  app.add_option("--config", config_path, "JSON scenario file")->check(CLI::ExistingFile);
  app.add_option("--out", common.out_dir, "Output directory (created if missing)");
  app.add_option("--set", sets, "Override a config field, key=value (dotted keys for nested fields)");
  app.add_option("--threads", common.threads, "Worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for the randomized verification points");
  app.add_flag("--debug-perturb-rabi", perturb_rabi, "Scale closed-form Rabi frequencies by 1.01")->group("");

  auto* eigen = app.add_subcommand("eigen", "Complex eigenenergies along a parameter sweep");
  auto* criterion = app.add_subcommand("criterion", "Strong-coupling contour and Rabi splittings");
  auto* evolve = app.add_subcommand("evolve", "Master-equation trajectory observables");
  auto* spectrum = app.add_subcommand("spectrum", "Time-resolved emission spectrum and line table");
  auto* verify = app.add_subcommand("verify", "Closed-form versus numerical self-checks");
  for (auto* sub : {eigen, criterion, evolve, spectrum, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    json config = default_config();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      json user;
      try {
        user = json::parse(in);
      } catch (const json::parse_error& e) {
        throw UsageError(std::string("malformed config: ") + e.what());
      }
      overlay(config, user, "");
    }
    for (const auto& s : sets) apply_set(config, s);
    fs::create_directories(common.out_dir);

    if (verify->parsed()) return cmd_verify(common, perturb_rabi ? 1.01 : 1.0, seed);
    if (eigen->parsed()) cmd_eigen(config, common);
    if (criterion->parsed()) cmd_criterion(config, common);
    if (evolve->parsed()) cmd_evolve(config, common);
    if (spectrum->parsed()) cmd_spectrum(config, common);
    return kExitOk;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    std::cerr << "invalid config: " << e.what() << '\n';
    return kExitValidation;
  } catch (const LibraryError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.status == TAVIS_INVALID_ARGUMENT ? kExitValidation : kExitNumerical;
  } catch (const json::exception& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}
