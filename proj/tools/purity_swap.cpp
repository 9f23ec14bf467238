// purity-swap: grid sweeps, inequality audits, figure data, recreation-zone
// search and oracle cross-checks for the JCM Ramsey interferometer.
//
// Exit codes: 0 success, 1 usage error, 2 consistency violation,
// 3 audit found violations.

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "purity/entropy.hpp"
#include "purity/error.hpp"
#include "purity/oracle.hpp"
#include "purity/report.hpp"
#include "purity/scan.hpp"

namespace {

using namespace purity;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitConsistency = 2;
constexpr int kExitAuditViolations = 3;

struct Flags {
  std::string s = "0";
  std::string nbar = "0";
  std::string theta = "0:1:0.01";
  std::string phi = "0";
  std::string fieldphase = "0";
  std::string dim = "auto";
  std::string convention = "standard";
  int jobs = 0;
  std::string out = "-";
  std::string format = "csv";
  double tolerance = kInequalityTol;
  std::string preset;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--s", f.s, "inversion values, comma separated")->capture_default_str();
  cmd->add_option("--nbar", f.nbar, "mean photon numbers, comma separated")->capture_default_str();
  cmd->add_option("--theta", f.theta, "vacuum Rabi phase range start:stop:step")->capture_default_str();
  cmd->add_option("--phi", f.phi, "phase-shifter values (radians; 'pi/3' accepted)")->capture_default_str();
  cmd->add_option("--fieldphase", f.fieldphase, "coherent-state phase (radians)")->capture_default_str();
  cmd->add_option("--dim", f.dim, "Fock truncation: integer or auto")->capture_default_str();
  cmd->add_option("--convention", f.convention, "block convention: standard|literal")
      ->check(CLI::IsMember({"standard", "literal"}))
      ->capture_default_str();
  cmd->add_option("--jobs", f.jobs, "worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--out", f.out, "output path ('-' for stdout)")->capture_default_str();
  cmd->add_option("--format", f.format, "csv|json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  cmd->add_option("--tolerance", f.tolerance, "inequality / equivalence tolerance")->capture_default_str();
}

GridSpec grid_from(const Flags& f) {
  GridSpec g;
  g.s_values = parse_list(f.s);
  g.nbar_values = parse_list(f.nbar);
  g.theta = parse_range(f.theta);
  g.phi_values = parse_list(f.phi);
  const std::vector<double> fp = parse_list(f.fieldphase);
  if (fp.size() != 1) throw Error(ErrorKind::Usage, "--fieldphase takes a single value");
  g.fieldphase = fp.front();
  g.dim = parse_dim(f.dim);
  g.convention = parse_convention(f.convention);
  g.validate();
  return g;
}

// Either stdout or a file opened for writing.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error(ErrorKind::Io, "cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw Error(ErrorKind::Io, "write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int run_sweep(const Flags& f, const std::string& command) {
  GridSpec grid;
  bool inequality_terms = false;
  if (!f.preset.empty()) {
    const Preset p = parse_preset(f.preset);
    const auto sheets = preset_sheets(p);
    if (sheets.size() != 1) throw Error(ErrorKind::Usage, "sweep presets must be single-sheet (fig2|fig3); use figdata");
    grid = sheets.front().grid;
    grid.convention = parse_convention(f.convention);
    inequality_terms = p == Preset::Fig2;
  } else {
    grid = grid_from(f);
  }
  const auto rows = sweep(grid, f.jobs);
  Output out(f.out);
  if (f.format == "json") write_json(out.stream(), command, grid, rows);
  else write_csv(out.stream(), rows, inequality_terms);
  out.finish();
  return kExitOk;
}

int run_audit(const Flags& f, std::size_t random_samples) {
  const GridSpec grid = grid_from(f);
  const AuditReport report = audit_araki_lieb(grid, f.tolerance, f.jobs);
  std::optional<RandomAuditReport> random;
  if (random_samples > 0) random = audit_random_states(random_samples, 20240601u, f.tolerance);

  Output out(f.out);
  if (f.format == "json") {
    nlohmann::json j = to_json(report);
    j["grid"] = to_json(grid);
    if (random) {
      j["random_states"] = {{"samples", random->samples},
                            {"violations", random->violations},
                            {"worst_slack", random->worst_slack},
                            {"worst_dim_b", random->worst_dim_b},
                            {"scope", "C^2 (x) C^k, k in {2,3,4}, Ginibre G G^dag of random rank"}};
    }
    out.stream() << j.dump(1) << '\n';
  } else {
    auto& os = out.stream();
    os << "points " << report.points << '\n';
    os << "tolerance " << format_number(report.tolerance) << '\n';
    os << "violations " << report.violations.size() << '\n';
    os << "worst_slack " << format_number(report.worst_slack) << '\n';
    const auto& w = report.worst_config;
    os << "worst_config s=" << format_number(w.s) << " nbar=" << format_number(w.nbar)
       << " theta=" << format_number(w.theta) << " phi=" << format_number(w.phi) << '\n';
    for (const auto& v : report.violations) {
      os << "violation s=" << format_number(v.config.s) << " nbar=" << format_number(v.config.nbar)
         << " theta=" << format_number(v.config.theta) << " phi=" << format_number(v.config.phi)
         << " left=" << format_number(v.slack.left) << " right=" << format_number(v.slack.right) << '\n';
    }
    if (random) {
      os << "random_states " << random->samples << " violations " << random->violations << " worst_slack "
         << format_number(random->worst_slack) << '\n';
    }
  }
  out.finish();
  const bool clean = report.violations.empty() && (!random || random->violations == 0);
  return clean ? kExitOk : kExitAuditViolations;
}

int run_figdata(const Flags& f) {
  if (f.preset.empty()) throw Error(ErrorKind::Usage, "figdata needs --preset fig2|fig3|fig4|fig5");
  const std::string dir = f.out == "-" ? "." : f.out;
  for (const auto& path : figdata(parse_preset(f.preset), dir, f.jobs)) std::cout << path.string() << '\n';
  return kExitOk;
}

int run_recreation(const Flags& f, const std::string& window, double step) {
  std::optional<RecreationWindow> w;
  if (!window.empty()) {
    const auto colon = window.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::Usage, "--window must be start:stop");
    const auto a = parse_list(window.substr(0, colon));
    const auto b = parse_list(window.substr(colon + 1));
    if (a.size() != 1 || b.size() != 1) throw Error(ErrorKind::Usage, "--window must be start:stop");
    w = RecreationWindow{a.front(), b.front()};
  }
  const BlockConvention conv = parse_convention(f.convention);
  nlohmann::json results = nlohmann::json::array();
  for (double nbar : parse_list(f.nbar)) {
    for (double s : parse_list(f.s)) {
      if (!(s >= -1.0 && s <= 1.0)) throw Error(ErrorKind::Usage, "s values must lie in [-1, 1]");
      if (!(nbar > 0.0)) throw Error(ErrorKind::Usage, "recreation needs nbar > 0");
      results.push_back(to_json(locate_recreation(nbar, s, w, step, conv, f.jobs)));
    }
  }
  Output out(f.out);
  if (f.format == "json") {
    out.stream() << nlohmann::json{{"schema_version", kSchemaVersion}, {"results", results}}.dump(1) << '\n';
  } else {
    auto& os = out.stream();
    os << "nbar,s,theta_star,theta_star_over_sqrt_nbar,p_q_peak,p_m_peak,alpha,attractor_fidelity,"
          "exchange_left_slack,exchange_right_slack\n";
    for (const auto& r : results) {
      os << format_number(r["nbar"]) << ',' << format_number(r["s"]) << ',' << format_number(r["theta_star"]) << ','
         << format_number(r["theta_star_over_sqrt_nbar"]) << ',' << format_number(r["p_q_peak"]) << ','
         << format_number(r["p_m_peak"]) << ',' << format_number(r["alpha"]) << ','
         << format_number(r["attractor_fidelity"]) << ',' << format_number(r["exchange_left_slack"]) << ','
         << format_number(r["exchange_right_slack"]) << '\n';
    }
  }
  out.finish();
  return kExitOk;
}

int run_oracle_check(const Flags& f) {
  const GridSpec grid = grid_from(f);
  const double tol = f.tolerance;
  const auto reports = oracle_sweep(grid, f.jobs);
  std::size_t failures = 0;
  double worst = 0.0;
  for (const auto& r : reports) {
    if (!r.pass(tol)) ++failures;
    worst = std::max(worst, r.max_deviation());
  }
  Output out(f.out);
  if (f.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    out.stream() << nlohmann::json{{"schema_version", kSchemaVersion},
                                   {"grid", to_json(grid)},
                                   {"tolerance", tol},
                                   {"points", reports.size()},
                                   {"failures", failures},
                                   {"max_deviation", worst},
                                   {"reports", arr}}
                        .dump(1)
                 << '\n';
  } else {
    auto& os = out.stream();
    os << "s,nbar,theta,phi,dim,convention,max_dev_bloch,max_dev_pq,max_dev_pm,max_dev_g_joint,unitarity_defect,"
          "trace,pass\n";
    for (const auto& r : reports) {
      const auto& c = r.config;
      os << format_number(c.s) << ',' << format_number(c.nbar) << ',' << format_number(c.theta) << ','
         << format_number(c.phi) << ',' << c.resolved_dim() << ',' << to_string(c.convention) << ','
         << format_number(r.max_dev_bloch) << ',' << format_number(r.max_dev_pq) << ','
         << format_number(r.max_dev_pm) << ',' << format_number(r.max_dev_g_joint) << ','
         << format_number(r.unitarity_defect) << ',' << format_number(r.trace) << ',' << (r.pass(tol) ? 1 : 0)
         << '\n';
    }
  }
  out.finish();
  std::cerr << "oracle-check: " << reports.size() << " points, max deviation " << format_number(worst) << ", "
            << failures << " failures\n";
  return failures == 0 ? kExitOk : kExitConsistency;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ConsistencyViolation:
    case ErrorKind::InvalidState:
    case ErrorKind::NonHermitianInput:
      return kExitConsistency;
    default:
      return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Purity swapping in the Jaynes-Cummings model: sweeps, audits and figure data"};
  app.require_subcommand(1);

  Flags sweep_f, audit_f, fig_f, rec_f, oracle_f;

  auto* sweep_cmd = app.add_subcommand("sweep", "evaluate every grid point and emit CSV/JSON rows");
  add_common(sweep_cmd, sweep_f);
  sweep_cmd->add_option("--preset", sweep_f.preset, "use a figure grid (fig2|fig3) instead of the grid flags");

  auto* audit_cmd = app.add_subcommand("audit", "check the linear-entropy Araki-Lieb inequality over a grid");
  audit_f.s = "-1,-0.5,0,0.5,1";
  audit_f.nbar = "0,1,2,5,10,20";
  audit_f.theta = "0:6:0.01";
  add_common(audit_cmd, audit_f);
  std::size_t random_samples = 0;
  audit_cmd->add_option("--random", random_samples, "additionally audit N random bipartite mixed states");

  auto* fig_cmd = app.add_subcommand("figdata", "write figure CSVs into the --out directory");
  add_common(fig_cmd, fig_f);
  fig_cmd->add_option("--preset", fig_f.preset, "fig2|fig3|fig4|fig5")->required();

  auto* rec_cmd = app.add_subcommand("recreation", "locate the recreation-zone P_Q peak and attractor fidelity");
  rec_f.nbar = "20";
  add_common(rec_cmd, rec_f);
  std::string window;
  double step = 0.002;
  rec_cmd->add_option("--window", window, "theta window start:stop (default 0.2..1.5 sqrt(nbar))");
  rec_cmd->add_option("--step", step, "theta step")->capture_default_str();

  auto* oracle_cmd = app.add_subcommand("oracle-check", "compare closed forms with the explicit joint-state oracle");
  oracle_f.s = "-1,-0.5,0,0.3,1";
  oracle_f.nbar = "0,1,5,20";
  oracle_f.theta = "0:6:0.05";
  oracle_f.phi = "0,pi/3";
  oracle_f.tolerance = kEquivalenceTol;
  add_common(oracle_cmd, oracle_f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sweep_cmd) return run_sweep(sweep_f, "sweep");
    if (*audit_cmd) return run_audit(audit_f, random_samples);
    if (*fig_cmd) return run_figdata(fig_f);
    if (*rec_cmd) return run_recreation(rec_f, window, step);
    if (*oracle_cmd) return run_oracle_check(oracle_f);
  } catch (const Error& e) {
    std::cerr << "purity-swap: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "purity-swap: " << e.what() << '\n';
    return kExitConsistency;
  }
  return kExitUsage;
}
