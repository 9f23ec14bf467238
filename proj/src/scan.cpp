#include "purity/scan.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include <omp.h>

#include "purity/error.hpp"
#include "purity/report.hpp"

namespace purity {

std::size_t ThetaRange::count() const {
  const double n = std::floor((stop - start) / step + 1.0 + 1e-9);
  return n < 0.0 ? 0 : static_cast<std::size_t>(n);
}

double ThetaRange::at(std::size_t i) const { return start + static_cast<double>(i) * step; }

void GridSpec::validate() const {
  if (s_values.empty() || nbar_values.empty() || phi_values.empty()) {
    throw Error(ErrorKind::Usage, "grid lists must be non-empty");
  }
  for (double s : s_values)
    if (!(s >= -1.0 && s <= 1.0)) throw Error(ErrorKind::Usage, "s values must lie in [-1, 1]");
  for (double n : nbar_values)
    if (!(n >= 0.0) || !std::isfinite(n)) throw Error(ErrorKind::Usage, "nbar values must be nonnegative");
  if (!(theta.step > 0.0)) throw Error(ErrorKind::Usage, "theta step must be > 0");
  if (!(theta.stop >= theta.start)) throw Error(ErrorKind::Usage, "theta stop must be >= start");
  if (dim && *dim < 1) throw Error(ErrorKind::Usage, "dim must be >= 1");
}

std::size_t GridSpec::size() const {
  return s_values.size() * nbar_values.size() * phi_values.size() * theta.count();
}

InterferometerConfig GridSpec::point(std::size_t i) const {
  const std::size_t nt = theta.count();
  const std::size_t np = phi_values.size();
  const std::size_t nn = nbar_values.size();
  InterferometerConfig c;
  c.theta = theta.at(i % nt);
  i /= nt;
  c.phi = phi_values[i % np];
  i /= np;
  c.nbar = nbar_values[i % nn];
  i /= nn;
  c.s = s_values.at(i);
  c.fieldphase = fieldphase;
  c.dim = dim;
  c.convention = convention;
  return c;
}

namespace {

SweepRow evaluate(const GridSpec& spec, std::size_t i) {
  SweepRow row;
  row.config = spec.point(i);
  row.dim = row.config.resolved_dim();
  row.summary = summarize(row.config);
  return row;
}

}  // namespace

std::vector<SweepRow> sweep_serial(const GridSpec& spec) {
  spec.validate();
  const std::size_t n = spec.size();
  std::vector<SweepRow> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) rows.push_back(evaluate(spec, i));
  return rows;
}

namespace {

// Evaluates fn(i) for every grid index into a preallocated vector, so the
// output order never depends on scheduling. Exceptions cannot leave the
// parallel region; the lowest-index failure is rethrown afterwards.
template <typename T, typename Fn>
std::vector<T> parallel_points(const GridSpec& spec, int jobs, Fn fn) {
  spec.validate();
  const std::size_t n = spec.size();
  std::vector<T> out(n);
  std::size_t failed_at = std::numeric_limits<std::size_t>::max();
  ErrorKind failed_kind = ErrorKind::ConsistencyViolation;
  std::string failed_what;
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  const auto total = static_cast<std::int64_t>(n);

#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (std::int64_t k = 0; k < total; ++k) {
    const auto i = static_cast<std::size_t>(k);
    try {
      out[i] = fn(i);
    } catch (const Error& e) {
#pragma omp critical(purity_sweep_error)
      if (i < failed_at) {
        failed_at = i;
        failed_kind = e.kind();
        failed_what = e.what();
      }
    } catch (const std::exception& e) {
#pragma omp critical(purity_sweep_error)
      if (i < failed_at) {
        failed_at = i;
        failed_kind = ErrorKind::InvalidState;
        failed_what = e.what();
      }
    }
  }
  if (failed_at != std::numeric_limits<std::size_t>::max()) throw Error(failed_kind, failed_what);
  return out;
}

}  // namespace

std::vector<SweepRow> sweep(const GridSpec& spec, int jobs) {
  return parallel_points<SweepRow>(spec, jobs, [&spec](std::size_t i) { return evaluate(spec, i); });
}

std::vector<OracleReport> oracle_sweep(const GridSpec& spec, int jobs) {
  return parallel_points<OracleReport>(spec, jobs,
                                       [&spec](std::size_t i) { return equivalence_report(spec.point(i)); });
}

AuditReport audit_araki_lieb(const GridSpec& spec, double tolerance, int jobs) {
  if (!(tolerance > 0.0)) throw Error(ErrorKind::Usage, "audit tolerance must be > 0");
  const std::vector<SweepRow> rows = sweep(spec, jobs);
  AuditReport report;
  report.points = rows.size();
  report.tolerance = tolerance;
  report.worst_slack = std::numeric_limits<double>::infinity();
  for (const SweepRow& row : rows) {
    const ArakiLiebSlack slack{row.summary.al_left_slack, row.summary.al_right_slack};
    if (!slack.holds(tolerance)) report.violations.push_back({row.config, slack});
    if (slack.worst() < report.worst_slack) {
      report.worst_slack = slack.worst();
      report.worst_config = row.config;
      report.worst_pair = slack;
    }
  }
  if (rows.empty()) report.worst_slack = 0.0;
  return report;
}

RecreationWindow default_recreation_window(double nbar) {
  const double r = std::sqrt(nbar);
  return {0.2 * r, 1.5 * r};
}

RecreationResult locate_recreation(double nbar, double s, std::optional<RecreationWindow> window, double step,
                                   BlockConvention convention, int jobs) {
  if (!(nbar > 0.0)) throw Error(ErrorKind::Domain, "recreation search needs nbar > 0");
  if (!(step > 0.0)) throw Error(ErrorKind::Domain, "recreation step must be > 0");
  const RecreationWindow w = window.value_or(default_recreation_window(nbar));
  if (!(w.stop >= w.start) || !std::isfinite(w.start) || !std::isfinite(w.stop)) {
    throw Error(ErrorKind::Domain, "recreation window is empty");
  }

  GridSpec grid;
  grid.s_values = {s};
  grid.nbar_values = {nbar};
  grid.theta = {w.start, w.stop, step};
  grid.convention = convention;
  if (grid.theta.count() == 0) throw Error(ErrorKind::Domain, "recreation window is empty");
  const std::vector<SweepRow> rows = sweep(grid, jobs);

  std::size_t best = 0;
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].summary.p_q > rows[best].summary.p_q) best = i;

  const SweepRow& peak = rows[best];
  RecreationResult out;
  out.nbar = nbar;
  out.s = s;
  out.theta_star = peak.config.theta;
  out.p_q_peak = peak.summary.p_q;
  out.p_m_peak = peak.summary.p_m;
  out.alpha = std::arg(peak.summary.contrast);
  out.ratio = out.theta_star / std::sqrt(nbar);
  const Qubit rho_bs = beam_splitter_state(config_blocks(peak.config), initial_field(peak.config), s);
  out.attractor_fidelity = attractor_fidelity(rho_bs, out.alpha);
  out.bounds = purity_exchange_bounds(out.p_q_peak, out.p_m_peak);
  return out;
}

Preset parse_preset(std::string_view text) {
  if (text == "fig2") return Preset::Fig2;
  if (text == "fig3") return Preset::Fig3;
  if (text == "fig4") return Preset::Fig4;
  if (text == "fig5") return Preset::Fig5;
  throw Error(ErrorKind::Usage, "unknown preset '" + std::string(text) + "' (expected fig2|fig3|fig4|fig5)");
}

std::string_view to_string(Preset p) {
  switch (p) {
    case Preset::Fig2: return "fig2";
    case Preset::Fig3: return "fig3";
    case Preset::Fig4: return "fig4";
    case Preset::Fig5: return "fig5";
  }
  return "fig?";
}

std::vector<PresetSheet> preset_sheets(Preset p) {
  GridSpec g;
  switch (p) {
    case Preset::Fig2:
      g.s_values = {0.0};
      g.nbar_values = {0.0};
      g.theta = {0.0, 1.5, 0.002};
      return {{"", g}};
    case Preset::Fig3:
      g.s_values = {0.0};
      g.nbar_values = {20.0};
      g.theta = {0.0, 8.0, 0.005};
      return {{"", g}};
    case Preset::Fig4:
    case Preset::Fig5: {
      g.nbar_values.clear();
      for (int k = 0; k <= 80; ++k) g.nbar_values.push_back(0.5 * k);
      g.theta = {0.0, 8.0, 0.02};
      GridSpec pure = g;
      pure.s_values = {1.0};
      GridSpec mixed = g;
      mixed.s_values = {0.0};
      return {{"_s1", pure}, {"_s0", mixed}};
    }
  }
  return {};
}

std::vector<std::filesystem::path> figdata(Preset p, const std::filesystem::path& out_dir, int jobs) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create output directory " + out_dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  for (const PresetSheet& sheet : preset_sheets(p)) {
    const std::vector<SweepRow> rows = sweep(sheet.grid, jobs);
    const std::filesystem::path path = out_dir / (std::string(to_string(p)) + sheet.suffix + ".csv");
    std::ofstream os(path);
    if (!os) throw Error(ErrorKind::Io, "cannot open " + path.string() + " for writing");
    write_csv(os, rows, p == Preset::Fig2);
    if (!os) throw Error(ErrorKind::Io, "write failed for " + path.string());
    written.push_back(path);
  }
  return written;
}

namespace {

std::string_view trim(std::string_view t) {
  while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.remove_prefix(1);
  while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.remove_suffix(1);
  return t;
}

double parse_plain(std::string_view t) {
  t = trim(t);
  if (!t.empty() && t.front() == '+') t.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw Error(ErrorKind::Usage, "cannot parse number '" + std::string(t) + "'");
  }
  return value;
}

// Accepts plain numbers and multiples of pi: "pi", "-pi", "2pi", "2*pi", "pi/3".
double parse_number(std::string_view token) {
  token = trim(token);
  double denom = 1.0;
  if (const auto slash = token.find('/'); slash != std::string_view::npos) {
    denom = parse_plain(token.substr(slash + 1));
    token = trim(token.substr(0, slash));
  }
  const auto pi_at = token.find("pi");
  if (pi_at == std::string_view::npos) return parse_plain(token) / denom;
  if (pi_at + 2 != token.size()) throw Error(ErrorKind::Usage, "cannot parse number '" + std::string(token) + "'");
  std::string_view coeff = trim(token.substr(0, pi_at));
  if (!coeff.empty() && coeff.back() == '*') coeff = trim(coeff.substr(0, coeff.size() - 1));
  double c = 1.0;
  if (coeff == "-") c = -1.0;
  else if (!coeff.empty() && coeff != "+") c = parse_plain(coeff);
  return c * std::numbers::pi / denom;
}

}  // namespace

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    out.push_back(parse_number(token));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

ThetaRange parse_range(std::string_view text) {
  const auto a = text.find(':');
  const auto b = a == std::string_view::npos ? a : text.find(':', a + 1);
  if (a == std::string_view::npos) {
    const double x = parse_number(text);
    return {x, x, 1.0};
  }
  if (b == std::string_view::npos) throw Error(ErrorKind::Usage, "theta range must be start:stop:step");
  ThetaRange r{parse_number(text.substr(0, a)), parse_number(text.substr(a + 1, b - a - 1)),
               parse_number(text.substr(b + 1))};
  if (!(r.step > 0.0)) throw Error(ErrorKind::Usage, "theta step must be > 0");
  if (!(r.stop >= r.start)) throw Error(ErrorKind::Usage, "theta stop must be >= start");
  return r;
}

std::optional<Index> parse_dim(std::string_view text) {
  text = trim(text);
  if (text == "auto") return std::nullopt;
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
    throw Error(ErrorKind::Usage, "dim must be 'auto' or a positive integer, got '" + std::string(text) + "'");
  }
  return static_cast<Index>(value);
}

}  // namespace purity
