#include "purity/report.hpp"

#include <cmath>
#include <charconv>
#include <limits>

namespace purity {

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> columns = {
      "s",          "nbar",      "theta",      "phi",        "dim",         "convention",   "w_plus",
      "w_minus",    "predictability", "visibility", "contrast_re", "contrast_im", "c_up_re", "c_up_im",
      "c_down_re",  "c_down_im", "sx",         "sy",         "sz",          "p_q",          "p_m",
      "g_q",        "g_m",       "g_joint",    "mutual_info", "al_left_slack", "al_right_slack"};
  return columns;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  // to_chars never consults the locale; output matches printf %.17g
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

std::vector<double> numeric_fields(const SweepRow& r) {
  const DualitySummary& d = r.summary;
  return {d.w_plus,          d.w_minus,         d.predictability,  d.visibility,      d.contrast.real(),
          d.contrast.imag(), d.c_up.real(),     d.c_up.imag(),     d.c_down.real(),   d.c_down.imag(),
          d.bloch_final.x(), d.bloch_final.y(), d.bloch_final.z(), d.p_q,             d.p_m,
          d.g_q,             d.g_m,             d.g_joint,         d.mutual_info,     d.al_left_slack,
          d.al_right_slack};
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows, bool with_inequality_terms) {
  const auto& cols = csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  if (with_inequality_terms) os << ",al_lower,al_upper";
  os << '\n';
  std::string line;
  for (const SweepRow& r : rows) {
    line.clear();
    line += format_number(r.config.s) + ',' + format_number(r.config.nbar) + ',' + format_number(r.config.theta) +
            ',' + format_number(r.config.phi) + ',' + std::to_string(r.dim) + ',' +
            std::string(to_string(r.config.convention));
    for (double v : numeric_fields(r)) line += ',' + format_number(v);
    if (with_inequality_terms) {
      line += ',' + format_number(std::abs(r.summary.g_q - r.summary.g_m));
      line += ',' + format_number(r.summary.g_q + r.summary.g_m);
    }
    line += '\n';
    os << line;
  }
}

nlohmann::json to_json(const GridSpec& spec) {
  nlohmann::json j;
  j["s"] = spec.s_values;
  j["nbar"] = spec.nbar_values;
  j["theta"] = {{"start", spec.theta.start}, {"stop", spec.theta.stop}, {"step", spec.theta.step}};
  j["phi"] = spec.phi_values;
  j["fieldphase"] = spec.fieldphase;
  j["convention"] = std::string(to_string(spec.convention));
  if (spec.dim) j["dim"] = *spec.dim;
  else j["dim"] = "auto";
  return j;
}

nlohmann::json to_json(const InterferometerConfig& c) {
  nlohmann::json j{{"s", c.s},
                   {"nbar", c.nbar},
                   {"theta", c.theta},
                   {"phi", c.phi},
                   {"fieldphase", c.fieldphase},
                   {"dim", c.resolved_dim()},
                   {"convention", std::string(to_string(c.convention))}};
  return j;
}

nlohmann::json row_json(const SweepRow& r) {
  const auto& cols = csv_columns();
  nlohmann::json j = nlohmann::json::object();
  j[cols[0]] = r.config.s;
  j[cols[1]] = r.config.nbar;
  j[cols[2]] = r.config.theta;
  j[cols[3]] = r.config.phi;
  j[cols[4]] = r.dim;
  j[cols[5]] = std::string(to_string(r.config.convention));
  const std::vector<double> values = numeric_fields(r);
  for (std::size_t i = 0; i < values.size(); ++i) j[cols[6 + i]] = values[i];
  return j;
}

void write_json(std::ostream& os, const std::string& command, const GridSpec& spec, const std::vector<SweepRow>& rows) {
  nlohmann::ordered_json out;
  out["header"] = {{"schema_version", kSchemaVersion}, {"command", command}, {"grid", to_json(spec)}};
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  const auto& cols = csv_columns();
  for (const SweepRow& r : rows) {
    const nlohmann::json j = row_json(r);
    nlohmann::ordered_json o;
    for (const auto& c : cols) o[c] = j.at(c);
    arr.push_back(std::move(o));
  }
  out["rows"] = std::move(arr);
  os << out.dump(1) << '\n';
}

nlohmann::json to_json(const AuditReport& r) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["points"] = r.points;
  j["tolerance"] = r.tolerance;
  j["violation_count"] = r.violations.size();
  j["worst_slack"] = r.worst_slack;
  j["worst_config"] = to_json(r.worst_config);
  j["worst_left_slack"] = r.worst_pair.left;
  j["worst_right_slack"] = r.worst_pair.right;
  auto v = nlohmann::json::array();
  for (const AuditViolation& x : r.violations)
    v.push_back({{"config", to_json(x.config)}, {"left_slack", x.slack.left}, {"right_slack", x.slack.right}});
  j["violations"] = std::move(v);
  return j;
}

nlohmann::json to_json(const RecreationResult& r) {
  return {{"nbar", r.nbar},
          {"s", r.s},
          {"theta_star", r.theta_star},
          {"theta_star_over_sqrt_nbar", r.ratio},
          {"p_q_peak", r.p_q_peak},
          {"p_m_peak", r.p_m_peak},
          {"alpha", r.alpha},
          {"attractor_fidelity", r.attractor_fidelity},
          {"exchange_left_slack", r.bounds.left},
          {"exchange_right_slack", r.bounds.right},
          {"exchange_bounds_pass", r.bounds.pass}};
}

nlohmann::json to_json(const OracleReport& r) {
  return {{"config", to_json(r.config)},
          {"max_dev_bloch", r.max_dev_bloch},
          {"max_dev_pq", r.max_dev_pq},
          {"max_dev_pm", r.max_dev_pm},
          {"max_dev_g_joint", r.max_dev_g_joint},
          {"unitarity_defect", r.unitarity_defect},
          {"trace", r.trace},
          {"pass", r.pass()}};
}

}  // namespace purity
