#pragma once

// Parameter-grid sweeps over (s, nbar, phi, theta). `sweep` is the OpenMP
// kernel; `sweep_serial` is the single-threaded reference it must match
// bit for bit.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "purity/entropy.hpp"
#include "purity/interferometer.hpp"
#include "purity/oracle.hpp"

namespace purity {

struct ThetaRange {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  /// floor((stop - start) / step + 1), robust to representation error.
  std::size_t count() const;
  /// start + i * step (not accumulated).
  double at(std::size_t i) const;
};

struct GridSpec {
  std::vector<double> s_values{0.0};
  std::vector<double> nbar_values{0.0};
  ThetaRange theta{0.0, 0.0, 1.0};
  std::vector<double> phi_values{0.0};
  double fieldphase = 0.0;
  BlockConvention convention = BlockConvention::UnitaryStandard;
  std::optional<Index> dim;  // nullopt = auto

  void validate() const;
  std::size_t size() const;
  /// Point i in lexicographic (s, nbar, phi, theta) order.
  InterferometerConfig point(std::size_t i) const;
};

struct SweepRow {
  InterferometerConfig config;
  Index dim = 0;
  DualitySummary summary;
};

std::vector<SweepRow> sweep_serial(const GridSpec& spec);
/// jobs <= 0 uses the OpenMP default.
std::vector<SweepRow> sweep(const GridSpec& spec, int jobs = 0);

/// Oracle equivalence report per grid point, same ordering and parallelism.
std::vector<OracleReport> oracle_sweep(const GridSpec& spec, int jobs = 0);

struct AuditViolation {
  InterferometerConfig config;
  ArakiLiebSlack slack;
};

struct AuditReport {
  std::size_t points = 0;
  double tolerance = kInequalityTol;
  std::vector<AuditViolation> violations;
  double worst_slack = 0.0;
  InterferometerConfig worst_config;
  ArakiLiebSlack worst_pair;
};

AuditReport audit_araki_lieb(const GridSpec& spec, double tolerance = kInequalityTol, int jobs = 0);

struct RecreationWindow {
  double start = 0.0;
  double stop = 0.0;
};

struct RecreationResult {
  double nbar = 0.0;
  double s = 0.0;
  double theta_star = 0.0;
  double p_q_peak = 0.0;
  double p_m_peak = 0.0;
  double attractor_fidelity = 0.0;
  double alpha = 0.0;  // arg C at the peak
  double ratio = 0.0;  // theta_star / sqrt(nbar)
  PurityExchangeBounds bounds;
};

/// Default window [0.2 sqrt(nbar), 1.5 sqrt(nbar)].
RecreationWindow default_recreation_window(double nbar);

/// Scans P_Q over the window and reports the argmax, with the attractor
/// fidelity of the beam-splitter state there (alpha = arg C).
RecreationResult locate_recreation(double nbar, double s, std::optional<RecreationWindow> window = std::nullopt,
                                   double step = 0.002,
                                   BlockConvention convention = BlockConvention::UnitaryStandard, int jobs = 0);

// Figure presets.
enum class Preset { Fig2, Fig3, Fig4, Fig5 };

Preset parse_preset(std::string_view text);
std::string_view to_string(Preset p);

/// One grid per output file; fig4/fig5 yield an s=1 and an s=0 sheet.
struct PresetSheet {
  std::string suffix;
  GridSpec grid;
};

std::vector<PresetSheet> preset_sheets(Preset p);

/// Writes <out_dir>/<preset><suffix>.csv for each sheet; returns the paths.
std::vector<std::filesystem::path> figdata(Preset p, const std::filesystem::path& out_dir, int jobs = 0);

// Flag parsing helpers.
std::vector<double> parse_list(std::string_view text);
ThetaRange parse_range(std::string_view text);
std::optional<Index> parse_dim(std::string_view text);

}  // namespace purity
