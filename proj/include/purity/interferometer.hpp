#pragma once

// Closed-form observables of the two-way interferometer with a JCM
// which-way marker: way probabilities, contrast, predictability, visibility,
// final Bloch vector, quanton/marker purities and the beam-splitter state.

#include <optional>

#include "purity/fock.hpp"
#include "purity/jcm.hpp"

namespace purity {

using Bloch = Eigen::Vector3d;

inline constexpr double kConsistencyTol = 1e-10;

class QubitState {
 public:
  explicit QubitState(const Bloch& bloch);
  /// Canonical preparation (0, 0, s).
  static QubitState from_inversion(double s);

  const Bloch& bloch() const { return bloch_; }
  double purity() const { return 0.5 * (1.0 + bloch_.squaredNorm()); }
  Qubit density() const;

 private:
  Bloch bloch_;
};

/// rho = (1 + b . sigma) / 2 with |e> = sigma_z eigenvalue +1 at index 0.
Qubit qubit_density(const Bloch& b);
/// b_i = tr(rho sigma_i).
Bloch bloch_of(const Qubit& rho);

struct InterferometerConfig {
  double s = 0.0;           // inversion, [-1, 1]
  double nbar = 0.0;        // photons
  double theta = 0.0;       // vacuum Rabi phase
  double phi = 0.0;         // phase shifter, radians
  double fieldphase = 0.0;  // coherent-state phase, radians
  std::optional<Index> dim;  // nullopt = truncation rule
  BlockConvention convention = BlockConvention::UnitaryStandard;

  Index resolved_dim() const;
  void validate() const;
};

struct ContrastFactors {
  Complex up;
  Complex down;
};

struct WayProbabilities {
  double plus = 0.0;
  double minus = 0.0;
};

struct DualitySummary {
  double w_plus = 0.0;
  double w_minus = 0.0;
  double predictability = 0.0;
  double visibility = 0.0;
  Complex contrast;
  Complex c_up;
  Complex c_down;
  Bloch bloch_final = Bloch::Zero();
  double p_q = 0.0;
  double p_m = 0.0;
  double g_q = 0.0;
  double g_m = 0.0;
  double g_joint = 0.0;
  double mutual_info = 0.0;
  double al_left_slack = 0.0;
  double al_right_slack = 0.0;
};

/// (C_up, C_down) = (i <V+- V++^dag>_0, -i <V-- V-+^dag>_0).
ContrastFactors contrast_factors(const JcmBlocks& blocks, const FieldState& field);

Complex contrast(Complex c_up, Complex c_down, double s);

WayProbabilities way_probabilities(const JcmBlocks& blocks, const FieldState& field, double s);

double predictability(double w_plus, double w_minus);

/// |C|; throws ConsistencyViolation above 1 + 1e-10.
double visibility(Complex contrast);

/// (w+ - w-, Re[C e^{-i phi}], -Im[C e^{-i phi}])
Bloch final_bloch(double w_plus, double w_minus, Complex contrast, double phi);

/// (1 + P^2 + V^2) / 2
double quanton_purity(double predictability, double visibility);

/// Marker purity from the explicit matrices w+ rho_M^(+) + w- rho_M^(-).
double marker_purity(const JcmBlocks& blocks, const FieldState& field, double s);
/// The same quantity as a sum of products of expectations. Only valid for a
/// pure initial marker state.
double marker_purity_closed_form(const JcmBlocks& blocks, const FieldState& field, double s);
/// tr_Q rho^(f) as a matrix.
CMatrix marker_final_state(const JcmBlocks& blocks, const FieldState& field, double s);

/// Purity change for a unitary which-way marker: V0^2 (|C|^2 - 1) / 2.
double delta_purity_unitary_wwm(double abs_contrast, double v0);

/// Quanton state before the beam merger (phi = 0): Bloch (Im C, Re C, w+ - w-).
Qubit beam_splitter_state(const JcmBlocks& blocks, const FieldState& field, double s);

/// (|e> + i e^{i alpha} |g>) / sqrt2
Eigen::Vector2cd attractor_state(double alpha);
double attractor_fidelity(const Qubit& rho, double alpha);

/// Builds field and blocks for a config.
FieldState initial_field(const InterferometerConfig& config);
JcmBlocks config_blocks(const InterferometerConfig& config);

DualitySummary summarize(const InterferometerConfig& config);

}  // namespace purity
