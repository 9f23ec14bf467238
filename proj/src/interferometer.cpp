#include "purity/interferometer.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "purity/entropy.hpp"
#include "purity/error.hpp"

namespace purity {

namespace {

void require_inversion(double s) {
  if (!(s >= -1.0 && s <= 1.0)) throw Error(ErrorKind::Domain, "inversion s must lie in [-1, 1], got " + std::to_string(s));
}

std::string describe(const InterferometerConfig& c) {
  std::ostringstream os;
  os.precision(17);
  os << "s=" << c.s << " nbar=" << c.nbar << " theta=" << c.theta << " phi=" << c.phi << " fieldphase=" << c.fieldphase
     << " dim=" << c.resolved_dim() << " convention=" << to_string(c.convention);
  return os.str();
}

}  // namespace

QubitState::QubitState(const Bloch& bloch) : bloch_(bloch) {
  if (!(bloch_.norm() <= 1.0 + 1e-12)) {
    throw Error(ErrorKind::InvalidState, "Bloch vector longer than 1: " + std::to_string(bloch_.norm()));
  }
}

QubitState QubitState::from_inversion(double s) {
  require_inversion(s);
  return QubitState(Bloch(0.0, 0.0, s));
}

Qubit QubitState::density() const { return qubit_density(bloch_); }

Qubit qubit_density(const Bloch& b) {
  Qubit rho;
  rho(0, 0) = 0.5 * (1.0 + b.z());
  rho(1, 1) = 0.5 * (1.0 - b.z());
  rho(0, 1) = 0.5 * Complex(b.x(), -b.y());
  rho(1, 0) = 0.5 * Complex(b.x(), b.y());
  return rho;
}

Bloch bloch_of(const Qubit& rho) {
  return Bloch(2.0 * rho(0, 1).real(), -2.0 * rho(0, 1).imag(), (rho(0, 0) - rho(1, 1)).real());
}

Index InterferometerConfig::resolved_dim() const { return dim ? *dim : truncation_dim(nbar); }

void InterferometerConfig::validate() const {
  require_inversion(s);
  if (!(nbar >= 0.0) || !std::isfinite(nbar)) throw Error(ErrorKind::Domain, "nbar must be finite and nonnegative");
  if (!std::isfinite(theta) || !std::isfinite(phi) || !std::isfinite(fieldphase)) {
    throw Error(ErrorKind::Domain, "theta, phi and fieldphase must be finite");
  }
  if (dim && *dim < 1) throw Error(ErrorKind::InvalidDimension, "dim must be >= 1");
}

ContrastFactors contrast_factors(const JcmBlocks& b, const FieldState& field) {
  const Complex i(0.0, 1.0);
  return {i * expectation_product(field, b.vpm, b.vpp), -i * expectation_product(field, b.vmm, b.vmp)};
}

Complex contrast(Complex c_up, Complex c_down, double s) {
  require_inversion(s);
  return 0.5 * (1.0 + s) * c_up + 0.5 * (1.0 - s) * c_down;
}

WayProbabilities way_probabilities(const JcmBlocks& b, const FieldState& field, double s) {
  require_inversion(s);
  const double up = 0.25 * (1.0 + s);
  const double down = 0.25 * (1.0 - s);
  WayProbabilities w;
  w.plus = up * expectation_product(field, b.vpp, b.vpp).real() + down * expectation_product(field, b.vmp, b.vmp).real();
  w.minus = up * expectation_product(field, b.vpm, b.vpm).real() + down * expectation_product(field, b.vmm, b.vmm).real();
  return w;
}

double predictability(double w_plus, double w_minus) { return std::abs(w_plus - w_minus); }

double visibility(Complex c) {
  const double v = std::abs(c);
  if (v > 1.0 + kConsistencyTol) {
    throw Error(ErrorKind::ConsistencyViolation, "|C| = " + std::to_string(v) + " exceeds 1");
  }
  return v;
}

Bloch final_bloch(double w_plus, double w_minus, Complex c, double phi) {
  const Complex rotated = c * std::polar(1.0, -phi);
  return Bloch(w_plus - w_minus, rotated.real(), -rotated.imag());
}

double quanton_purity(double p, double v) {
  if (p * p + v * v > 1.0 + kConsistencyTol) {
    throw Error(ErrorKind::ConsistencyViolation, "P^2 + V^2 = " + std::to_string(p * p + v * v) + " exceeds 1");
  }
  return 0.5 * (1.0 + p * p + v * v);
}

CMatrix marker_final_state(const JcmBlocks& b, const FieldState& field, double s) {
  require_inversion(s);
  const CMatrix plus = sandwich(field, b.vpp) + sandwich(field, b.vpm);
  const CMatrix minus = sandwich(field, b.vmp) + sandwich(field, b.vmm);
  return 0.25 * (1.0 + s) * plus + 0.25 * (1.0 - s) * minus;
}

double marker_purity(const JcmBlocks& b, const FieldState& field, double s) {
  return purity(marker_final_state(b, field, s));
}

double marker_purity_closed_form(const JcmBlocks& b, const FieldState& field, double s) {
  require_inversion(s);
  const auto e = [&](const FockOperator& x, const FockOperator& y) { return expectation_product(field, x, y); };
  const FockOperator& pp = b.vpp;
  const FockOperator& pm = b.vpm;
  const FockOperator& mp = b.vmp;
  const FockOperator& mm = b.vmm;

  const Complex upper = e(pp, pp) * e(pp, pp) + e(pm, pm) * e(pm, pm) + 2.0 * e(pp, pm) * e(pm, pp);
  const Complex lower = e(mp, mp) * e(mp, mp) + e(mm, mm) * e(mm, mm) + 2.0 * e(mp, mm) * e(mm, mp);
  const Complex cross = 2.0 * e(mp, pp) * e(pp, mp) + 2.0 * e(mm, pm) * e(pm, mm) + 2.0 * e(mp, pm) * e(pm, mp) +
                        2.0 * e(pp, mm) * e(mm, pp);
  const Complex total =
      (1.0 + s) * (1.0 + s) / 16.0 * upper + (1.0 - s) * (1.0 - s) / 16.0 * lower + (1.0 - s * s) / 16.0 * cross;
  return total.real();
}

double delta_purity_unitary_wwm(double abs_contrast, double v0) {
  if (!(abs_contrast >= 0.0 && abs_contrast <= 1.0)) throw Error(ErrorKind::Domain, "|C| must lie in [0, 1]");
  if (!(v0 >= 0.0 && v0 <= 1.0)) throw Error(ErrorKind::Domain, "V0 must lie in [0, 1]");
  return 0.5 * v0 * v0 * (abs_contrast * abs_contrast - 1.0);
}

Qubit beam_splitter_state(const JcmBlocks& b, const FieldState& field, double s) {
  const ContrastFactors cf = contrast_factors(b, field);
  const Complex c = contrast(cf.up, cf.down, s);
  const WayProbabilities w = way_probabilities(b, field, s);
  const Bloch bs(c.imag(), c.real(), w.plus - w.minus);
  if (bs.norm() > 1.0 + kConsistencyTol) {
    throw Error(ErrorKind::ConsistencyViolation, "beam-splitter Bloch vector longer than 1: " + std::to_string(bs.norm()));
  }
  return qubit_density(bs);
}

Eigen::Vector2cd attractor_state(double alpha) {
  const double r = 1.0 / std::numbers::sqrt2;
  return Eigen::Vector2cd(Complex(r, 0.0), Complex(0.0, 1.0) * std::polar(r, alpha));
}

double attractor_fidelity(const Qubit& rho, double alpha) {
  const Eigen::Vector2cd psi = attractor_state(alpha);
  return psi.dot(rho * psi).real();
}

FieldState initial_field(const InterferometerConfig& c) {
  return coherent_state(c.nbar, c.fieldphase, c.resolved_dim());
}

JcmBlocks config_blocks(const InterferometerConfig& c) { return build_blocks(c.theta, c.resolved_dim(), c.convention); }

DualitySummary summarize(const InterferometerConfig& config) {
  config.validate();
  const FieldState field = initial_field(config);
  const JcmBlocks blocks = config_blocks(config);
  const double s = config.s;

  DualitySummary out;
  try {
    const ContrastFactors cf = contrast_factors(blocks, field);
    out.c_up = cf.up;
    out.c_down = cf.down;
    out.contrast = contrast(cf.up, cf.down, s);
    const WayProbabilities w = way_probabilities(blocks, field, s);
    out.w_plus = w.plus;
    out.w_minus = w.minus;
    out.predictability = predictability(w.plus, w.minus);
    out.visibility = visibility(out.contrast);
    out.bloch_final = final_bloch(w.plus, w.minus, out.contrast, config.phi);
    out.p_q = quanton_purity(out.predictability, out.visibility);
    out.p_m = marker_purity(blocks, field, s);
    if (out.p_m > 1.0 + kConsistencyTol) {
      throw Error(ErrorKind::ConsistencyViolation, "marker purity " + std::to_string(out.p_m) + " exceeds 1");
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ConsistencyViolation) throw;
    throw Error(ErrorKind::ConsistencyViolation, std::string(e.what()) + " at " + describe(config));
  }

  const double initial_joint = QubitState::from_inversion(s).purity() * purity(field.rho());
  out.g_q = linear_entropy(std::min(out.p_q, 1.0));
  out.g_m = linear_entropy(std::min(out.p_m, 1.0));
  out.g_joint = linear_entropy(std::min(initial_joint, 1.0));
  out.mutual_info = mutual_information(out.g_q, out.g_m, out.g_joint);
  const ArakiLiebSlack slack = araki_lieb_slack({out.g_q, out.g_m, out.g_joint});
  out.al_left_slack = slack.left;
  out.al_right_slack = slack.right;
  return out;
}

}  // namespace purity
