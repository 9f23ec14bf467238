#include "purity/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "purity/error.hpp"

namespace purity {

namespace {

struct Paulis {
  Qubit id = Qubit::Identity();
  Qubit x;
  Qubit y;
  Qubit z;
  Paulis() {
    const Complex i(0.0, 1.0);
    x << 0.0, 1.0, 1.0, 0.0;
    y << 0.0, -i, i, 0.0;
    z << 1.0, 0.0, 0.0, -1.0;
  }
};

// One way's contribution: with A, B the blocks routed to the two ways,
//   (1+X)/4 A^dag rho A + (1-X)/4 B^dag rho B
//   - (Z - iY)/4 e^{-i phi} A^dag rho B - (Z + iY)/4 e^{i phi} B^dag rho A
// where (X, Z) are (sigma_x, sigma_z) after the merger, or (sigma_z, -sigma_x) before it.
CMatrix way_term(const CMatrix& rho, const CMatrix& a, const CMatrix& b, const Qubit& x, const Qubit& z, double phi) {
  const Paulis p;
  const Complex i(0.0, 1.0);
  const Qubit one = p.id;
  const Complex em = std::polar(1.0, -phi);
  const Complex ep = std::polar(1.0, phi);
  const Qubit q_aa = 0.25 * (one + x);
  const Qubit q_bb = 0.25 * (one - x);
  const Qubit q_ab = -0.25 * em * (z - i * p.y);
  const Qubit q_ba = -0.25 * ep * (z + i * p.y);
  return kron(q_aa, a.adjoint() * rho * a) + kron(q_bb, b.adjoint() * rho * b) + kron(q_ab, a.adjoint() * rho * b) +
         kron(q_ba, b.adjoint() * rho * a);
}

JointState build(const InterferometerConfig& config, bool before_merger) {
  config.validate();
  const Paulis p;
  const FieldState field = initial_field(config);
  const JcmBlocks blocks = config_blocks(config);
  const CMatrix& rho = field.rho();
  const Qubit x = before_merger ? p.z : p.x;
  const Qubit z = before_merger ? Qubit(-p.x) : p.z;
  const double phi = before_merger ? 0.0 : config.phi;

  const CMatrix plus = way_term(rho, blocks.vpp.matrix(), blocks.vpm.matrix(), x, z, phi);
  const CMatrix minus = way_term(rho, -blocks.vmp.matrix(), blocks.vmm.matrix(), x, z, phi);
  CMatrix joint = 0.5 * (1.0 + config.s) * plus + 0.5 * (1.0 - config.s) * minus;
  // Remove roundoff-level anti-Hermitian residue.
  joint = 0.5 * (joint + joint.adjoint()).eval();

  if (config.convention == BlockConvention::UnitaryStandard) {
    const double dev = std::abs(joint.trace() - Complex(1.0, 0.0));
    if (dev > 1e-8) {
      throw Error(ErrorKind::ConsistencyViolation, "oracle joint state trace deviates from 1 by " + std::to_string(dev));
    }
  }
  return JointState(std::move(joint), blocks.dim());
}

}  // namespace

JointState final_joint_state(const InterferometerConfig& config) { return build(config, false); }

JointState pre_merger_state(const InterferometerConfig& config) { return build(config, true); }

double OracleReport::max_deviation() const {
  return std::max({max_dev_bloch, max_dev_pq, max_dev_pm, max_dev_g_joint});
}

bool OracleReport::pass(double tolerance) const {
  if (config.convention == BlockConvention::LiteralPaper) return true;
  return max_deviation() <= tolerance;
}

OracleReport equivalence_report(const InterferometerConfig& config) {
  OracleReport report;
  report.config = config;
  const JointState js = final_joint_state(config);
  report.trace = js.trace().real();
  report.unitarity_defect = unitarity_defect(assemble_joint(config_blocks(config)));

  const Qubit rq = partial_trace_field(js);
  const CMatrix rm = partial_trace_qubit(js);
  const Bloch b = bloch_of(rq);
  const double pq = purity(rq);
  const double pm = purity(rm);
  const double g_joint = 1.0 - purity(js.rho());

  const DualitySummary closed = summarize(config);
  report.max_dev_bloch = (b - closed.bloch_final).cwiseAbs().maxCoeff();
  report.max_dev_pq = std::abs(pq - closed.p_q);
  report.max_dev_pm = std::abs(pm - closed.p_m);
  report.max_dev_g_joint = std::abs(g_joint - closed.g_joint);
  return report;
}

}  // namespace purity
