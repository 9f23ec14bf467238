#include <chrono>
#include <cmath>
#include <numbers>

#include "purity/oracle.hpp"
#include "support.hpp"

using namespace purity;
using testing::max_abs;

namespace {

InterferometerConfig cfg(double s, double nbar, double theta, double phi = 0.0) {
  InterferometerConfig c;
  c.s = s;
  c.nbar = nbar;
  c.theta = theta;
  c.phi = phi;
  return c;
}

}  // namespace

TEST_CASE("empty interferometer rotates the preparation to the x axis") {
  const InterferometerConfig c = cfg(1.0, 3.0, 0.0);
  const JointState js = final_joint_state(c);
  const CMatrix want = kron(qubit_density(Bloch(1, 0, 0)), initial_field(c).rho());
  CHECK(max_abs(js.rho() - want) < 1e-14);
}

TEST_CASE("vacuum swap point") {
  const JointState js = final_joint_state(cfg(0, 0, 0.25));
  const CMatrix f = partial_trace_qubit(js);
  CMatrix want = CMatrix::Zero(f.rows(), f.cols());
  want(0, 0) = want(1, 1) = 0.5;
  CHECK(max_abs(f - want) < 1e-15);
  CHECK(std::abs(purity::purity(partial_trace_field(js)) - 1.0) < 1e-15);
}

TEST_CASE("pure preparations keep the joint state pure") {
  for (int k = 0; k < 8; ++k) {
    const double s = (k % 2) ? 1.0 : -1.0;
    const InterferometerConfig c = cfg(s, testing::uniform(0, 15), testing::uniform(0, 6), testing::uniform(0, 6));
    const JointState js = final_joint_state(c);
    CHECK(std::abs(purity::purity(js.rho()) - 1.0) < 1e-10);
    CHECK(std::abs(js.trace() - 1.0) < 1e-10);
  }
  // s = 1, vacuum, theta = 1/8: reductions equally mixed
  const JointState js = final_joint_state(cfg(1.0, 0.0, 0.125));
  CHECK(std::abs(purity::purity(partial_trace_field(js)) - purity::purity(partial_trace_qubit(js))) < 1e-12);
}

TEST_CASE("pre-merger state") {
  for (double s : {-1.0, 0.0, 0.6}) {
    const JointState js = pre_merger_state(cfg(s, 4.0, 0.0));
    CHECK((bloch_of(partial_trace_field(js)) - Bloch(0, 0, s)).norm() < 1e-14);
  }
  for (int k = 0; k < 10; ++k) {
    InterferometerConfig c = cfg(testing::uniform(-1, 1), testing::uniform(0, 20), testing::uniform(0, 6), 1.3);
    const Qubit q = partial_trace_field(pre_merger_state(c));
    CHECK(std::abs(q.trace() - 1.0) < 1e-12);
    CHECK(hermiticity_defect(q) < 1e-12);
    // phi is ignored before the merger
    c.phi = 0.0;
    CHECK(max_abs(q - partial_trace_field(pre_merger_state(c))) < 1e-14);
    CHECK(max_abs(q - beam_splitter_state(config_blocks(c), initial_field(c), c.s)) < 1e-10);
  }
}

TEST_CASE("equivalence report examples") {
  const OracleReport a = equivalence_report(cfg(0, 0, 0.25));
  CHECK(a.max_deviation() <= 1e-12);
  CHECK(a.pass());

  const OracleReport b = equivalence_report(cfg(1, 5, 1.3));
  CHECK(b.max_deviation() <= 1e-10);

  const auto t0 = std::chrono::steady_clock::now();
  const OracleReport c = equivalence_report(cfg(0.3, 20, std::sqrt(20.0), std::numbers::pi / 3));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(c.max_deviation() <= 1e-10);
  CHECK(c.unitarity_defect <= 1e-10);
  CHECK(std::abs(c.trace - 1.0) <= 1e-10);
  CHECK(secs < 1.0);
}

TEST_CASE("vacuum joint state lives on the lowest excitation sector") {
  for (double s : {-1.0, 0.0, 0.5})
    for (double theta : {0.1, 0.37, 1.9}) {
      const InterferometerConfig c = cfg(s, 0, theta, 0.7);
      // before the merger: |e,0>, |g,0>, |g,1> only
      const JointState pre = pre_merger_state(c);
      const Index d = pre.field_dim();
      CMatrix outside = pre.rho();
      for (Index i : {Index(0), d, d + 1})
        for (Index j : {Index(0), d, d + 1}) outside(i, j) = 0.0;
      CHECK(max_abs(outside) <= 1e-12);

      // the merger mixes e and g, so afterwards only the photon bound survives
      const CMatrix f = partial_trace_qubit(final_joint_state(c));
      CHECK(max_abs(f.bottomRightCorner(d - 2, d - 2)) <= 1e-12);
      CHECK(max_abs(f.topRightCorner(2, d - 2)) <= 1e-12);
    }
}

TEST_CASE("literal convention is reported, never judged") {
  InterferometerConfig c = cfg(0.0, 2.0, 0.3);
  c.convention = BlockConvention::LiteralPaper;
  CHECK_NOTHROW(final_joint_state(c));
  const OracleReport r = equivalence_report(c);
  CHECK(r.unitarity_defect > 0.1);
  CHECK(r.pass());
}
