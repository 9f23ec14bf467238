#include <cmath>
#include <numbers>

#include "purity/jcm.hpp"
#include "support.hpp"

using namespace purity;
using testing::max_abs;

namespace {

constexpr double kPi = std::numbers::pi;
const double kRoot2 = std::sqrt(2.0);

// Literal blocks make U Hermitian, so U^dag U = U^2 splits by manifold.
// With lambda_n = n+1 (n < d-1), lambda_{d-1} = 0, c_n = cos(x sqrt(lambda_n)),
// s_n = sin(x sqrt(lambda_n)) / sqrt(lambda_n):
//   ee diagonal: c_n^2 + lambda_n s_n^2 - 1 = 0
//   gg diagonal: sin^2(x sqrt n) + c_n^2 - 1
//   eg entry (n-1, n): sqrt n s_{n-1} (c_{n-1} + c_n)
double literal_defect_by_hand(double theta, int d) {
  const double x = 2 * kPi * theta;
  auto lam = [d](int n) { return n < d - 1 ? double(n + 1) : 0.0; };
  auto c = [&](int n) { return std::cos(x * std::sqrt(lam(n))); };
  auto s = [&](int n) { return lam(n) == 0.0 ? x : std::sin(x * std::sqrt(lam(n))) / std::sqrt(lam(n)); };
  double worst = 0.0;
  for (int n = 0; n < d; ++n) {
    worst = std::max(worst, std::abs(std::pow(std::sin(x * std::sqrt(double(n))), 2) + c(n) * c(n) - 1.0));
    if (n >= 1) worst = std::max(worst, std::abs(std::sqrt(double(n)) * s(n - 1) * (c(n - 1) + c(n))));
  }
  return worst;
}

}  // namespace

TEST_CASE("blocks at theta = 0") {
  for (auto conv : {BlockConvention::LiteralPaper, BlockConvention::UnitaryStandard}) {
    const JcmBlocks b = build_blocks(0.0, 6, conv);
    const CMatrix i6 = CMatrix::Identity(6, 6);
    CHECK(max_abs(b.vpp.matrix() - kRoot2 * i6) < 1e-15);
    CHECK(max_abs(b.vpm.matrix()) == 0.0);
    CHECK(max_abs(b.vmp.matrix()) == 0.0);
    CHECK(max_abs(b.vmm.matrix() - kRoot2 * i6) < 1e-15);
    CHECK(max_abs(assemble_joint(b) - CMatrix::Identity(12, 12)) < 1e-15);
  }
  CHECK_NOTHROW(build_blocks(0.0, 1, BlockConvention::UnitaryStandard));
}

TEST_CASE("vacuum column at theta = 1/4") {
  const JcmBlocks lit = build_blocks(0.25, 8, BlockConvention::LiteralPaper);
  const JcmBlocks std_ = build_blocks(0.25, 8, BlockConvention::UnitaryStandard);
  for (const JcmBlocks* b : {&lit, &std_}) {
    CHECK(b->vpp.matrix().col(0).norm() < 1e-15);
    CHECK(std::abs(b->vpm.adjoint().matrix().col(0).norm() - kRoot2) < 1e-15);
  }
  CHECK(std::abs(lit.vmm.matrix()(0, 0)) < 1e-15);
  CHECK(std::abs(std_.vmm.matrix()(0, 0) - kRoot2) < 1e-15);
}

TEST_CASE("conventions share the upper row exactly") {
  for (double theta : {0.07, 0.25, 1.3, 3.9}) {
    const JcmBlocks lit = build_blocks(theta, 25, BlockConvention::LiteralPaper);
    const JcmBlocks std_ = build_blocks(theta, 25, BlockConvention::UnitaryStandard);
    CHECK(max_abs(lit.vpp.matrix() - std_.vpp.matrix()) == 0.0);
    CHECK(max_abs(lit.vpm.matrix() - std_.vpm.matrix()) == 0.0);
  }
}

TEST_CASE("standard JCM matches the per-manifold Rabi rotation") {
  const int d = 12;
  for (double theta : {0.11, 0.37, 2.9}) {
    const CMatrix u = assemble_joint(build_blocks(theta, d, BlockConvention::UnitaryStandard));
    const double x = 2 * kPi * theta;
    for (int n = 0; n + 1 < d; ++n) {
      const double w = x * std::sqrt(double(n + 1));
      CHECK(std::abs(u(n, n) - std::cos(w)) < 1e-14);
      CHECK(std::abs(u(d + n + 1, d + n + 1) - std::cos(w)) < 1e-14);
      CHECK(std::abs(u(n, d + n + 1) - Complex(0, -std::sin(w))) < 1e-14);
      CHECK(std::abs(u(d + n + 1, n) - Complex(0, -std::sin(w))) < 1e-14);
    }
    CHECK(std::abs(u(d, d) - 1.0) < 1e-15);           // |g,0> is untouched
    CHECK(std::abs(u(d - 1, d - 1) - 1.0) < 1e-15);   // |e,d-1> has no partner in the truncation
  }
}

TEST_CASE("unitarity defect") {
  CHECK(unitarity_defect(CMatrix::Identity(7, 7)) == 0.0);
  CHECK_ERROR_KIND(unitarity_defect(CMatrix::Zero(2, 3)), ErrorKind::Shape);

  CHECK(unitarity_defect(assemble_joint(build_blocks(0.37, 30, BlockConvention::UnitaryStandard))) <= 1e-12);
  for (int k = 0; k < 12; ++k) {
    const double theta = testing::uniform(0.0, 10.0);
    const double nbar = testing::uniform(0.0, 30.0);
    const Index d = truncation_dim(nbar);
    CHECK(unitarity_defect(assemble_joint(build_blocks(theta, d, BlockConvention::UnitaryStandard))) <= 1e-10);
  }

  CHECK(unitarity_defect(assemble_joint(build_blocks(0.25, 10, BlockConvention::LiteralPaper))) > 0.1);
  for (double theta : {0.1, 0.25, 0.61}) {
    const double got = unitarity_defect(assemble_joint(build_blocks(theta, 10, BlockConvention::LiteralPaper)));
    CHECK(got > 0.0);
    CHECK(std::abs(got - literal_defect_by_hand(theta, 10)) < 1e-12);
  }
}

TEST_CASE("V+- V+-^dag = 2 sin^2 of the a a^dag argument") {
  for (double theta : {0.05, 0.25, 1.8}) {
    const int d = 20;
    const JcmBlocks b = build_blocks(theta, d, BlockConvention::UnitaryStandard);
    const CMatrix lhs = b.vpm.matrix() * b.vpm.matrix().adjoint();
    CMatrix rhs = CMatrix::Zero(d, d);
    for (int n = 0; n + 1 < d; ++n) rhs(n, n) = 2 * std::pow(std::sin(2 * kPi * theta * std::sqrt(n + 1.0)), 2);
    CHECK(max_abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("standard U conserves excitation number") {
  const int d = 16;
  const CMatrix n = excitation_number(d);
  for (double theta : {0.3, 1.1, 5.5}) {
    const CMatrix u = assemble_joint(build_blocks(theta, d, BlockConvention::UnitaryStandard));
    CHECK(max_abs(u * n - n * u) < 1e-10);
  }
}

TEST_CASE("vacuum sector has period 1 in theta") {
  // rows/cols |e,0>, |g,0>, |g,1>
  const int d = 6;
  const Index idx[] = {0, d, d + 1};
  for (double theta : {0.0, 0.19, 0.5, 0.83}) {
    const CMatrix u0 = assemble_joint(build_blocks(theta, d, BlockConvention::UnitaryStandard));
    const CMatrix u1 = assemble_joint(build_blocks(theta + 1.0, d, BlockConvention::UnitaryStandard));
    for (Index r : idx)
      for (Index c : idx) CHECK(std::abs(u0(r, c) - u1(r, c)) < 1e-12);
  }
}

TEST_CASE("block construction errors and convention names") {
  CHECK_ERROR_KIND(build_blocks(0.0, 0, BlockConvention::UnitaryStandard), ErrorKind::InvalidDimension);
  CHECK_ERROR_KIND(build_blocks(0.1, 1, BlockConvention::LiteralPaper), ErrorKind::InvalidDimension);
  CHECK(parse_convention("literal") == BlockConvention::LiteralPaper);
  CHECK(parse_convention("standard") == BlockConvention::UnitaryStandard);
  CHECK(to_string(BlockConvention::LiteralPaper) == "literal");
  CHECK_ERROR_KIND(parse_convention("Standard"), ErrorKind::Usage);
}
