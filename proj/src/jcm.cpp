#include "purity/jcm.hpp"

#include <cmath>
#include <numbers>

#include "purity/error.hpp"

namespace purity {

std::string_view to_string(BlockConvention c) {
  return c == BlockConvention::LiteralPaper ? "literal" : "standard";
}

BlockConvention parse_convention(std::string_view text) {
  if (text == "literal") return BlockConvention::LiteralPaper;
  if (text == "standard") return BlockConvention::UnitaryStandard;
  throw Error(ErrorKind::Usage, "unknown convention '" + std::string(text) + "' (expected standard|literal)");
}

JcmBlocks build_blocks(double theta, Index dim, BlockConvention convention) {
  if (dim < 1) throw Error(ErrorKind::InvalidDimension, "JCM blocks need dim >= 1");
  if (dim < 2 && theta != 0.0) throw Error(ErrorKind::InvalidDimension, "JCM blocks need dim >= 2 for theta != 0");

  const double phase = 2.0 * std::numbers::pi * theta;
  const double root2 = std::numbers::sqrt2;
  const FockOperator a = annihilator(dim);
  // Exact truncated a a^dag = diag(1, ..., d-1, 0); a has one entry per row,
  // so the product is the diagonal of row norms.
  const FockOperator aad(CMatrix(a.matrix().rowwise().squaredNorm().cast<Complex>().asDiagonal()));
  const FockOperator ada = number_operator(dim);

  const FockOperator cos_aad = diag_fn_of([phase](double x) { return std::cos(phase * x); }, aad);
  const FockOperator sinc_aad = diag_fn_of(sin_over_x(phase), aad);

  FockOperator vpp = Complex(root2, 0.0) * cos_aad;
  FockOperator vpm(Complex(0.0, -root2) * (sinc_aad.matrix().diagonal().asDiagonal() * a.matrix()));

  if (convention == BlockConvention::LiteralPaper) {
    FockOperator vmp = -vpm.adjoint();
    FockOperator vmm = vpp.adjoint();
    return {std::move(vpp), std::move(vpm), std::move(vmp), std::move(vmm), theta, convention};
  }
  FockOperator vmp = vpm.adjoint();
  FockOperator vmm = Complex(root2, 0.0) * diag_fn_of([phase](double x) { return std::cos(phase * x); }, ada);
  return {std::move(vpp), std::move(vpm), std::move(vmp), std::move(vmm), theta, convention};
}

CMatrix assemble_joint(const JcmBlocks& b) {
  const Index d = b.dim();
  CMatrix u(2 * d, 2 * d);
  u.topLeftCorner(d, d) = b.vpp.matrix();
  u.topRightCorner(d, d) = b.vpm.matrix();
  u.bottomLeftCorner(d, d) = -b.vmp.matrix();
  u.bottomRightCorner(d, d) = b.vmm.matrix();
  return u / std::numbers::sqrt2;
}

double unitarity_defect(const CMatrix& u) {
  if (u.rows() != u.cols()) throw Error(ErrorKind::Shape, "unitarity check needs a square matrix");
  const CMatrix g = u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols());
  return g.cwiseAbs().maxCoeff();
}

CMatrix excitation_number(Index dim) {
  CMatrix n = CMatrix::Zero(2 * dim, 2 * dim);
  for (Index k = 0; k < dim; ++k) {
    n(k, k) = static_cast<double>(k + 1);
    n(dim + k, dim + k) = static_cast<double>(k);
  }
  return n;
}

}  // namespace purity
