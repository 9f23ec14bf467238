#include "purity/fock.hpp"

#include <cmath>
#include <sstream>

#include "purity/error.hpp"

namespace purity {

namespace {

void require_square(const CMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    std::ostringstream os;
    os << what << " must be a non-empty square matrix, got " << m.rows() << "x" << m.cols();
    throw Error(ErrorKind::Shape, os.str());
  }
}

void require_same_dim(Index a, Index b, const char* what) {
  if (a != b) {
    std::ostringstream os;
    os << what << ": dimension mismatch " << a << " vs " << b;
    throw Error(ErrorKind::Shape, os.str());
  }
}

void require_dim(Index dim) {
  if (dim < 1) throw Error(ErrorKind::InvalidDimension, "Fock dimension must be >= 1");
}

}  // namespace

FockOperator::FockOperator(CMatrix entries) : entries_(std::move(entries)) {
  require_square(entries_, "FockOperator");
}

FockOperator operator*(const FockOperator& a, const FockOperator& b) {
  require_same_dim(a.dim(), b.dim(), "operator product");
  return FockOperator(a.entries_ * b.entries_);
}

FockOperator operator+(const FockOperator& a, const FockOperator& b) {
  require_same_dim(a.dim(), b.dim(), "operator sum");
  return FockOperator(a.entries_ + b.entries_);
}

FockOperator operator-(const FockOperator& a, const FockOperator& b) {
  require_same_dim(a.dim(), b.dim(), "operator difference");
  return FockOperator(a.entries_ - b.entries_);
}

FockOperator operator*(Complex c, const FockOperator& a) { return FockOperator(c * a.entries_); }

FockOperator operator-(const FockOperator& a) { return FockOperator(-a.entries_); }

FieldState::FieldState(CMatrix rho, double nbar, std::optional<CVector> psi)
    : rho_(std::move(rho)), nbar_(nbar), amplitudes_(std::move(psi)) {}

FieldState FieldState::from_density(CMatrix rho, double nbar) {
  require_square(rho, "field density matrix");
  if (nbar < 0.0) throw Error(ErrorKind::Domain, "nbar must be nonnegative");
  const double herm = hermiticity_defect(rho);
  if (herm > kHermitianTol) {
    throw Error(ErrorKind::InvalidState, "field density matrix not Hermitian, defect " + std::to_string(herm));
  }
  const Complex tr = rho.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTol) {
    throw Error(ErrorKind::InvalidState, "field density matrix trace " + std::to_string(tr.real()) + " != 1");
  }
  const CMatrix sym = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(sym, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -kPsdTol) {
    throw Error(ErrorKind::InvalidState, "field density matrix has negative eigenvalue " +
                                             std::to_string(eig.eigenvalues().minCoeff()));
  }
  return FieldState(std::move(rho), nbar, std::nullopt);
}

FieldState FieldState::from_amplitudes(CVector psi, double nbar) {
  if (psi.size() < 1) throw Error(ErrorKind::InvalidDimension, "empty state vector");
  if (nbar < 0.0) throw Error(ErrorKind::Domain, "nbar must be nonnegative");
  const double norm = psi.squaredNorm();
  if (std::abs(norm - 1.0) > kTraceTol) {
    throw Error(ErrorKind::InvalidState, "state vector norm^2 " + std::to_string(norm) + " != 1");
  }
  CMatrix rho = psi * psi.adjoint();
  return FieldState(std::move(rho), nbar, std::move(psi));
}

JointState::JointState(CMatrix rho, Index field_dim) : rho_(std::move(rho)), field_dim_(field_dim) {
  require_dim(field_dim);
  if (rho_.rows() != 2 * field_dim || rho_.cols() != 2 * field_dim) {
    std::ostringstream os;
    os << "joint state must be " << 2 * field_dim << "x" << 2 * field_dim << ", got " << rho_.rows() << "x"
       << rho_.cols();
    throw Error(ErrorKind::Shape, os.str());
  }
  const double herm = hermiticity_defect(rho_);
  if (herm > kHermitianTol) {
    throw Error(ErrorKind::InvalidState, "joint state not Hermitian, defect " + std::to_string(herm));
  }
}

FockOperator annihilator(Index dim) {
  require_dim(dim);
  CMatrix a = CMatrix::Zero(dim, dim);
  for (Index n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return FockOperator(std::move(a));
}

FockOperator identity(Index dim) {
  require_dim(dim);
  return FockOperator(CMatrix::Identity(dim, dim));
}

FockOperator number_operator(Index dim) {
  require_dim(dim);
  CMatrix n = CMatrix::Zero(dim, dim);
  for (Index k = 0; k < dim; ++k) n(k, k) = static_cast<double>(k);
  return FockOperator(std::move(n));
}

FockOperator diag_fn(const std::function<double(double)>& f, int shift, Index dim) {
  require_dim(dim);
  if (shift < 0) {
    // n + shift must stay >= 0 for n = 0.
    throw Error(ErrorKind::Domain, "diag_fn shift " + std::to_string(shift) + " makes n + shift negative");
  }
  CMatrix m = CMatrix::Zero(dim, dim);
  for (Index n = 0; n < dim; ++n) m(n, n) = f(std::sqrt(static_cast<double>(n + shift)));
  return FockOperator(std::move(m));
}

FockOperator diag_fn_of(const std::function<double(double)>& f, const FockOperator& diagonal) {
  const CMatrix& d = diagonal.matrix();
  const Index dim = diagonal.dim();
  CMatrix off = d;
  off.diagonal().setZero();
  if (off.cwiseAbs().maxCoeff() > 0.0) throw Error(ErrorKind::Domain, "diag_fn_of requires a diagonal operator");
  CMatrix m = CMatrix::Zero(dim, dim);
  for (Index n = 0; n < dim; ++n) {
    const Complex lambda = d(n, n);
    if (lambda.imag() != 0.0 || lambda.real() < 0.0) {
      throw Error(ErrorKind::Domain, "diag_fn_of requires a nonnegative real diagonal");
    }
    m(n, n) = f(std::sqrt(lambda.real()));
  }
  return FockOperator(std::move(m));
}

std::function<double(double)> sin_over_x(double scale) {
  return [scale](double x) {
    if (std::abs(x) < 1e-8) {
      // sin(sx)/x = s (1 - (sx)^2/6 + ...)
      const double sx = scale * x;
      return scale * (1.0 - sx * sx / 6.0);
    }
    return std::sin(scale * x) / x;
  };
}

Index truncation_dim(double nbar) {
  if (nbar < 0.0 || !std::isfinite(nbar)) throw Error(ErrorKind::Domain, "nbar must be finite and nonnegative");
  return static_cast<Index>(std::ceil(nbar + 8.0 * std::sqrt(nbar) + 20.0));
}

FieldState coherent_state(double nbar, double phase, Index dim) {
  require_dim(dim);
  if (nbar < 0.0 || !std::isfinite(nbar)) throw Error(ErrorKind::Domain, "nbar must be finite and nonnegative");
  CVector psi = CVector::Zero(dim);
  if (nbar == 0.0) {
    psi(0) = 1.0;
    return FieldState::from_amplitudes(std::move(psi), 0.0);
  }
  const double log_r = 0.5 * std::log(nbar);
  double kept = 0.0;
  for (Index n = 0; n < dim; ++n) {
    const double dn = static_cast<double>(n);
    const double log_mag = dn * log_r - 0.5 * nbar - 0.5 * std::lgamma(dn + 1.0);
    const double mag = std::exp(log_mag);
    psi(n) = std::polar(mag, dn * phase);
    kept += mag * mag;
  }
  const double deficit = 1.0 - kept;
  if (deficit > kTruncationTol) {
    std::ostringstream os;
    os << "dim " << dim << " discards norm " << deficit << " of coherent state nbar=" << nbar << " (need dim >= "
       << truncation_dim(nbar) << ")";
    throw Error(ErrorKind::TruncationTooSmall, os.str());
  }
  psi /= std::sqrt(kept);
  return FieldState::from_amplitudes(std::move(psi), nbar);
}

FieldState coherent_state(double nbar, double phase) { return coherent_state(nbar, phase, truncation_dim(nbar)); }

Complex expectation(const FieldState& state, const FockOperator& op) {
  require_same_dim(state.dim(), op.dim(), "expectation");
  if (const auto& psi = state.amplitudes()) return psi->dot(op.matrix() * *psi);
  return (state.rho().cwiseProduct(op.matrix().transpose())).sum();
}

Complex expectation_product(const FieldState& state, const FockOperator& x, const FockOperator& y) {
  require_same_dim(state.dim(), x.dim(), "expectation");
  require_same_dim(state.dim(), y.dim(), "expectation");
  if (const auto& psi = state.amplitudes()) {
    // <psi| x y^dag |psi> = (x^dag psi)^dag (y^dag psi)
    const CVector xp = x.matrix().adjoint() * *psi;
    const CVector yp = y.matrix().adjoint() * *psi;
    return xp.dot(yp);
  }
  // tr(rho x y^dag) = sum_ik (rho x)_ik conj(y_ik)
  const CMatrix rx = state.rho() * x.matrix();
  return (rx.cwiseProduct(y.matrix().conjugate())).sum();
}

CMatrix sandwich(const FieldState& state, const FockOperator& v) {
  require_same_dim(state.dim(), v.dim(), "sandwich");
  if (const auto& psi = state.amplitudes()) {
    const CVector w = v.matrix().adjoint() * *psi;
    return w * w.adjoint();
  }
  return v.matrix().adjoint() * state.rho() * v.matrix();
}

CMatrix partial_trace_qubit(const JointState& js) {
  const Index d = js.field_dim();
  return js.rho().topLeftCorner(d, d) + js.rho().bottomRightCorner(d, d);
}

Qubit partial_trace_field(const JointState& js) {
  const Index d = js.field_dim();
  const CMatrix& r = js.rho();
  Qubit q;
  q(0, 0) = r.block(0, 0, d, d).trace();
  q(0, 1) = r.block(0, d, d, d).trace();
  q(1, 0) = r.block(d, 0, d, d).trace();
  q(1, 1) = r.block(d, d, d, d).trace();
  return q;
}

double purity(const CMatrix& rho) {
  require_square(rho, "purity input");
  const Complex p = (rho.cwiseProduct(rho.transpose())).sum();
  if (std::abs(p.imag()) > kHermitianTol) {
    throw Error(ErrorKind::NonHermitianInput, "tr(rho^2) has imaginary part " + std::to_string(p.imag()));
  }
  return p.real();
}

double hermiticity_defect(const CMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::Shape, "hermiticity check needs a square matrix");
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace purity
