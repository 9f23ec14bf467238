#pragma once

// Truncated single-mode Fock space: ladder operators, diagonal operator
// functions, coherent states and partial traces over qubit (x) field.
//
// Composite basis ordering is qubit-major: index = q * d + n, with q = 0 the
// excited level |e> and q = 1 the ground level |g>.

#include <complex>
#include <functional>
#include <optional>

#include <Eigen/Dense>

namespace purity {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Qubit = Eigen::Matrix2cd;
using Index = Eigen::Index;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kTruncationTol = 1e-12;

/// Dense d x d operator on the truncated Fock space.
class FockOperator {
 public:
  explicit FockOperator(CMatrix entries);

  Index dim() const { return entries_.rows(); }
  const CMatrix& matrix() const { return entries_; }

  FockOperator adjoint() const { return FockOperator(entries_.adjoint()); }

  friend FockOperator operator*(const FockOperator& a, const FockOperator& b);
  friend FockOperator operator+(const FockOperator& a, const FockOperator& b);
  friend FockOperator operator-(const FockOperator& a, const FockOperator& b);
  friend FockOperator operator*(Complex c, const FockOperator& a);
  friend FockOperator operator-(const FockOperator& a);

 private:
  CMatrix entries_;
};

/// Density matrix of the cavity mode.
///
/// States built from a state vector remember it, so expectations and
/// sandwiches V^dag rho V can be evaluated as matrix-vector products.
class FieldState {
 public:
  /// Validates Hermiticity, unit trace and positivity.
  static FieldState from_density(CMatrix rho, double nbar = 0.0);
  /// Validates unit norm; rho = |psi><psi|.
  static FieldState from_amplitudes(CVector psi, double nbar = 0.0);

  Index dim() const { return rho_.rows(); }
  const CMatrix& rho() const { return rho_; }
  double nbar() const { return nbar_; }
  const std::optional<CVector>& amplitudes() const { return amplitudes_; }
  bool is_pure_vector() const { return amplitudes_.has_value(); }

 private:
  FieldState(CMatrix rho, double nbar, std::optional<CVector> psi);

  CMatrix rho_;
  double nbar_;
  std::optional<CVector> amplitudes_;
};

/// Density matrix on qubit (x) field, dimension 2d, qubit-major ordering.
class JointState {
 public:
  /// Checks shape and Hermiticity; trace is not constrained.
  JointState(CMatrix rho, Index field_dim);

  Index field_dim() const { return field_dim_; }
  const CMatrix& rho() const { return rho_; }
  Complex trace() const { return rho_.trace(); }

 private:
  CMatrix rho_;
  Index field_dim_;
};

FockOperator annihilator(Index dim);
FockOperator identity(Index dim);
/// a^dag a
FockOperator number_operator(Index dim);

/// diag(f(sqrt(n + shift))) for n in [0, dim).
FockOperator diag_fn(const std::function<double(double)>& f, int shift, Index dim);

/// Applies f(sqrt(lambda)) to the diagonal of a diagonal number-like operator
/// (e.g. the exact truncated product a a^dag). Off-diagonal entries must vanish.
FockOperator diag_fn_of(const std::function<double(double)>& f, const FockOperator& diagonal);

/// x -> sin(scale * x) / x with the x -> 0 limit (= scale).
std::function<double(double)> sin_over_x(double scale);

/// ceil(nbar + 8 sqrt(nbar) + 20).
Index truncation_dim(double nbar);

/// |alpha><alpha| with alpha = sqrt(nbar) e^{i phase}, renormalised after
/// truncation. Throws TruncationTooSmall if the discarded norm exceeds 1e-12.
FieldState coherent_state(double nbar, double phase, Index dim);
FieldState coherent_state(double nbar, double phase = 0.0);

/// tr(rho op)
Complex expectation(const FieldState& state, const FockOperator& op);
/// tr(rho x y^dag), i.e. <x y^dag>_0.
Complex expectation_product(const FieldState& state, const FockOperator& x, const FockOperator& y);
/// v^dag rho v
CMatrix sandwich(const FieldState& state, const FockOperator& v);

/// Reduced field density matrix tr_Q rho.
CMatrix partial_trace_qubit(const JointState& js);
/// Reduced qubit density matrix tr_M rho.
Qubit partial_trace_field(const JointState& js);

/// Re tr(rho^2); throws NonHermitianInput if the imaginary residue exceeds 1e-12.
double purity(const CMatrix& rho);

/// max |rho - rho^dag| entrywise.
double hermiticity_defect(const CMatrix& m);

CMatrix kron(const CMatrix& a, const CMatrix& b);

}  // namespace purity
