#include "purity/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "purity/error.hpp"

namespace purity {

namespace {

void require_q(double q) {
  if (!(q > 0.0) || q == 1.0) throw Error(ErrorKind::Domain, "Tsallis index q must satisfy q > 0, q != 1");
}

void require_unit(double x, const char* what) {
  if (!(x >= -1e-12 && x <= 1.0 + 1e-12)) {
    throw Error(ErrorKind::Domain, std::string(what) + " must lie in [0, 1], got " + std::to_string(x));
  }
}

double trace_power(const std::vector<double>& spectrum, double power) {
  double sum = 0.0;
  for (double p : spectrum)
    if (p > 0.0) sum += std::pow(p, power);
  return sum;
}

}  // namespace

std::vector<double> density_spectrum(const CMatrix& rho) {
  if (rho.rows() != rho.cols() || rho.rows() == 0) throw Error(ErrorKind::Shape, "density matrix must be square");
  if (hermiticity_defect(rho) > kHermitianTol) throw Error(ErrorKind::NonHermitianInput, "density matrix not Hermitian");
  const CMatrix sym = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(sym, Eigen::EigenvaluesOnly);
  std::vector<double> out(eig.eigenvalues().data(), eig.eigenvalues().data() + eig.eigenvalues().size());
  for (double& p : out) {
    if (p < -kEigenClampTol) throw Error(ErrorKind::InvalidState, "negative eigenvalue " + std::to_string(p));
    if (p < 0.0) p = 0.0;
  }
  return out;
}

double tsallis(const CMatrix& rho, double q) {
  require_q(q);
  return (1.0 - trace_power(density_spectrum(rho), q)) / (q - 1.0);
}

double tsallis_from_purity(double purity, double q) {
  if (q != 2.0) throw Error(ErrorKind::Domain, "a purity determines T_q only for q = 2");
  return 1.0 - purity;
}

double alpha_entropy(const CMatrix& rho, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorKind::Domain, "alpha entropy needs alpha in (0, 1)");
  return std::log2(trace_power(density_spectrum(rho), alpha)) / (1.0 - alpha);
}

double von_neumann_nats(const CMatrix& rho) {
  double s = 0.0;
  for (double p : density_spectrum(rho))
    if (p > 0.0) s -= p * std::log(p);
  return s;
}

double von_neumann(const CMatrix& rho) { return von_neumann_nats(rho) / std::log(2.0); }

double linear_entropy(double purity) {
  if (!(purity >= 0.0 && purity <= 1.0 + 1e-12)) {
    throw Error(ErrorKind::Domain, "purity must lie in [0, 1], got " + std::to_string(purity));
  }
  return std::clamp(1.0 - purity, 0.0, 1.0);
}

double mutual_information(double g_q, double g_m, double g_joint) {
  require_unit(g_q, "g_q");
  require_unit(g_m, "g_m");
  require_unit(g_joint, "g_joint");
  return g_q + g_m - g_q * g_m - g_joint;
}

void EntropyTriple::validate() const {
  require_unit(g_a, "g_a");
  require_unit(g_b, "g_b");
  require_unit(g_ab, "g_ab");
}

ArakiLiebSlack araki_lieb_slack(const EntropyTriple& t) {
  return {t.g_ab - std::abs(t.g_a - t.g_b), t.g_a + t.g_b - t.g_ab};
}

double nonextensivity_defect(double g_a, double g_b, double g_ab) { return g_ab - (g_a + g_b - g_a * g_b); }

PurityExchangeBounds purity_exchange_bounds(double p_q, double p_m) {
  PurityExchangeBounds b;
  b.left = 0.5 - std::abs(p_m - p_q);
  b.right = (2.0 - p_m - p_q) - 0.5;
  b.pass = b.left >= -kInequalityTol && b.right >= -kInequalityTol;
  return b;
}

EntropyTriple bipartite_entropies(const CMatrix& rho, Index dim_a, Index dim_b) {
  if (rho.rows() != dim_a * dim_b || rho.cols() != dim_a * dim_b) {
    throw Error(ErrorKind::Shape, "bipartite state dimension does not match dim_a * dim_b");
  }
  CMatrix ra = CMatrix::Zero(dim_a, dim_a);
  CMatrix rb = CMatrix::Zero(dim_b, dim_b);
  for (Index i = 0; i < dim_a; ++i)
    for (Index j = 0; j < dim_a; ++j) ra(i, j) = rho.block(i * dim_b, j * dim_b, dim_b, dim_b).trace();
  for (Index i = 0; i < dim_a; ++i) rb += rho.block(i * dim_b, i * dim_b, dim_b, dim_b);
  return {linear_entropy(purity(ra)), linear_entropy(purity(rb)), linear_entropy(purity(rho))};
}

RandomAuditReport audit_random_states(std::size_t count, std::uint64_t seed, double tolerance) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  RandomAuditReport report;
  report.samples = count;
  report.worst_slack = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < count; ++k) {
    const Index dim_b = 2 + static_cast<Index>(k % 3);
    const Index n = 2 * dim_b;
    const Index rank = 1 + static_cast<Index>(rng() % static_cast<std::uint64_t>(n));
    CMatrix g(n, rank);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < rank; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
    CMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    rho = 0.5 * (rho + rho.adjoint());
    const ArakiLiebSlack slack = araki_lieb_slack(bipartite_entropies(rho, 2, dim_b));
    if (!slack.holds(tolerance)) ++report.violations;
    if (slack.worst() < report.worst_slack) {
      report.worst_slack = slack.worst();
      report.worst_dim_b = dim_b;
      report.worst_sample = k;
    }
  }
  if (count == 0) report.worst_slack = 0.0;
  return report;
}

}  // namespace purity
