#pragma once

// Entropies and entanglement monotones on density matrices, and the
// linear-entropy Araki-Lieb-type inequality auditor.

#include <cstdint>
#include <vector>

#include "purity/fock.hpp"

namespace purity {

inline constexpr double kEigenClampTol = 1e-10;
inline constexpr double kInequalityTol = 1e-9;

/// Eigenvalues of a density matrix; values in [-1e-10, 0) are clamped to 0,
/// lower ones throw InvalidState.
std::vector<double> density_spectrum(const CMatrix& rho);

/// (1 - tr rho^q) / (q - 1); q > 0, q != 1.
double tsallis(const CMatrix& rho, double q);
/// T_2 from a purity.
double tsallis_from_purity(double purity, double q = 2.0);

/// log2(tr rho^alpha) / (1 - alpha) in bits, alpha in (0, 1).
double alpha_entropy(const CMatrix& rho, double alpha);

/// -tr rho log2 rho in bits.
double von_neumann(const CMatrix& rho);
/// Same in nats.
double von_neumann_nats(const CMatrix& rho);

/// 1 - purity, clamped into [0, 1].
double linear_entropy(double purity);

/// G_Q + G_M - G_Q G_M - G
double mutual_information(double g_q, double g_m, double g_joint);

struct EntropyTriple {
  double g_a = 0.0;
  double g_b = 0.0;
  double g_ab = 0.0;

  void validate() const;
};

struct ArakiLiebSlack {
  double left = 0.0;   // g_ab - |g_a - g_b|
  double right = 0.0;  // g_a + g_b - g_ab

  double worst() const { return left < right ? left : right; }
  bool holds(double tolerance = kInequalityTol) const { return left >= -tolerance && right >= -tolerance; }
};

ArakiLiebSlack araki_lieb_slack(const EntropyTriple& t);

/// g_ab - (g_a + g_b - g_a g_b); zero for product states.
double nonextensivity_defect(double g_a, double g_b, double g_ab);

struct PurityExchangeBounds {
  double left = 0.0;   // 1/2 - |P_M - P_Q|
  double right = 0.0;  // 2 - P_M - P_Q - 1/2
  bool pass = false;
};

/// |P_M - P_Q| <= 1/2 <= 2 - P_M - P_Q, the s = 0 specialisation.
PurityExchangeBounds purity_exchange_bounds(double p_q, double p_m);

/// Linear-entropy triple of a bipartite state on C^{da} (x) C^{db}, A-major.
EntropyTriple bipartite_entropies(const CMatrix& rho, Index dim_a, Index dim_b);

struct RandomAuditReport {
  std::size_t samples = 0;
  std::size_t violations = 0;
  double worst_slack = 0.0;
  Index worst_dim_b = 0;
  std::size_t worst_sample = 0;
};

/// Random mixed states on C^2 (x) C^k, k cycling through {2, 3, 4}, drawn as
/// normalised G G^dag with G a complex Ginibre matrix of random rank.
RandomAuditReport audit_random_states(std::size_t count, std::uint64_t seed, double tolerance = kInequalityTol);

}  // namespace purity
