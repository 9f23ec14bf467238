#pragma once

#include <optional>
#include <random>

#include <doctest.h>

#include "purity/error.hpp"
#include "purity/fock.hpp"

namespace testing {

// Kind of the purity::Error thrown by f, or nullopt when nothing is thrown.
template <class F>
std::optional<purity::ErrorKind> thrown_kind(F&& f) {
  try {
    f();
  } catch (const purity::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

#define CHECK_ERROR_KIND(expr, k) CHECK(::testing::thrown_kind([&] { (void)(expr); }) == std::optional(k))

inline double max_abs(const purity::CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

// Fixed-seed generator shared by the property tests.
inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed5eedULL);
  return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

// Random density matrix G G^dag / tr with Gaussian G.
inline purity::CMatrix random_density(purity::Index d, purity::Index rank) {
  std::normal_distribution<double> n(0.0, 1.0);
  purity::CMatrix g(d, rank);
  for (purity::Index i = 0; i < d; ++i)
    for (purity::Index j = 0; j < rank; ++j) g(i, j) = {n(rng()), n(rng())};
  purity::CMatrix rho = g * g.adjoint();
  rho /= rho.trace();
  return 0.5 * (rho + rho.adjoint());
}

}  // namespace testing
