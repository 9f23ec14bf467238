#include <cmath>

#include "purity/entropy.hpp"
#include "support.hpp"

using namespace purity;

namespace {

CMatrix mixed(Index d) { return CMatrix::Identity(d, d) / double(d); }

CMatrix projector(Index d, Index k) {
  CMatrix p = CMatrix::Zero(d, d);
  p(k, k) = 1.0;
  return p;
}

double h2(double p) { return -p * std::log2(p) - (1 - p) * std::log2(1 - p); }

}  // namespace

TEST_CASE("density spectrum clamps roundoff only") {
  CMatrix r = CMatrix::Zero(2, 2);
  r(0, 0) = 1.0 + 5e-11;
  r(1, 1) = -5e-11;
  const auto ev = density_spectrum(r);
  CHECK(*std::min_element(ev.begin(), ev.end()) == 0.0);
  r(0, 0) = 1.001;
  r(1, 1) = -0.001;
  CHECK_ERROR_KIND(density_spectrum(r), ErrorKind::InvalidState);
  CHECK_ERROR_KIND(von_neumann(r), ErrorKind::InvalidState);
}

TEST_CASE("Tsallis entropy") {
  for (double q : {0.3, 2.0, 3.5}) CHECK(std::abs(tsallis(projector(3, 1), q)) < 1e-14);
  CHECK(std::abs(tsallis(mixed(2), 2.0) - 0.5) < 1e-15);
  for (Index d : {2, 3, 5})
    for (double q : {0.5, 1.5, 2.0, 4.0}) {
      const double want = (1 - std::pow(double(d), 1 - q)) / (q - 1);
      CHECK(std::abs(tsallis(mixed(d), q) - want) < 1e-13);
    }
  CHECK_ERROR_KIND(tsallis(mixed(2), 1.0), ErrorKind::Domain);
  CHECK_ERROR_KIND(tsallis(mixed(2), 0.0), ErrorKind::Domain);
  CHECK_ERROR_KIND(tsallis(mixed(2), -1.0), ErrorKind::Domain);

  CHECK(tsallis_from_purity(0.7) == doctest::Approx(0.3));
  CHECK_ERROR_KIND(tsallis_from_purity(0.7, 3.0), ErrorKind::Domain);

  for (int k = 0; k < 10; ++k) {
    const CMatrix r = testing::random_density(4, 1 + k % 4);
    CHECK(std::abs(tsallis(r, 2.0) - (1 - purity::purity(r))) < 1e-12);
    const double s_nats = von_neumann(r) * std::log(2.0);
    CHECK(std::abs(tsallis(r, 1 + 1e-4) - s_nats) < 1e-3);
    CHECK(std::abs(tsallis(r, 1 - 1e-4) - s_nats) < 1e-3);
    CHECK(std::abs(von_neumann_nats(r) - s_nats) < 1e-12);
  }
}

TEST_CASE("alpha entropy") {
  for (double a : {0.1, 0.5, 0.9}) CHECK(std::abs(alpha_entropy(projector(2, 0), a)) < 1e-14);
  CHECK(std::abs(alpha_entropy(mixed(2), 0.5) - 1.0) < 1e-14);
  for (double a : {0.2, 0.5, 0.8}) CHECK(std::abs(alpha_entropy(mixed(4), a) - 2.0) < 1e-13);
  CHECK_ERROR_KIND(alpha_entropy(mixed(2), 0.0), ErrorKind::Domain);
  CHECK_ERROR_KIND(alpha_entropy(mixed(2), 1.0), ErrorKind::Domain);
  CHECK_ERROR_KIND(alpha_entropy(mixed(2), 1.5), ErrorKind::Domain);
}

TEST_CASE("von Neumann entropy") {
  CHECK(std::abs(von_neumann(projector(4, 2))) < 1e-14);
  CHECK(std::abs(von_neumann(mixed(2)) - 1.0) < 1e-14);
  Qubit q;
  q << 0.8, 0, 0, 0.2;  // Bloch length 0.6
  CHECK(std::abs(von_neumann(q) - h2(0.8)) < 1e-14);
  CHECK(std::abs(von_neumann(q) - 0.7219280948873623) < 1e-14);
}

TEST_CASE("linear entropy and mutual information") {
  CHECK(linear_entropy(1.0) == 0.0);
  CHECK(linear_entropy(0.5) == 0.5);
  CHECK(linear_entropy(1.0 + 5e-13) == 0.0);
  CHECK_ERROR_KIND(linear_entropy(1.1), ErrorKind::Domain);
  CHECK_ERROR_KIND(linear_entropy(-0.1), ErrorKind::Domain);

  CHECK(std::abs(mutual_information(0.5, 0.5, 0.0) - 0.75) < 1e-15);
  CHECK(std::abs(mutual_information(0.0, 0.5, 0.5)) < 1e-15);
  const double ga = 0.3, gb = 0.1;
  CHECK(std::abs(mutual_information(ga, gb, ga + gb - ga * gb)) < 1e-15);
}

TEST_CASE("Araki-Lieb slacks") {
  auto eq = [](ArakiLiebSlack s, double l, double r) { return std::abs(s.left - l) < 1e-15 && std::abs(s.right - r) < 1e-15; };
  CHECK(eq(araki_lieb_slack({0, 0, 0}), 0, 0));
  CHECK(eq(araki_lieb_slack({0, 0.5, 0.5}), 0, 0));
  CHECK(eq(araki_lieb_slack({0.5, 0.5, 0}), 0, 1));
  CHECK(araki_lieb_slack({0.5, 0.5, 0}).holds());
  CHECK_FALSE(araki_lieb_slack({0.1, 0.1, 0.5}).holds());
  CHECK(araki_lieb_slack({0.1, 0.1, 0.5}).worst() == doctest::Approx(-0.3));
  CHECK_ERROR_KIND(EntropyTriple({0.1, 1.2, 0.0}).validate(), ErrorKind::Domain);
}

TEST_CASE("non-extensivity") {
  CHECK(std::abs(nonextensivity_defect(0, 0, 0)) < 1e-15);
  CHECK(std::abs(nonextensivity_defect(0.5, 0.5, 0) + 0.75) < 1e-15);

  // product with purities 0.7 and 0.9
  Qubit a;
  const double pa = 0.7, la = std::sqrt(2 * pa - 1);
  a << (1 + la) / 2, 0, 0, (1 - la) / 2;
  Qubit b;
  const double pb = 0.9, lb = std::sqrt(2 * pb - 1);
  b << (1 + lb) / 2, 0, 0, (1 - lb) / 2;
  const EntropyTriple t = bipartite_entropies(kron(a, b), 2, 2);
  CHECK(std::abs(t.g_a - 0.3) < 1e-14);
  CHECK(std::abs(t.g_b - 0.1) < 1e-14);
  CHECK(std::abs(nonextensivity_defect(t.g_a, t.g_b, t.g_ab)) < 1e-12);

  for (int k = 0; k < 10; ++k) {
    const Index da = 2 + k % 2, db = 2 + k % 3;
    const EntropyTriple p =
        bipartite_entropies(kron(testing::random_density(da, 2), testing::random_density(db, 1 + k % db)), da, db);
    CHECK(std::abs(nonextensivity_defect(p.g_a, p.g_b, p.g_ab)) < 1e-10);
  }
  CHECK_ERROR_KIND(bipartite_entropies(mixed(6), 2, 2), ErrorKind::Shape);
}

TEST_CASE("purity exchange bounds") {
  // full swap: both bounds tight, 2 - 1 - 1/2 - 1/2 = 0
  auto b = purity_exchange_bounds(1.0, 0.5);
  CHECK(std::abs(b.left) < 1e-15);
  CHECK(std::abs(b.right) < 1e-15);
  CHECK(b.pass);
  b = purity_exchange_bounds(0.5, 1.0);
  CHECK(std::abs(b.left) < 1e-15);
  CHECK(std::abs(b.right) < 1e-15);
  b = purity_exchange_bounds(0.75, 0.75);
  CHECK(std::abs(b.left - 0.5) < 1e-15);
  CHECK(std::abs(b.right) < 1e-15);
  CHECK(b.pass);
  CHECK_FALSE(purity_exchange_bounds(1.0, 0.4).pass);
  CHECK_FALSE(purity_exchange_bounds(0.9, 0.9).pass);
}

TEST_CASE("random bipartite audit") {
  const RandomAuditReport r = audit_random_states(300, 7);
  CHECK(r.samples == 300);
  CHECK(r.violations == 0);
  CHECK(r.worst_slack >= -1e-9);
  const RandomAuditReport again = audit_random_states(300, 7);
  CHECK(again.worst_slack == r.worst_slack);
  CHECK(again.worst_sample == r.worst_sample);
}
