#include "doctest.h"
#include "qschur/partition.hpp"
#include "qschur/schubert.hpp"
#include "qschur/tableaux.hpp"

using namespace qschur;

TEST_CASE("restriction to the Lagrangian Grassmannian") {
  SchubertExpansionLG r = restrict_to_lagrangian(Partition({1}), 1);
  REQUIRE(r.terms.size() == 1);
  CHECK(r.coeff(StrictPartition({1})) == 1);

  // Truncation: g on (3) is 1 but (3) does not fit staircase(2).
  SchubertExpansionLG t = restrict_to_lagrangian(Partition({2, 1}), 2);
  REQUIRE(t.terms.size() == 1);
  CHECK(t.coeff(StrictPartition({2, 1})) == 1);
  SchubertExpansionLG u = restrict_to_lagrangian(Partition({2, 1}), 3);
  CHECK(u.coeff(StrictPartition({2, 1})) == 1);
  CHECK(u.coeff(StrictPartition({3})) == 1);

  CHECK_THROWS_AS(restrict_to_lagrangian(Partition({3}), 2), InvalidInput);
}

TEST_CASE("restriction coefficients are stable in n") {
  for (const auto& mu : {Partition({2, 1}), Partition({3, 2}), Partition({4})}) {
    int big = static_cast<int>(mu.weight());
    SchubertExpansionLG full = restrict_to_lagrangian(mu, big);
    for (int n = 1; n <= big; ++n) {
      if (!fits_box(mu, n)) continue;
      SchubertExpansionLG small = restrict_to_lagrangian(mu, n);
      for (const auto& [lam, c] : small.terms) CHECK(c == full.coeff(lam));
      for (const auto& [lam, c] : full.terms)
        if (fits_staircase(lam, n)) CHECK(small.coeff(lam) == c);
    }
  }
}

TEST_CASE("products of Lagrangian Schubert classes") {
  SchubertExpansionLG p = lg_product(StrictPartition({2}), StrictPartition({1}), 3);
  CHECK(p.coeff(StrictPartition({2, 1})) == 1);
  CHECK(p.coeff(StrictPartition({3})) == 2);
  CHECK(p.terms.size() == 2);

  SchubertExpansionLG trunc =
      lg_product(StrictPartition({2}), StrictPartition({1}), 2);
  CHECK(trunc.terms.size() == 1);
  CHECK(trunc.coeff(StrictPartition({2, 1})) == 1);

  SchubertExpansionLG unit =
      lg_product(StrictPartition(), StrictPartition({3, 1}), 4);
  CHECK(unit.terms.size() == 1);
  CHECK(unit.coeff(StrictPartition({3, 1})) == 1);

  CHECK_THROWS_AS(lg_product(StrictPartition({3}), StrictPartition({1}), 2),
                  InvalidInput);
}

namespace {

SchubertExpansionLG basis_class(const StrictPartition& lam, int n) {
  SchubertExpansionLG e;
  e.n = n;
  e.terms.emplace(lam, 1);
  return e;
}

}  // namespace

TEST_CASE("Poincare pairing") {
  for (int n = 1; n <= 3; ++n) {
    auto all = strict_partitions_in_staircase(n);
    long total = n * (n + 1) / 2;
    for (const auto& lam : all)
      for (const auto& nu : all) {
        if (lam.weight() + nu.weight() != total) continue;
        Int expected = (nu == complement_strict(lam, n)) ? 1 : 0;
        CHECK(pairing_lg(basis_class(lam, n), basis_class(nu, n)) == expected);
        // Cross-check: the pairing is the staircase coefficient of the
        // product.
        CHECK(lg_product(lam, nu, n).coeff(staircase(n)) == expected);
      }
  }
  // degree mismatch
  CHECK(pairing_lg(basis_class(StrictPartition({1}), 2),
                   basis_class(StrictPartition({1}), 2)) == 0);
  CHECK(pairing_lg(basis_class(StrictPartition(), 3),
                   basis_class(staircase(3), 3)) == 1);
}

TEST_CASE("pushforward to the Grassmannian") {
  SchubertExpansionG p = pushforward(StrictPartition(), 2);
  REQUIRE(p.terms.size() == 1);
  CHECK(p.coeff(Partition({1})) == 1);

  for (int n = 2; n <= 3; ++n) {
    SchubertExpansionG top = pushforward(staircase(n), n);
    REQUIRE(top.terms.size() == 1);
    CHECK(top.coeff(Partition(std::vector<int>(n, n))) == 1);
  }

  SchubertExpansionG q = pushforward(StrictPartition({1}), 2);
  CHECK(q.coeff(Partition({2})) ==
        g_coeff(StrictPartition({2}), Partition({2})));
  CHECK(q.coeff(Partition({1, 1})) ==
        g_coeff(StrictPartition({2}), Partition({1, 1})));

  CHECK_THROWS_AS(pushforward(StrictPartition({3}), 2), InvalidInput);
}

TEST_CASE("pushforward duality identity at n = 2") {
  int n = 2;
  for (const auto& lam : strict_partitions_in_staircase(n)) {
    long w = lam.weight() + n * (n - 1) / 2;
    for (const auto& mu : partitions_in_box(w, n))
      CHECK(verify_pushforward_duality(lam, mu, n));
  }
}

TEST_CASE("staircase structure constants are self-dual (small n)") {
  for (int n = 1; n <= 3; ++n) {
    StrictPartition rho = staircase(n);
    long total = n * (n + 1) / 2;
    for (const auto& lam : strict_partitions_in_staircase(n)) {
      StrictPartition dual = complement_strict(lam, n);
      for (const auto& nu : strict_partitions_of(total - lam.weight())) {
        Int expected = (nu == dual) ? 1 : 0;
        CHECK(e_coeff(lam, nu, rho) == expected);
      }
    }
  }
}
