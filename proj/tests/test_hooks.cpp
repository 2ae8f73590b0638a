#include <vector>

#include "doctest.h"
#include "qschur/hooks.hpp"
#include "qschur/partition.hpp"
#include "qschur/symfunc.hpp"

using namespace qschur;

TEST_CASE("ordinary hooks") {
  HookData h = hooks_ordinary(Partition({2, 1}));
  CHECK(h.hooks.at({1, 1}) == 3);
  CHECK(h.hooks.at({1, 2}) == 1);
  CHECK(h.hooks.at({2, 1}) == 1);
  CHECK(h.bar == Rat(1, 3));
  CHECK(h.degree == 2);

  CHECK(hooks_ordinary(Partition({1})).degree == 1);
  CHECK(hooks_ordinary(Partition({6})).degree == 1);
  CHECK(hooks_ordinary(Partition()).degree == 1);
}

TEST_CASE("shifted hooks via the double diagram") {
  HookData h = hooks_shifted(StrictPartition({2, 1}));
  CHECK(h.bar == Rat(1, 6));
  CHECK(h.degree == 1);

  CHECK(hooks_shifted(StrictPartition({1})).degree == 1);

  HookData h31 = hooks_shifted(StrictPartition({3, 1}));
  CHECK(h31.bar == Rat(1, 12));
  CHECK(h31.degree == 2);

  HookData h321 = hooks_shifted(StrictPartition({3, 2, 1}));
  CHECK(h321.bar == Rat(1, 360));
  CHECK(h321.degree == 2);
}

TEST_CASE("parts formulas") {
  CHECK(fbar_parts(Partition({2, 1}), 2) == Rat(1, 3));
  CHECK(fbar_parts(Partition({1}), 1) == 1);
  CHECK(fbar_parts(Partition({2, 1}), 3) == fbar_parts(Partition({2, 1}), 2));
  for (long w = 1; w <= 8; ++w)
    for (const auto& mu : partitions_of(w))
      for (int pad = 0; pad <= 2; ++pad)
        CHECK(fbar_parts(mu, mu.length() + pad) == hooks_ordinary(mu).bar);

  CHECK(gbar_parts(StrictPartition({2, 1})) == Rat(1, 6));
  CHECK(gbar_parts(StrictPartition({4})) == Rat(1, 24));
  CHECK(gbar_parts(StrictPartition({3, 2, 1})) == Rat(1, 360));
  for (long w = 1; w <= 10; ++w)
    for (const auto& lam : strict_partitions_of(w))
      CHECK(gbar_parts(lam) == hooks_shifted(lam).bar);
}

TEST_CASE("tableau counts equal hook degrees") {
  CHECK(count_syt(Partition({2, 1})) == 2);
  CHECK(count_syt(Partition({1})) == 1);
  CHECK(count_syt(Partition({2, 2})) == 2);
  CHECK(count_shifted_syt(StrictPartition({2, 1})) == 1);
  CHECK(count_shifted_syt(StrictPartition({1})) == 1);
  CHECK(count_shifted_syt(StrictPartition({3, 1})) == 2);
  CHECK(count_shifted_syt(StrictPartition({3, 2, 1})) == 2);

  for (long w = 1; w <= 8; ++w) {
    for (const auto& mu : partitions_of(w))
      CHECK(count_syt(mu) == hooks_ordinary(mu).degree);
    for (const auto& lam : strict_partitions_of(w))
      CHECK(count_shifted_syt(lam) == hooks_shifted(lam).degree);
  }

  CHECK_THROWS_AS(count_syt(Partition({20, 10}), 28), BudgetExceeded);
  CHECK_THROWS_AS(count_shifted_syt(StrictPartition({20, 10}), 28),
                  BudgetExceeded);
}

TEST_CASE("specializations") {
  CHECK(specialize_schur(Partition({2, 1})) == Rat(1, 3));
  CHECK(specialize_schur(Partition()) == 1);

  QExpansion q1;
  q1.degree = 1;
  q1.terms.emplace(StrictPartition({1}), 1);
  CHECK(specialize_q(q1) == 1);

  QExpansion q21;
  q21.degree = 3;
  q21.terms.emplace(StrictPartition({2, 1}), 1);
  CHECK(specialize_q(q21) == Rat(1, 6));

  for (long w = 1; w <= 8; ++w) {
    for (const auto& mu : partitions_of(w))
      CHECK(specialize_schur(mu) == fbar_parts(mu));
    for (const auto& lam : strict_partitions_of(w))
      CHECK(specialize_q(qfun_to_m(lam)) == gbar_parts(lam));
  }

  CHECK_THROWS_AS(specialize_q(schur_to_m(Partition({1, 1}))), NotInQSpan);
}

TEST_CASE("signed gbar") {
  CHECK(gbar_signed({1, 0}) == 1);
  CHECK(gbar_signed({2, 3}) == -gbar_parts(StrictPartition({3, 2})));
  CHECK(gbar_signed({2, 2}) == 0);
  CHECK(gbar_signed({}) == 1);
}

TEST_CASE("hook identity (small range)") {
  CHECK(verify_hook_identity(Partition({1})));
  for (long w = 0; w <= 8; ++w)
    for (const auto& mu : partitions_of(w)) CHECK(verify_hook_identity(mu));
}
