#pragma once

#include <map>
#include <vector>

#include "qschur/partition.hpp"
#include "qschur/symfunc.hpp"

namespace qschur {

enum class MYVariant { AB, CD };

/// One subset-removal term of the quadratic Q-function expansion: `removed`
/// entries are taken from the A (resp. C) positions of the interleaving,
/// `remaining` is what is left, in order.
struct MYTerm {
  IntSequence removed;
  IntSequence remaining;
  int k = 0;  // number of removed entries
};

// Alternating interleaving (x1, y1, x2, y2, ...); lengths must match.
IntSequence interleave(const IntSequence& x, const IntSequence& y);

// All 2^n removal choices, k = 0..n, removal indices increasing.
std::vector<MYTerm> my_terms(const Partition& mu, MYVariant variant);

// The quadratic expansion sum_T sign(T) Q_<removed> Q_<remaining> as an exact
// Q-expansion; equals 2^n eta(s_mu) where n is the Frobenius rank of mu.
QExpansion my_expansion(const Partition& mu, MYVariant variant);

// Same sum before the final Q-basis expansion (monomial basis).
SymFunc my_symfunc(const Partition& mu, MYVariant variant);

// AB and CD variants agree.
bool verify_variant_agreement(const Partition& mu);

// my_expansion(mu, AB) == 2^n * expand_in_Q(eta_schur(mu)).
bool verify_expansion_identity(const Partition& mu);

// Coefficients of my_expansion(mu, AB) divided by 2^n; every division must be
// exact. These are the Q-coefficients of eta(s_mu).
std::map<StrictPartition, Int, StrictPartitionOrder> g_from_my(
    const Partition& mu);

// 2^n g_{lambda,mu} equals the signed e-coefficient sums over surviving
// removals, for both variants.
bool verify_coefficient_relation(const Partition& mu,
                                 const StrictPartition& lambda);

// The signed e-coefficient sum of one variant, for all lambda at once.
// e-values come from the Q-product expansions.
std::map<StrictPartition, Int, StrictPartitionOrder> signed_e_sum(
    const Partition& mu, MYVariant variant);

}  // namespace qschur
