#pragma once

#include <map>
#include <ostream>

#include "qschur/partition.hpp"
#include "qschur/symfunc.hpp"

namespace qschur {

/// Integer combination of Schubert classes sigma_mu of the Grassmannian whose
/// indexing box is (n^n). Homogeneous: all indices share one weight.
struct SchubertExpansionG {
  int n = 0;
  std::map<Partition, Int, PartitionOrder> terms;
  Int coeff(const Partition& mu) const {
    auto it = terms.find(mu);
    return it == terms.end() ? Int(0) : it->second;
  }
};

/// Integer combination of classes sigma'_lambda of the Lagrangian
/// Grassmannian; indices are strict partitions inside the staircase.
struct SchubertExpansionLG {
  int n = 0;
  std::map<StrictPartition, Int, StrictPartitionOrder> terms;
  Int coeff(const StrictPartition& lam) const {
    auto it = terms.find(lam);
    return it == terms.end() ? Int(0) : it->second;
  }
};

// Q-expansion coefficients of eta(s_mu) as exact integers: the full row of
// restriction coefficients for mu, independent of any box. Cached.
std::map<StrictPartition, Int, StrictPartitionOrder> restriction_row(
    const Partition& mu);

// i^*(sigma_mu): the restriction row truncated to the staircase of n.
// Requires mu inside (n^n).
SchubertExpansionLG restrict_to_lagrangian(const Partition& mu, int n);

// sigma'_mu * sigma'_nu with structure constants from the Q-product
// expansion, truncated to the staircase.
SchubertExpansionLG lg_product(const StrictPartition& mu,
                               const StrictPartition& nu, int n);

// Poincare pairing on the Lagrangian side: sum_lambda a_lambda b_{lambda^v}.
// Returns 0 on a degree mismatch (optionally noted on `diag`).
Int pairing_lg(const SchubertExpansionLG& a, const SchubertExpansionLG& b,
               std::ostream* diag = nullptr);

// i_*(sigma'_lambda) = sum_mu g_{lambda^v, mu^*} sigma_mu over mu in (n^n)
// of weight |lambda| + n(n-1)/2.
SchubertExpansionG pushforward(const StrictPartition& lambda, int n);

// sum_nu e(lambda, nu, staircase) g(nu, mu^*) == g(lambda^v, mu^*), the
// coefficient-level identity behind the pushforward formula.
bool verify_pushforward_duality(const StrictPartition& lambda,
                                const Partition& mu, int n);

}  // namespace qschur
