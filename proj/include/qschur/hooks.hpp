#pragma once

#include <map>
#include <utility>

#include "qschur/partition.hpp"
#include "qschur/symfunc.hpp"

namespace qschur {

/// Hook lengths of a diagram together with the reciprocal product `bar`
/// (fbar for ordinary shapes, gbar for shifted ones) and the tableau-count
/// degree |shape|! * bar.
struct HookData {
  bool shifted = false;
  std::vector<int> shape;
  std::map<std::pair<int, int>, long> hooks;  // (row, col) 1-based
  Rat bar;
  Int degree;
};

HookData hooks_ordinary(const Partition& mu);

// Hooks of the shifted diagram S(lambda), read inside the double diagram
// whose Frobenius coordinates are (lambda | lambda - 1).
HookData hooks_shifted(const StrictPartition& lambda);

// fbar via the parts formula with zero-padding to n >= l(mu); the value does
// not depend on n.
Rat fbar_parts(const Partition& mu, int n = -1);

// gbar = (prod 1/lambda_i!) * prod_{i<j} (lambda_i - lambda_j)/(lambda_i + lambda_j).
Rat gbar_parts(const StrictPartition& lambda);

// Brute-force standard / shifted-standard tableau counts (corner-removal
// recursion). Shapes above `budget` cells are refused.
Int count_syt(const Partition& mu, long budget = 28);
Int count_shifted_syt(const StrictPartition& lambda, long budget = 28);

// Evaluation of s_mu under e_i := 1/i!, via the dual Jacobi-Trudi
// determinant over elementary symmetric products. Equals fbar.
Rat specialize_schur(const Partition& mu);

// Evaluation under q_i := 1/i!, through the expansion over products of
// one-row Q-functions. Q_lambda evaluates to gbar.
Rat specialize_q(const SymFunc& f);
Rat specialize_q(const QExpansion& x);

// sgn(w_K) * gbar^{<K>}; zero when K straightens to nothing.
Rat gbar_signed(const IntSequence& k);

// 2^n fbar = the AB sum of gbar products over surviving removals = the CD sum.
bool verify_hook_identity(const Partition& mu);

}  // namespace qschur
