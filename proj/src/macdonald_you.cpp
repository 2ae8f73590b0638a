#include "qschur/macdonald_you.hpp"

#include <algorithm>

namespace qschur {

IntSequence interleave(const IntSequence& x, const IntSequence& y) {
  if (x.size() != y.size())
    throw InvalidInput("interleave requires equal-length sequences");
  IntSequence out;
  out.reserve(2 * x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    out.push_back(x[i]);
    out.push_back(y[i]);
  }
  return out;
}

std::vector<MYTerm> my_terms(const Partition& mu, MYVariant variant) {
  FrobeniusForm f = frobenius(mu);
  auto [x, y] = (variant == MYVariant::AB) ? ab_sequences(f) : cd_sequences(f);
  IntSequence whole = interleave(x, y);
  int n = f.rank();
  std::vector<MYTerm> terms;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    MYTerm t;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        t.removed.push_back(whole[2 * i]);
        ++t.k;
      }
    }
    for (int pos = 0; pos < 2 * n; ++pos) {
      bool removed = (pos % 2 == 0) && (mask & (1u << (pos / 2)));
      if (!removed) t.remaining.push_back(whole[pos]);
    }
    terms.push_back(std::move(t));
  }
  // Enumerate k = 0..n with removal indices increasing within each k.
  std::stable_sort(terms.begin(), terms.end(),
                   [](const MYTerm& a, const MYTerm& b) { return a.k < b.k; });
  return terms;
}

SymFunc my_symfunc(const Partition& mu, MYVariant variant) {
  SymFunc total(static_cast<int>(mu.weight()));
  for (const MYTerm& t : my_terms(mu, variant)) {
    auto removed = straighten(t.removed);
    auto remaining = straighten(t.remaining);
    if (!removed || !remaining) continue;
    SymFunc prod = m_mul(qfun_to_m(removed->second), qfun_to_m(remaining->second));
    prod *= Rat(removed->first * remaining->first);
    total += prod;
  }
  return total;
}

QExpansion my_expansion(const Partition& mu, MYVariant variant) {
  return expand_in_Q(my_symfunc(mu, variant));
}

bool verify_variant_agreement(const Partition& mu) {
  return my_expansion(mu, MYVariant::AB) == my_expansion(mu, MYVariant::CD);
}

bool verify_expansion_identity(const Partition& mu) {
  int n = frobenius(mu).rank();
  QExpansion lhs = my_expansion(mu, MYVariant::AB);
  QExpansion rhs = expand_in_Q(eta_schur(mu));
  for (auto& [lam, c] : rhs.terms) c *= Rat(pow2(n));
  return lhs == rhs;
}

std::map<StrictPartition, Int, StrictPartitionOrder> g_from_my(
    const Partition& mu) {
  int n = frobenius(mu).rank();
  QExpansion x = my_expansion(mu, MYVariant::AB);
  std::map<StrictPartition, Int, StrictPartitionOrder> out;
  Rat divisor(pow2(n));
  for (const auto& [lam, c] : x.terms) {
    Rat g = c / divisor;
    if (!is_integer(g))
      throw ConsistencyError("expansion coefficient at Q[" + lam.to_string() +
                             "] is not divisible by 2^" + std::to_string(n));
    out.emplace(lam, numerator(g));
  }
  return out;
}

std::map<StrictPartition, Int, StrictPartitionOrder> signed_e_sum(
    const Partition& mu, MYVariant variant) {
  std::map<StrictPartition, Int, StrictPartitionOrder> acc;
  for (const MYTerm& t : my_terms(mu, variant)) {
    auto removed = straighten(t.removed);
    auto remaining = straighten(t.remaining);
    if (!removed || !remaining) continue;
    int sign = removed->first * remaining->first;
    QExpansion row = expand_in_Q(
        m_mul(qfun_to_m(removed->second), qfun_to_m(remaining->second)));
    for (const auto& [lam, c] : row.terms) {
      if (!is_integer(c))
        throw ConsistencyError("non-integer structure constant at Q[" +
                               lam.to_string() + "]");
      acc[lam] += Int(sign) * numerator(c);
    }
  }
  for (auto it = acc.begin(); it != acc.end();)
    it = (it->second == 0) ? acc.erase(it) : std::next(it);
  return acc;
}

bool verify_coefficient_relation(const Partition& mu,
                                 const StrictPartition& lambda) {
  if (mu.weight() != lambda.weight()) return false;
  int n = frobenius(mu).rank();
  Rat g = expand_in_Q(eta_schur(mu)).coeff(lambda);
  Int lhs = numerator(g) * pow2(n);
  auto ab = signed_e_sum(mu, MYVariant::AB);
  auto cd = signed_e_sum(mu, MYVariant::CD);
  auto get = [&](const std::map<StrictPartition, Int, StrictPartitionOrder>& m)
      -> Int {
    auto it = m.find(lambda);
    return it == m.end() ? Int(0) : it->second;
  };
  return get(ab) == lhs && get(cd) == lhs;
}

}  // namespace qschur
