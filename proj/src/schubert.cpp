#include "qschur/schubert.hpp"

#include <memory>
#include <mutex>

#include "qschur/tableaux.hpp"

namespace qschur {

namespace {

std::mutex row_mutex;

using GRow = std::map<StrictPartition, Int, StrictPartitionOrder>;

}  // namespace

std::map<StrictPartition, Int, StrictPartitionOrder> restriction_row(
    const Partition& mu) {
  static std::map<Partition, std::shared_ptr<const GRow>, PartitionOrder> memo;
  {
    std::lock_guard<std::mutex> lk(row_mutex);
    auto it = memo.find(mu);
    if (it != memo.end()) return *it->second;
  }
  GRow row;
  for (const auto& [lam, c] : expand_in_Q(eta_schur(mu)).terms) {
    if (!is_integer(c))
      throw ConsistencyError("non-integer restriction coefficient at Q[" +
                             lam.to_string() + "]");
    if (c != 0) row.emplace(lam, numerator(c));
  }
  auto ptr = std::make_shared<const GRow>(std::move(row));
  std::lock_guard<std::mutex> lk(row_mutex);
  return *memo.emplace(mu, ptr).first->second;
}

SchubertExpansionLG restrict_to_lagrangian(const Partition& mu, int n) {
  if (!fits_box(mu, n))
    throw InvalidInput("partition " + mu.to_string() +
                       " is not contained in the box (" + std::to_string(n) +
                       "^" + std::to_string(n) + ")");
  SchubertExpansionLG out;
  out.n = n;
  for (const auto& [lam, g] : restriction_row(mu))
    if (fits_staircase(lam, n)) out.terms.emplace(lam, g);
  return out;
}

SchubertExpansionLG lg_product(const StrictPartition& mu,
                               const StrictPartition& nu, int n) {
  if (!fits_staircase(mu, n) || !fits_staircase(nu, n))
    throw InvalidInput("index not contained in staircase(" +
                       std::to_string(n) + ")");
  SchubertExpansionLG out;
  out.n = n;
  QExpansion prod = expand_in_Q(m_mul(qfun_to_m(mu), qfun_to_m(nu)));
  for (const auto& [lam, e] : prod.terms) {
    if (!is_integer(e))
      throw ConsistencyError("non-integer structure constant at Q[" +
                             lam.to_string() + "]");
    if (fits_staircase(lam, n) && e != 0) out.terms.emplace(lam, numerator(e));
  }
  return out;
}

Int pairing_lg(const SchubertExpansionLG& a, const SchubertExpansionLG& b,
               std::ostream* diag) {
  if (a.n != b.n) throw InvalidInput("pairing of expansions over different n");
  int n = a.n;
  long total = static_cast<long>(n) * (n + 1) / 2;
  long wa = a.terms.empty() ? -1 : a.terms.begin()->first.weight();
  long wb = b.terms.empty() ? -1 : b.terms.begin()->first.weight();
  if (wa < 0 || wb < 0) return 0;
  if (wa + wb != total) {
    if (diag)
      *diag << "pairing degree mismatch: " << wa << " + " << wb
            << " != " << total << "\n";
    return 0;
  }
  Int sum = 0;
  for (const auto& [lam, c] : a.terms)
    sum += c * b.coeff(complement_strict(lam, n));
  return sum;
}

SchubertExpansionG pushforward(const StrictPartition& lambda, int n) {
  if (!fits_staircase(lambda, n))
    throw InvalidInput("strict partition " + lambda.to_string() +
                       " is not contained in staircase(" + std::to_string(n) +
                       ")");
  SchubertExpansionG out;
  out.n = n;
  StrictPartition lam_dual = complement_strict(lambda, n);
  long w = lambda.weight() + static_cast<long>(n) * (n - 1) / 2;
  for (const auto& mu : partitions_in_box(w, n)) {
    Partition mu_star = complement_box(mu, n);
    auto row = restriction_row(mu_star);
    auto it = row.find(lam_dual);
    if (it != row.end() && it->second != 0) out.terms.emplace(mu, it->second);
  }
  return out;
}

bool verify_pushforward_duality(const StrictPartition& lambda,
                                const Partition& mu, int n) {
  if (!fits_staircase(lambda, n) || !fits_box(mu, n)) return false;
  long total = static_cast<long>(n) * (n + 1) / 2;
  if (mu.weight() != lambda.weight() + static_cast<long>(n) * (n - 1) / 2)
    return false;
  Partition mu_star = complement_box(mu, n);
  StrictPartition rho = staircase(n);
  Int lhs = 0;
  for (const auto& nu : strict_partitions_of(total - lambda.weight()))
    lhs += e_coeff(lambda, nu, rho) * g_coeff(nu, mu_star);
  Int rhs = g_coeff(complement_strict(lambda, n), mu_star);
  return lhs == rhs;
}

}  // namespace qschur
