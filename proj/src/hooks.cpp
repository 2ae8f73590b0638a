#include "qschur/hooks.hpp"

#include <algorithm>
#include <vector>

#include "qschur/macdonald_you.hpp"

namespace qschur {

HookData hooks_ordinary(const Partition& mu) {
  HookData h;
  h.shifted = false;
  h.shape = mu.parts();
  Partition conj = conjugate(mu);
  Rat bar = 1;
  for (int i = 1; i <= mu.length(); ++i)
    for (int j = 1; j <= mu.part(i); ++j) {
      long hook = mu.part(i) + conj.part(j) - i - j + 1;
      h.hooks[{i, j}] = hook;
      bar /= hook;
    }
  h.bar = bar;
  Rat deg = bar * Rat(factorial(mu.weight()));
  if (!is_integer(deg))
    throw ConsistencyError("hook-length degree is not an integer for " +
                           mu.to_string());
  h.degree = numerator(deg);
  return h;
}

HookData hooks_shifted(const StrictPartition& lambda) {
  HookData h;
  h.shifted = true;
  h.shape = lambda.parts();
  // Double diagram (lambda | lambda - 1) in Frobenius coordinates; the cell
  // (i, j) of the shifted diagram sits at (i, j + 1) inside it.
  FrobeniusForm f;
  for (int p : lambda.parts()) {
    f.alpha.push_back(p);
    f.beta.push_back(p - 1);
  }
  Partition dbl = partition_from_frobenius(f);
  Partition dbl_conj = conjugate(dbl);
  Rat bar = 1;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = i; j <= i + lambda.part(i) - 1; ++j) {
      int jj = j + 1;
      long hook = dbl.part(i) + dbl_conj.part(jj) - i - jj + 1;
      h.hooks[{i, j}] = hook;
      bar /= hook;
    }
  h.bar = bar;
  Rat deg = bar * Rat(factorial(lambda.weight()));
  if (!is_integer(deg))
    throw ConsistencyError("shifted hook-length degree is not an integer for " +
                           lambda.to_string());
  h.degree = numerator(deg);
  return h;
}

Rat fbar_parts(const Partition& mu, int n) {
  if (n < 0) n = std::max(1, mu.length());
  if (n < mu.length())
    throw InvalidInput("padding length below the number of parts");
  Rat num = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) num *= (mu.part(i) - mu.part(j) - i + j);
  Rat den = 1;
  for (int i = 1; i <= n; ++i) den *= Rat(factorial(mu.part(i) + n - i));
  return num / den;
}

Rat gbar_parts(const StrictPartition& lambda) {
  Rat r = 1;
  for (int i = 1; i <= lambda.length(); ++i)
    r /= Rat(factorial(lambda.part(i)));
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = i + 1; j <= lambda.length(); ++j)
      r *= Rat(lambda.part(i) - lambda.part(j), lambda.part(i) + lambda.part(j));
  return r;
}

namespace {

Int count_syt_rec(std::vector<int>& shape,
                  std::map<std::vector<int>, Int>& memo) {
  if (shape.empty()) return 1;
  auto it = memo.find(shape);
  if (it != memo.end()) return it->second;
  Int total = 0;
  for (size_t i = 0; i < shape.size(); ++i) {
    bool corner = (i + 1 == shape.size()) || (shape[i] > shape[i + 1]);
    if (!corner) continue;
    --shape[i];
    bool drop = (shape[i] == 0);
    if (drop) shape.pop_back();
    total += count_syt_rec(shape, memo);
    if (drop) shape.push_back(0);
    ++shape[i];
  }
  memo.emplace(shape, total);
  return total;
}

Int count_shifted_rec(std::vector<int>& shape,
                      std::map<std::vector<int>, Int>& memo) {
  if (shape.empty()) return 1;
  auto it = memo.find(shape);
  if (it != memo.end()) return it->second;
  Int total = 0;
  for (size_t i = 0; i < shape.size(); ++i) {
    bool last = (i + 1 == shape.size());
    bool corner = last ? shape[i] >= 1 : (shape[i] - 1 > shape[i + 1]);
    if (!corner) continue;
    --shape[i];
    bool drop = (shape[i] == 0);
    if (drop) shape.pop_back();
    total += count_shifted_rec(shape, memo);
    if (drop) shape.push_back(0);
    ++shape[i];
  }
  memo.emplace(shape, total);
  return total;
}

}  // namespace

Int count_syt(const Partition& mu, long budget) {
  if (mu.weight() > budget)
    throw BudgetExceeded("standard tableau enumeration refused beyond " +
                         std::to_string(budget) + " cells");
  std::vector<int> shape = mu.parts();
  std::map<std::vector<int>, Int> memo;
  return count_syt_rec(shape, memo);
}

Int count_shifted_syt(const StrictPartition& lambda, long budget) {
  if (lambda.weight() > budget)
    throw BudgetExceeded("shifted tableau enumeration refused beyond " +
                         std::to_string(budget) + " cells");
  std::vector<int> shape = lambda.parts();
  std::map<std::vector<int>, Int> memo;
  return count_shifted_rec(shape, memo);
}

namespace {

Rat rational_det(std::vector<std::vector<Rat>> m) {
  int n = static_cast<int>(m.size());
  Rat det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rat factor = m[r][col] / m[col][col];
      for (int c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

Rat e_value(int k) {
  if (k < 0) return 0;
  return Rat(1) / Rat(factorial(k));
}

}  // namespace

Rat specialize_schur(const Partition& mu) {
  // s_mu = det(e_{mu'_i - i + j}) over the elementary generators.
  Partition conj = conjugate(mu);
  int n = conj.length();
  if (n == 0) return 1;
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m[i - 1][j - 1] = e_value(conj.part(i) - i + j);
  return rational_det(std::move(m));
}

Rat specialize_q(const SymFunc& f) {
  Rat total = 0;
  for (const auto& [k, c] : expand_in_q_products(f)) {
    Rat value = c;
    for (int p : k.parts()) value /= Rat(factorial(p));
    total += value;
  }
  return total;
}

Rat specialize_q(const QExpansion& x) { return specialize_q(q_expansion_to_m(x)); }

Rat gbar_signed(const IntSequence& k) {
  auto s = straighten(k);
  if (!s) return 0;
  return Rat(s->first) * gbar_parts(s->second);
}

bool verify_hook_identity(const Partition& mu) {
  int n = frobenius(mu).rank();
  Rat lhs = Rat(pow2(n)) * fbar_parts(mu);
  for (MYVariant variant : {MYVariant::AB, MYVariant::CD}) {
    Rat sum = 0;
    for (const MYTerm& t : my_terms(mu, variant))
      sum += gbar_signed(t.removed) * gbar_signed(t.remaining);
    if (sum != lhs) return false;
  }
  return true;
}

}  // namespace qschur
