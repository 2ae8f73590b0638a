#include "qschur/symfunc.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>
#include <vector>

namespace qschur {

SymFunc::SymFunc(int degree, TermMap terms)
    : degree_(degree), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.weight() != degree_)
      throw InvalidInput("term weight does not match degree");
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

Rat SymFunc::coeff(const Partition& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? Rat(0) : it->second;
}

void SymFunc::add_term(const Partition& mu, const Rat& c) {
  if (c == 0) return;
  if (mu.weight() != degree_)
    throw InvalidInput("term weight does not match degree");
  auto [it, inserted] = terms_.emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  if (!o.is_zero() && !is_zero() && degree_ != o.degree_)
    throw InvalidInput("degree mismatch in addition");
  if (is_zero()) degree_ = o.degree_;
  for (const auto& [mu, c] : o.terms_) add_term(mu, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
  if (!o.is_zero() && !is_zero() && degree_ != o.degree_)
    throw InvalidInput("degree mismatch in subtraction");
  if (is_zero()) degree_ = o.degree_;
  for (const auto& [mu, c] : o.terms_) add_term(mu, -c);
  return *this;
}

SymFunc& SymFunc::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mu, v] : terms_) v *= c;
  return *this;
}

std::string SymFunc::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mu, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << rat_to_string(c) << "*";
    os << "m[" << mu.to_string() << "]";
  }
  return os.str();
}

SymFunc m_basis(const Partition& mu) {
  SymFunc f(static_cast<int>(mu.weight()));
  f.add_term(mu, 1);
  return f;
}

namespace {

// ---------------------------------------------------------------------------
// Power-sum representation. Products of power sums concatenate indices, which
// turns every ring product into a merge; monomial-basis products route
// through here.

struct PExpr {
  int degree = 0;
  std::map<Partition, Rat, PartitionOrder> terms;

  void add(const Partition& k, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
};

PExpr p_unit() {
  PExpr e;
  e.add(Partition(), 1);
  return e;
}

Partition merge_parts(const Partition& a, const Partition& b) {
  std::vector<int> out;
  out.reserve(a.parts().size() + b.parts().size());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(),
             b.parts().end(), std::back_inserter(out), std::greater<int>());
  return Partition(out);
}

PExpr p_mul(const PExpr& a, const PExpr& b) {
  PExpr r;
  r.degree = a.degree + b.degree;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) r.add(merge_parts(ka, kb), ca * cb);
  return r;
}

PExpr p_scaled_sum(PExpr a, const PExpr& b, const Rat& c) {
  for (const auto& [k, v] : b.terms) a.add(k, v * c);
  if (a.terms.empty()) a.degree = std::max(a.degree, b.degree);
  return a;
}

// m_alpha * m_(r): add r to one occurrence of a distinct part value (or to a
// fresh zero slot); the pair-count collapses to the multiplicity of the grown
// part in the result.
SymFunc m_mul_single_row(const SymFunc& f, int r) {
  if (r == 0) return f;
  SymFunc out(f.degree() + r);
  for (const auto& [alpha, c] : f.terms()) {
    std::vector<int> values(alpha.parts());
    values.push_back(0);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int v : values) {
      std::vector<int> parts(alpha.parts());
      if (v == 0) {
        parts.push_back(r);
      } else {
        auto it = std::find(parts.begin(), parts.end(), v);
        *it = v + r;
      }
      std::sort(parts.begin(), parts.end(), std::greater<int>());
      Partition gamma(parts);
      long mult = std::count(parts.begin(), parts.end(), v + r);
      out.add_term(gamma, c * Rat(mult));
    }
  }
  return out;
}

std::mutex memo_mutex;

// p_lambda in the monomial basis (integer coefficients).
std::shared_ptr<const SymFunc> p_row(const Partition& lambda) {
  static std::map<Partition, std::shared_ptr<const SymFunc>, PartitionOrder>
      memo;
  {
    std::lock_guard<std::mutex> lk(memo_mutex);
    auto it = memo.find(lambda);
    if (it != memo.end()) return it->second;
  }
  SymFunc row = m_basis(Partition());
  for (int i = lambda.length(); i >= 1; --i)
    row = m_mul_single_row(row, lambda.part(i));
  auto ptr = std::make_shared<const SymFunc>(std::move(row));
  std::lock_guard<std::mutex> lk(memo_mutex);
  return memo.emplace(lambda, ptr).first->second;
}

Rat p_diag(const Partition& lambda) {
  // Coefficient of m_lambda in p_lambda: product of multiplicities factorial.
  Rat d = 1;
  int i = 0;
  const auto& parts = lambda.parts();
  while (i < static_cast<int>(parts.size())) {
    int j = i;
    while (j < static_cast<int>(parts.size()) && parts[j] == parts[i]) ++j;
    d *= Rat(factorial(j - i));
    i = j;
  }
  return d;
}

PExpr to_p(const SymFunc& f) {
  PExpr out;
  out.degree = f.degree();
  SymFunc residual = f;
  size_t guard = 0;
  while (!residual.is_zero()) {
    if (++guard > 100000)
      throw ConsistencyError("power-sum conversion failed to terminate");
    // Dominance-minimal key first: p_mu only adds dominance-larger terms.
    auto it = std::prev(residual.terms().end());
    Partition mu = it->first;
    Rat x = it->second / p_diag(mu);
    out.add(mu, x);
    SymFunc sub = *p_row(mu);
    sub *= x;
    residual -= sub;
  }
  return out;
}

SymFunc to_m(const PExpr& e) {
  SymFunc out(e.degree);
  for (const auto& [k, c] : e.terms) {
    SymFunc row = *p_row(k);
    row *= c;
    out += row;
  }
  return out;
}

// One-row Q-function in the power-sum basis:
// sum over partitions of r into odd parts of 2^{l} / z_sigma * p_sigma.
PExpr q_one_row_p(int r) {
  static std::map<int, PExpr> memo;
  {
    std::lock_guard<std::mutex> lk(memo_mutex);
    auto it = memo.find(r);
    if (it != memo.end()) return it->second;
  }
  PExpr e;
  e.degree = r;
  if (r == 0) {
    e = p_unit();
  } else {
    for (const auto& sigma : partitions_of(r)) {
      bool all_odd = true;
      for (int part : sigma.parts())
        if (part % 2 == 0) all_odd = false;
      if (!all_odd) continue;
      Rat z = 1;
      int i = 0;
      const auto& parts = sigma.parts();
      while (i < static_cast<int>(parts.size())) {
        int j = i;
        while (j < static_cast<int>(parts.size()) && parts[j] == parts[i]) ++j;
        z *= Rat(factorial(j - i));
        for (int t = i; t < j; ++t) z *= parts[i];
        i = j;
      }
      e.add(sigma, Rat(pow2(sigma.length())) / z);
    }
  }
  std::lock_guard<std::mutex> lk(memo_mutex);
  return memo.emplace(r, std::move(e)).first->second;
}

// Two-row (composite) Q-function for r > s >= 0:
// Q_(r,s) = q_r q_s + 2 * sum_{i=1..s} (-1)^i q_{r+i} q_{s-i}.
PExpr two_row_p(int r, int s) {
  static std::map<std::pair<int, int>, PExpr> memo;
  auto key = std::make_pair(r, s);
  {
    std::lock_guard<std::mutex> lk(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  PExpr e = p_mul(q_one_row_p(r), q_one_row_p(s));
  for (int i = 1; i <= s; ++i) {
    PExpr t = p_mul(q_one_row_p(r + i), q_one_row_p(s - i));
    e = p_scaled_sum(std::move(e), t, (i % 2 == 0) ? Rat(2) : Rat(-2));
  }
  std::lock_guard<std::mutex> lk(memo_mutex);
  return memo.emplace(key, std::move(e)).first->second;
}

// Q_lambda in the power-sum basis via the Pfaffian row expansion
// Q_lambda = sum_j (-1)^j Q_(lambda_1, lambda_j) Q_{lambda minus both}.
PExpr qfun_p(const StrictPartition& lambda) {
  static std::map<StrictPartition, PExpr, StrictPartitionOrder> memo;
  {
    std::lock_guard<std::mutex> lk(memo_mutex);
    auto it = memo.find(lambda);
    if (it != memo.end()) return it->second;
  }
  PExpr e;
  e.degree = static_cast<int>(lambda.weight());
  int l = lambda.length();
  if (l == 0) {
    e = p_unit();
  } else if (l == 1) {
    e = q_one_row_p(lambda.part(1));
  } else {
    std::vector<int> padded(lambda.parts());
    if (padded.size() % 2 != 0) padded.push_back(0);
    for (size_t j = 1; j < padded.size(); ++j) {
      std::vector<int> rest;
      for (size_t t = 1; t < padded.size(); ++t)
        if (t != j && padded[t] > 0) rest.push_back(padded[t]);
      PExpr term = p_mul(two_row_p(padded[0], padded[j]),
                         qfun_p(StrictPartition(rest)));
      // (-1)^j with 1-based column index j+1: even position keeps the sign.
      e = p_scaled_sum(std::move(e), term, (j % 2 == 1) ? Rat(1) : Rat(-1));
    }
  }
  std::lock_guard<std::mutex> lk(memo_mutex);
  return memo.emplace(lambda, std::move(e)).first->second;
}

}  // namespace

SymFunc m_mul(const SymFunc& f, const SymFunc& g) {
  if (f.is_zero() || g.is_zero()) return SymFunc(f.degree() + g.degree());
  return to_m(p_mul(to_p(f), to_p(g)));
}

SymFunc qfun_one_row(int r) {
  if (r < 0) throw InvalidInput("one-row Q index must be nonnegative");
  SymFunc f(r);
  if (r == 0) {
    f.add_term(Partition(), 1);
    return f;
  }
  for (const auto& nu : partitions_of(r))
    f.add_term(nu, Rat(pow2(nu.length())));
  return f;
}

SymFunc qfun_to_m(const StrictPartition& lambda) {
  static std::map<StrictPartition, std::shared_ptr<const SymFunc>,
                  StrictPartitionOrder>
      memo;
  {
    std::lock_guard<std::mutex> lk(memo_mutex);
    auto it = memo.find(lambda);
    if (it != memo.end()) return *it->second;
  }
  SymFunc f = lambda.length() <= 1 ? qfun_one_row(lambda.part(1))
                                   : to_m(qfun_p(lambda));
  auto ptr = std::make_shared<const SymFunc>(std::move(f));
  std::lock_guard<std::mutex> lk(memo_mutex);
  return *memo.emplace(lambda, ptr).first->second;
}

SymFunc pfun_to_m(const StrictPartition& lambda) {
  SymFunc f = qfun_to_m(lambda);
  f *= Rat(1) / Rat(pow2(lambda.length()));
  for (const auto& [mu, c] : f.terms())
    if (!is_integer(c))
      throw ConsistencyError("P-function has a non-integer coefficient at m[" +
                             mu.to_string() + "]: " + rat_to_string(c));
  return f;
}

namespace {

// Horizontal-strip extensions of `inner` by `size` cells inside `outer`.
void strip_extensions(const Partition& inner, const Partition& outer, int size,
                      std::vector<Partition>& out) {
  int rows = outer.length();
  std::vector<int> acc(rows, 0);
  // DFS over row lengths; row i in [inner_i, min(outer_i, inner_{i-1})].
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == rows) {
      if (remaining == 0) out.emplace_back(acc);
      return;
    }
    int lo = inner.part(i + 1);
    int hi = std::min(outer.part(i + 1),
                      i == 0 ? outer.part(1) : inner.part(i));
    if (i > 0) hi = std::min(hi, acc[i - 1]);
    for (int len = lo; len <= std::min(hi, lo + remaining); ++len) {
      acc[i] = len;
      self(self, i + 1, remaining - (len - lo));
    }
  };
  rec(rec, 0, size);
}

}  // namespace

SymFunc schur_to_m(const Partition& mu) {
  static std::map<Partition, std::shared_ptr<const SymFunc>, PartitionOrder>
      memo;
  {
    std::lock_guard<std::mutex> lk(memo_mutex);
    auto it = memo.find(mu);
    if (it != memo.end()) return *it->second;
  }
  int d = static_cast<int>(mu.weight());
  SymFunc f(d);
  for (const auto& nu : partitions_of(d)) {
    if (!dominance_leq(nu, mu)) continue;
    // Kostka number: chains of horizontal strips with sizes nu_1, nu_2, ...
    std::map<Partition, Int, PartitionOrder> states;
    states.emplace(Partition(), 1);
    for (int k = 1; k <= nu.length(); ++k) {
      std::map<Partition, Int, PartitionOrder> next;
      for (const auto& [shape, cnt] : states) {
        std::vector<Partition> exts;
        strip_extensions(shape, mu, nu.part(k), exts);
        for (const auto& s : exts) next[s] += cnt;
      }
      states = std::move(next);
    }
    auto it = states.find(mu);
    if (it != states.end() && it->second != 0)
      f.add_term(nu, Rat(it->second));
  }
  auto ptr = std::make_shared<const SymFunc>(std::move(f));
  std::lock_guard<std::mutex> lk(memo_mutex);
  return *memo.emplace(mu, ptr).first->second;
}

QExpansion expand_in_Q(const SymFunc& f) {
  QExpansion out;
  out.degree = f.degree();
  SymFunc residual = f;
  size_t guard = 0;
  while (!residual.is_zero()) {
    if (++guard > 100000)
      throw ConsistencyError("Q-expansion failed to terminate");
    auto it = residual.terms().begin();  // dominance-maximal key
    const Partition& nu = it->first;
    for (int i = 1; i < nu.length(); ++i)
      if (nu.part(i) == nu.part(i + 1))
        throw NotInQSpan("not in the Q-span: leading term m[" +
                         nu.to_string() + "] has a repeated part");
    StrictPartition lam(nu.parts());
    Rat x = it->second / Rat(pow2(lam.length()));
    out.terms.emplace(lam, x);
    SymFunc sub = qfun_to_m(lam);
    sub *= x;
    residual -= sub;
  }
  return out;
}

SchurExpansion expand_in_schur(const SymFunc& f) {
  SchurExpansion out;
  out.degree = f.degree();
  SymFunc residual = f;
  size_t guard = 0;
  while (!residual.is_zero()) {
    if (++guard > 100000)
      throw ConsistencyError("Schur expansion failed to terminate");
    auto it = residual.terms().begin();
    Partition nu = it->first;
    Rat x = it->second;  // Kostka matrix is unitriangular
    out.terms.emplace(nu, x);
    SymFunc sub = schur_to_m(nu);
    sub *= x;
    residual -= sub;
  }
  return out;
}

SymFunc eta_schur(const Partition& mu) {
  static std::map<Partition, std::shared_ptr<const SymFunc>, PartitionOrder>
      memo;
  {
    std::lock_guard<std::mutex> lk(memo_mutex);
    auto it = memo.find(mu);
    if (it != memo.end()) return *it->second;
  }
  // Jacobi-Trudi determinant det(q_{mu_i - i + j}) collected as signed
  // products of one-row Q's, then expanded once.
  int l = mu.length();
  std::map<Partition, Int, PartitionOrder> monomials;
  std::vector<int> chosen;  // chosen[i] = column for row i (0-based)
  std::vector<bool> used(l, false);
  std::vector<int> indices;
  auto rec = [&](auto&& self, int row, int inversions) -> void {
    if (row == l) {
      std::vector<int> key(indices);
      std::sort(key.begin(), key.end(), std::greater<int>());
      monomials[Partition(key)] += (inversions % 2 == 0) ? 1 : -1;
      return;
    }
    for (int col = 0; col < l; ++col) {
      if (used[col]) continue;
      int e = mu.part(row + 1) - (row + 1) + (col + 1);
      if (e < 0) continue;
      int inv = 0;
      for (int c = col + 1; c < l; ++c)
        if (used[c]) ++inv;
      used[col] = true;
      if (e > 0) indices.push_back(e);
      self(self, row + 1, inversions + inv);
      if (e > 0) indices.pop_back();
      used[col] = false;
    }
  };
  rec(rec, 0, 0);
  PExpr total;
  total.degree = static_cast<int>(mu.weight());
  for (const auto& [key, c] : monomials) {
    if (c == 0) continue;
    PExpr prod = p_unit();
    for (int r : key.parts()) prod = p_mul(prod, q_one_row_p(r));
    prod.degree = total.degree;
    total = p_scaled_sum(std::move(total), prod, Rat(c));
  }
  auto ptr = std::make_shared<const SymFunc>(to_m(total));
  std::lock_guard<std::mutex> lk(memo_mutex);
  return *memo.emplace(mu, ptr).first->second;
}

SymFunc q_expansion_to_m(const QExpansion& x) {
  SymFunc out(x.degree);
  for (const auto& [lam, c] : x.terms) {
    SymFunc t = qfun_to_m(lam);
    t *= c;
    out += t;
  }
  return out;
}

SymFunc schur_expansion_to_m(const SchurExpansion& x) {
  SymFunc out(x.degree);
  for (const auto& [mu, c] : x.terms) {
    SymFunc t = schur_to_m(mu);
    t *= c;
    out += t;
  }
  return out;
}

SymFunc qfun_product(const Partition& k) {
  static std::map<Partition, std::shared_ptr<const SymFunc>, PartitionOrder>
      memo;
  {
    std::lock_guard<std::mutex> lk(memo_mutex);
    auto it = memo.find(k);
    if (it != memo.end()) return *it->second;
  }
  PExpr prod = p_unit();
  for (int r : k.parts()) prod = p_mul(prod, q_one_row_p(r));
  prod.degree = static_cast<int>(k.weight());
  auto ptr = std::make_shared<const SymFunc>(to_m(prod));
  std::lock_guard<std::mutex> lk(memo_mutex);
  return *memo.emplace(k, ptr).first->second;
}

std::map<StrictPartition, Rat, StrictPartitionOrder> expand_in_q_products(
    const SymFunc& f) {
  QExpansion q = expand_in_Q(f);
  std::map<StrictPartition, Rat, StrictPartitionOrder> residual(
      q.terms.begin(), q.terms.end());
  std::map<StrictPartition, Rat, StrictPartitionOrder> out;
  size_t guard = 0;
  while (!residual.empty()) {
    if (++guard > 100000)
      throw ConsistencyError("q-product expansion failed to terminate");
    // Dominance-minimal key first: q_K = Q_K + dominance-larger terms.
    auto it = std::prev(residual.end());
    StrictPartition k = it->first;
    Rat c = it->second;
    residual.erase(it);
    if (c == 0) continue;
    out.emplace(k, c);
    QExpansion row = expand_in_Q(qfun_product(k.as_partition()));
    if (row.coeff(k) != 1)
      throw ConsistencyError("q-product transition is not unitriangular at " +
                             k.to_string());
    for (const auto& [lam, v] : row.terms) {
      if (lam == k) continue;
      auto [rit, inserted] = residual.emplace(lam, -c * v);
      if (!inserted) {
        rit->second -= c * v;
        if (rit->second == 0) residual.erase(rit);
      }
    }
  }
  return out;
}

std::string q_expansion_to_string(const QExpansion& x) {
  if (x.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lam, c] : x.terms) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << rat_to_string(c) << "*";
    os << "Q[" << lam.to_string() << "]";
  }
  return os.str();
}

}  // namespace qschur
