#pragma once

#include <map>
#include <string>

#include "qschur/partition.hpp"
#include "qschur/rational.hpp"

namespace qschur {

/// Homogeneous symmetric function in the monomial basis with exact rational
/// coefficients. Keys all have weight == degree; zero coefficients are never
/// stored. Immutable in spirit: operations return new values.
class SymFunc {
 public:
  using TermMap = std::map<Partition, Rat, PartitionOrder>;

  explicit SymFunc(int degree = 0) : degree_(degree) {}
  SymFunc(int degree, TermMap terms);

  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(const Partition& mu) const;

  void add_term(const Partition& mu, const Rat& c);

  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  SymFunc& operator*=(const Rat& c);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const Rat& c) { return a *= c; }
  bool operator==(const SymFunc& o) const {
    return degree_ == o.degree_ && terms_ == o.terms_;
  }

  std::string to_string() const;

 private:
  int degree_;
  TermMap terms_;
};

/// Linear combination of Schur Q-functions of one weight.
struct QExpansion {
  int degree = 0;
  std::map<StrictPartition, Rat, StrictPartitionOrder> terms;
  bool operator==(const QExpansion& o) const {
    return degree == o.degree && terms == o.terms;
  }
  Rat coeff(const StrictPartition& lam) const {
    auto it = terms.find(lam);
    return it == terms.end() ? Rat(0) : it->second;
  }
};

/// Linear combination of Schur functions of one weight.
struct SchurExpansion {
  int degree = 0;
  std::map<Partition, Rat, PartitionOrder> terms;
  Rat coeff(const Partition& mu) const {
    auto it = terms.find(mu);
    return it == terms.end() ? Rat(0) : it->second;
  }
};

// Product of monomial symmetric functions. Coefficient of m_gamma counts
// pairs of distinct rearrangements of alpha and beta summing to gamma.
SymFunc m_mul(const SymFunc& f, const SymFunc& g);
SymFunc m_basis(const Partition& mu);  // the basis element m_mu

// Schur function s_mu in the monomial basis (Kostka numbers).
SymFunc schur_to_m(const Partition& mu);

// Schur Q-function Q_lambda in the monomial basis.
SymFunc qfun_to_m(const StrictPartition& lambda);
// P_lambda = 2^{-l(lambda)} Q_lambda; all coefficients stay integral.
SymFunc pfun_to_m(const StrictPartition& lambda);

// One-row Q-function q_r (r >= 0; q_0 = 1).
SymFunc qfun_one_row(int r);

// Unique coefficients with f = sum x_lambda Q_lambda; throws NotInQSpan when
// no such expansion exists.
QExpansion expand_in_Q(const SymFunc& f);
// Triangular solve against the Kostka matrix; always succeeds.
SchurExpansion expand_in_schur(const SymFunc& f);

// eta(s_mu): image of the Schur function under the ring map h_i -> q_i,
// realized as the Jacobi-Trudi determinant with one-row Q entries.
SymFunc eta_schur(const Partition& mu);

// Re-substitution helpers (exact): sum of coeff * basis element.
SymFunc q_expansion_to_m(const QExpansion& x);
SymFunc schur_expansion_to_m(const SchurExpansion& x);

// Product of one-row Q-functions q_{k_1} ... q_{k_l} indexed by a partition
// (weakly decreasing, zeros dropped), in the monomial basis.
SymFunc qfun_product(const Partition& k);

// Expansion of f over the rational basis {q_K : K strict} of its degree;
// mirrors expand_in_Q. Throws NotInQSpan when f is outside the subring.
std::map<StrictPartition, Rat, StrictPartitionOrder> expand_in_q_products(
    const SymFunc& f);

std::string q_expansion_to_string(const QExpansion& x);

}  // namespace qschur
