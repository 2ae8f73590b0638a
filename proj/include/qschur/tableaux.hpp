#pragma once

#include <functional>
#include <vector>

#include "qschur/partition.hpp"
#include "qschur/rational.hpp"

namespace qschur {

// Letters of the marked alphabet 1' < 1 < 2' < 2 < ... encoded as ints:
// k' -> 2k-1, k -> 2k. The encoding order is the alphabet order.
inline int primed_letter(int k) { return 2 * k - 1; }
inline int unprimed_letter(int k) { return 2 * k; }
inline bool is_primed(int letter) { return letter % 2 == 1; }
inline int letter_value(int letter) { return (letter + 1) / 2; }

using Word = std::vector<int>;

/// Diagram of a (possibly skew, possibly shifted) shape. Row r of a shifted
/// shape starts at column r; ordinary rows start at column 1.
struct TableauShape {
  std::vector<int> outer;
  std::vector<int> inner;  // zero-padded logically; may be shorter
  bool shifted = false;

  int rows() const { return static_cast<int>(outer.size()); }
  int inner_part(int r) const {  // 1-based
    return (r >= 1 && r <= static_cast<int>(inner.size())) ? inner[r - 1] : 0;
  }
  int first_col(int r) const {
    return (shifted ? r : 1) + inner_part(r);
  }
  int last_col(int r) const {
    return (shifted ? r - 1 : 0) + outer[r - 1];
  }
  long cell_count() const;
};

TableauShape shifted_skew_shape(const StrictPartition& outer,
                                const StrictPartition& inner);
TableauShape unshifted_shape(const Partition& outer);

/// A filling of a shape by marked letters; grid[r][c] = 0 off the shape.
struct MarkedTableau {
  TableauShape shape;
  std::vector<std::vector<int>> grid;  // 1-based rows/cols, row 0 unused

  int entry(int r, int c) const { return grid[r][c]; }
};

// Reading word: rows scanned top to bottom, each row right to left.
Word word_of(const MarkedTableau& t);

// Stembridge lattice property of a marked word: unprimed letters are counted
// scanning the word forward, then primed letters scanning backward, and at
// every step the running counts must stay weakly decreasing in the letter
// value, with ties forbidding the letter about to be scanned.
bool satisfies_lattice(const Word& w);

// For each k, the rightmost k' precedes the last k (false when k' occurs
// without any k).
bool satisfies_prime_rule(const Word& w);

// Enumerate all marked tableaux of the given shape and content (content[k-1]
// letters of value k, primed or not), subject to the row/column rules.
// Stops early if the callback returns false.
void enumerate_marked_tableaux(const TableauShape& shape,
                               const std::vector<int>& content,
                               const std::function<bool(const MarkedTableau&)>& fn);

// Number of marked shifted tableaux of shape lambda/mu and weight nu whose
// word satisfies the lattice and prime conditions; the structure constant of
// P_mu P_nu on P_lambda.
Int f_coeff(const StrictPartition& mu, const StrictPartition& nu,
            const StrictPartition& lambda);

// Same count on the unshifted shape mu with weight lambda; the coefficient of
// Q_lambda in eta(s_mu) and of s_mu in P_lambda.
Int g_coeff(const StrictPartition& lambda, const Partition& mu);

// e = 2^{l(mu)+l(nu)-l(lambda)} f; the Lagrangian Schubert structure constant.
Int e_coeff(const StrictPartition& mu, const StrictPartition& nu,
            const StrictPartition& lambda);

// sgn(w_K) * e_coeff(mu, <K>, lambda); zero when K straightens to nothing.
Int e_signed(const StrictPartition& mu, const IntSequence& k,
             const StrictPartition& lambda);

}  // namespace qschur
