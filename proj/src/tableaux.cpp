#include "qschur/tableaux.hpp"

#include <algorithm>

namespace qschur {

long TableauShape::cell_count() const {
  long n = 0;
  for (int r = 1; r <= rows(); ++r)
    n += std::max(0, last_col(r) - first_col(r) + 1);
  return n;
}

TableauShape shifted_skew_shape(const StrictPartition& outer,
                                const StrictPartition& inner) {
  TableauShape s;
  s.outer = outer.parts();
  s.inner = inner.parts();
  s.shifted = true;
  return s;
}

TableauShape unshifted_shape(const Partition& outer) {
  TableauShape s;
  s.outer = outer.parts();
  s.shifted = false;
  return s;
}

Word word_of(const MarkedTableau& t) {
  Word w;
  for (int r = 1; r <= t.shape.rows(); ++r)
    for (int c = t.shape.last_col(r); c >= t.shape.first_col(r); --c)
      w.push_back(t.grid[r][c]);
  return w;
}

bool satisfies_lattice(const Word& w) {
  int maxval = 0;
  for (int letter : w) maxval = std::max(maxval, letter_value(letter));
  std::vector<long> count(maxval + 2, 0);
  // Forward pass: count unprimed letters. A letter of value v (primed or
  // not) may not be scanned while the counts of v and v-1 are tied.
  for (int letter : w) {
    int v = letter_value(letter);
    if (v >= 2 && count[v] == count[v - 1]) return false;
    if (!is_primed(letter)) ++count[v];
  }
  // Backward pass: add primed letters onto the same counts. The tie rule now
  // watches the value a letter would push past its neighbour: a primed v is
  // blocked by a tie at (v, v-1), an unprimed v by a tie at (v+1, v).
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    int v = letter_value(*it);
    if (is_primed(*it)) {
      if (v >= 2 && count[v] == count[v - 1]) return false;
      ++count[v];
    } else {
      if (count[v + 1] == count[v]) return false;
    }
  }
  return true;
}

bool satisfies_prime_rule(const Word& w) {
  int maxval = 0;
  for (int letter : w) maxval = std::max(maxval, letter_value(letter));
  for (int k = 1; k <= maxval; ++k) {
    int last_primed = -1, last_unprimed = -1;
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
      if (w[i] == primed_letter(k)) last_primed = i;
      if (w[i] == unprimed_letter(k)) last_unprimed = i;
    }
    if (last_primed >= 0 && last_primed >= last_unprimed) return false;
  }
  return true;
}

namespace {

struct Cell {
  int row, col;
};

}  // namespace

void enumerate_marked_tableaux(
    const TableauShape& shape, const std::vector<int>& content,
    const std::function<bool(const MarkedTableau&)>& fn) {
  std::vector<Cell> cells;
  int maxcol = 0;
  for (int r = 1; r <= shape.rows(); ++r) {
    for (int c = shape.first_col(r); c <= shape.last_col(r); ++c)
      cells.push_back({r, c});
    maxcol = std::max(maxcol, shape.last_col(r));
  }
  long total = 0;
  for (int x : content) {
    if (x < 0) return;
    total += x;
  }
  if (total != static_cast<long>(cells.size())) return;

  MarkedTableau t;
  t.shape = shape;
  t.grid.assign(shape.rows() + 1, std::vector<int>(maxcol + 2, 0));
  std::vector<int> remaining(content);
  int nvals = static_cast<int>(content.size());
  bool stop = false;

  auto rec = [&](auto&& self, size_t idx) -> void {
    if (stop) return;
    if (idx == cells.size()) {
      if (!fn(t)) stop = true;
      return;
    }
    auto [r, c] = cells[idx];
    int left = (c > shape.first_col(r)) ? t.grid[r][c - 1] : 0;
    int above = (r > 1 && c >= shape.first_col(r - 1) &&
                 c <= shape.last_col(r - 1))
                    ? t.grid[r - 1][c]
                    : 0;
    int lo = std::max({left, above, 1});
    for (int letter = lo; letter <= 2 * nvals; ++letter) {
      if (letter == left && is_primed(letter)) continue;   // k' once per row
      if (letter == above && !is_primed(letter)) continue;  // k once per column
      int v = letter_value(letter);
      if (remaining[v - 1] == 0) continue;
      --remaining[v - 1];
      t.grid[r][c] = letter;
      self(self, idx + 1);
      t.grid[r][c] = 0;
      ++remaining[v - 1];
      if (stop) return;
    }
  };
  rec(rec, 0);
}

namespace {

Int count_lr_tableaux(const TableauShape& shape,
                      const std::vector<int>& content) {
  Int count = 0;
  enumerate_marked_tableaux(shape, content, [&](const MarkedTableau& t) {
    Word w = word_of(t);
    if (satisfies_lattice(w) && satisfies_prime_rule(w)) ++count;
    return true;
  });
  return count;
}

bool contains_componentwise(const StrictPartition& inner,
                            const StrictPartition& outer) {
  if (inner.length() > outer.length()) return false;
  for (int i = 1; i <= inner.length(); ++i)
    if (inner.part(i) > outer.part(i)) return false;
  return true;
}

}  // namespace

Int f_coeff(const StrictPartition& mu, const StrictPartition& nu,
            const StrictPartition& lambda) {
  if (mu.weight() + nu.weight() != lambda.weight()) return 0;
  if (!contains_componentwise(mu, lambda)) return 0;
  return count_lr_tableaux(shifted_skew_shape(lambda, mu), nu.parts());
}

Int g_coeff(const StrictPartition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) return 0;
  return count_lr_tableaux(unshifted_shape(mu), lambda.parts());
}

Int e_coeff(const StrictPartition& mu, const StrictPartition& nu,
            const StrictPartition& lambda) {
  Int f = f_coeff(mu, nu, lambda);
  if (f == 0) return 0;
  long exp = mu.length() + nu.length() - lambda.length();
  if (exp < 0)
    throw ConsistencyError("negative 2-power exponent with nonzero tableau count");
  return f * pow2(exp);
}

Int e_signed(const StrictPartition& mu, const IntSequence& k,
             const StrictPartition& lambda) {
  auto s = straighten(k);
  if (!s) return 0;
  return Int(s->first) * e_coeff(mu, s->second, lambda);
}

}  // namespace qschur
