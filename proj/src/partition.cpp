#include "qschur/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace qschur {

namespace {

void check_decreasing(const std::vector<int>& parts, bool strict) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw InvalidInput("partition parts must be positive");
    if (i + 1 < parts.size()) {
      if (strict ? parts[i] <= parts[i + 1] : parts[i] < parts[i + 1])
        throw InvalidInput(strict ? "parts must strictly decrease"
                                  : "parts must weakly decrease");
    }
  }
}

long weight_of(const std::vector<int>& parts) {
  return std::accumulate(parts.begin(), parts.end(), 0L);
}

std::vector<int> parse_parts(std::string_view text) {
  std::vector<int> parts;
  if (text.empty() || text == "-" || text == "0") return parts;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(
        pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    if (tok.empty()) throw InvalidInput("empty component in partition text");
    size_t caret = tok.find('^');
    std::string_view base = tok.substr(0, caret);
    int value = 0, mult = 1;
    auto r = std::from_chars(base.data(), base.data() + base.size(), value);
    if (r.ec != std::errc() || r.ptr != base.data() + base.size())
      throw InvalidInput("bad partition component: " + std::string(tok));
    if (caret != std::string_view::npos) {
      std::string_view exp = tok.substr(caret + 1);
      auto r2 = std::from_chars(exp.data(), exp.data() + exp.size(), mult);
      if (r2.ec != std::errc() || r2.ptr != exp.data() + exp.size() || mult < 0)
        throw InvalidInput("bad exponent in partition text: " +
                           std::string(tok));
    }
    for (int i = 0; i < mult; ++i) parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  // "0" components name the empty partition; only leading/trailing zeros of a
  // nonempty list are rejected by the constructor below.
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return parts;
}

std::string parts_to_string(const std::vector<int>& parts) {
  if (parts.empty()) return "-";
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  check_decreasing(parts_, /*strict=*/false);
}

long Partition::weight() const { return weight_of(parts_); }

std::string Partition::to_string() const { return parts_to_string(parts_); }

Partition Partition::parse(std::string_view text) {
  return Partition(parse_parts(text));
}

StrictPartition::StrictPartition(std::vector<int> parts)
    : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  check_decreasing(parts_, /*strict=*/true);
}

long StrictPartition::weight() const { return weight_of(parts_); }

StrictPartition StrictPartition::parse(std::string_view text) {
  return StrictPartition(parse_parts(text));
}

bool canonical_less(const std::vector<int>& a, const std::vector<int>& b) {
  long wa = weight_of(a), wb = weight_of(b);
  if (wa != wb) return wa > wb;
  size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    int ai = i < a.size() ? a[i] : 0;
    int bi = i < b.size() ? b[i] : 0;
    if (ai != bi) return ai > bi;
  }
  return false;
}

bool dominance_leq(const Partition& mu, const Partition& nu) {
  if (mu.weight() != nu.weight()) return false;
  long pm = 0, pn = 0;
  int n = std::max(mu.length(), nu.length());
  for (int i = 1; i <= n; ++i) {
    pm += mu.part(i);
    pn += nu.part(i);
    if (pm > pn) return false;
  }
  return true;
}

FrobeniusForm frobenius(const Partition& mu) {
  FrobeniusForm f;
  Partition conj = conjugate(mu);
  for (int i = 1; i <= mu.length() && mu.part(i) >= i; ++i) {
    f.alpha.push_back(mu.part(i) - i);
    f.beta.push_back(conj.part(i) - i);
  }
  return f;
}

Partition partition_from_frobenius(const FrobeniusForm& f) {
  int n = f.rank();
  if (n == 0) return Partition();
  int rows = f.beta[0] + 1;
  std::vector<int> parts(rows, 0);
  for (int i = 0; i < n; ++i) parts[i] = f.alpha[i] + i + 1;
  // Below the Durfee square, row i+1 has one cell per column j+1 whose leg
  // reaches it: beta_j + (j+1) >= i+1.
  for (int i = n; i < rows; ++i) {
    int len = 0;
    for (int j = 0; j < n; ++j)
      if (f.beta[j] >= i - j) ++len;
    parts[i] = len;
  }
  return Partition(parts);
}

std::pair<IntSequence, IntSequence> ab_sequences(const FrobeniusForm& f) {
  IntSequence a, b;
  for (int x : f.alpha) a.push_back(x + 1);
  for (int x : f.beta) b.push_back(x);
  return {a, b};
}

std::pair<IntSequence, IntSequence> cd_sequences(const FrobeniusForm& f) {
  IntSequence c, d;
  for (int x : f.beta) c.push_back(x + 1);
  for (int x : f.alpha) d.push_back(x);
  return {c, d};
}

Partition conjugate(const Partition& mu) {
  if (mu.empty()) return Partition();
  std::vector<int> parts(mu.part(1), 0);
  for (int j = 1; j <= mu.part(1); ++j) {
    int len = 0;
    for (int i = 1; i <= mu.length(); ++i)
      if (mu.part(i) >= j) ++len;
    parts[j - 1] = len;
  }
  return Partition(parts);
}

bool fits_staircase(const StrictPartition& lambda, int n) {
  if (lambda.length() > n) return false;
  for (int i = 1; i <= lambda.length(); ++i)
    if (lambda.part(i) > n - i + 1) return false;
  return true;
}

bool fits_box(const Partition& mu, int n) {
  return mu.length() <= n && mu.part(1) <= n;
}

StrictPartition staircase(int n) {
  std::vector<int> parts;
  for (int i = n; i >= 1; --i) parts.push_back(i);
  return StrictPartition(parts);
}

StrictPartition complement_strict(const StrictPartition& lambda, int n) {
  if (!fits_staircase(lambda, n))
    throw InvalidInput("strict partition not contained in staircase(" +
                       std::to_string(n) + "): " + lambda.to_string());
  std::vector<bool> used(n + 1, false);
  for (int p : lambda.parts()) used[p] = true;
  std::vector<int> parts;
  for (int v = n; v >= 1; --v)
    if (!used[v]) parts.push_back(v);
  return StrictPartition(parts);
}

Partition complement_box(const Partition& mu, int n) {
  if (!fits_box(mu, n))
    throw InvalidInput("partition not contained in (" + std::to_string(n) +
                       "^" + std::to_string(n) + "): " + mu.to_string());
  std::vector<int> parts;
  for (int i = n; i >= 1; --i) parts.push_back(n - mu.part(i));
  return Partition(parts);
}

std::optional<std::pair<int, StrictPartition>> straighten(
    const IntSequence& k) {
  std::vector<int> entries;
  for (int v : k) {
    if (v < 0) throw InvalidInput("straighten entries must be nonnegative");
    if (v > 0) entries.push_back(v);
  }
  // Parity of inversions relative to strictly decreasing order.
  int sign = 1;
  for (size_t i = 0; i < entries.size(); ++i)
    for (size_t j = i + 1; j < entries.size(); ++j) {
      if (entries[i] == entries[j]) return std::nullopt;
      if (entries[i] < entries[j]) sign = -sign;
    }
  std::sort(entries.begin(), entries.end(), std::greater<int>());
  return std::make_pair(sign, StrictPartition(entries));
}

namespace {

void gen_partitions(long n, int max_part, int max_len, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(acc);
    return;
  }
  if (max_len == 0) return;
  int hi = static_cast<int>(std::min<long>(n, max_part));
  for (int p = hi; p >= 1; --p) {
    acc.push_back(p);
    gen_partitions(n - p, p, max_len - 1, acc, out);
    acc.pop_back();
  }
}

void gen_strict(long n, int max_part, std::vector<int>& acc,
                std::vector<StrictPartition>& out) {
  if (n == 0) {
    out.emplace_back(acc);
    return;
  }
  int hi = static_cast<int>(std::min<long>(n, max_part));
  for (int p = hi; p >= 1; --p) {
    acc.push_back(p);
    gen_strict(n - p, p - 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(long n, int max_part, int max_len) {
  if (n < 0) return {};
  if (max_part < 0) max_part = static_cast<int>(n);
  if (max_len < 0) max_len = static_cast<int>(n);
  std::vector<Partition> out;
  std::vector<int> acc;
  gen_partitions(n, max_part, max_len, acc, out);
  return out;
}

std::vector<StrictPartition> strict_partitions_of(long n, int max_part) {
  if (n < 0) return {};
  if (max_part < 0) max_part = static_cast<int>(n);
  std::vector<StrictPartition> out;
  std::vector<int> acc;
  gen_strict(n, max_part, acc, out);
  return out;
}

std::vector<StrictPartition> strict_partitions_in_staircase(int n) {
  std::vector<StrictPartition> out;
  long total = static_cast<long>(n) * (n + 1) / 2;
  for (long w = 0; w <= total; ++w)
    for (const auto& lam : strict_partitions_of(w, n))
      if (fits_staircase(lam, n)) out.push_back(lam);
  return out;
}

std::vector<Partition> partitions_in_box(long w, int n) {
  std::vector<Partition> out;
  for (const auto& mu : partitions_of(w, n, n)) out.push_back(mu);
  return out;
}

}  // namespace qschur
