#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qschur/rational.hpp"

namespace qschur {

// Raw index sequence: nonnegative integers, order significant, repeats allowed.
using IntSequence = std::vector<int>;

/// Weakly decreasing sequence of positive integers, stored without trailing
/// zeros. Value type; immutable after construction.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  long weight() const;
  bool empty() const { return parts_.empty(); }
  // 1-based part accessor; zero beyond the length.
  int part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
  }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }

  // Canonical text: comma-separated decreasing parts, "-" for the empty
  // partition. parse() also accepts exponent shorthand like "5^3,3,1^3".
  std::string to_string() const;
  static Partition parse(std::string_view text);

 private:
  std::vector<int> parts_;
};

/// Strictly decreasing positive parts.
class StrictPartition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  long weight() const;
  bool empty() const { return parts_.empty(); }
  int part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
  }

  Partition as_partition() const { return Partition(parts_); }

  bool operator==(const StrictPartition& o) const { return parts_ == o.parts_; }
  bool operator!=(const StrictPartition& o) const { return !(*this == o); }

  std::string to_string() const { return as_partition().to_string(); }
  static StrictPartition parse(std::string_view text);

 private:
  std::vector<int> parts_;
};

/// Frobenius coordinates (alpha | beta) of a partition; rank = Durfee rank.
struct FrobeniusForm {
  std::vector<int> alpha;  // arm lengths, strictly decreasing, >= 0
  std::vector<int> beta;   // leg lengths, strictly decreasing, >= 0
  int rank() const { return static_cast<int>(alpha.size()); }
  bool operator==(const FrobeniusForm& o) const {
    return alpha == o.alpha && beta == o.beta;
  }
};

// Total order refining dominance within each weight: heavier weight first,
// then descending lexicographic on parts. Used as the canonical tie-break
// for triangular solves and for all deterministic map orderings.
bool canonical_less(const std::vector<int>& a, const std::vector<int>& b);

struct PartitionOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    return canonical_less(a.parts(), b.parts());
  }
};
struct StrictPartitionOrder {
  bool operator()(const StrictPartition& a, const StrictPartition& b) const {
    return canonical_less(a.parts(), b.parts());
  }
};

// mu <= nu in dominance order (same weight required).
bool dominance_leq(const Partition& mu, const Partition& nu);

FrobeniusForm frobenius(const Partition& mu);
Partition partition_from_frobenius(const FrobeniusForm& f);

// A = (alpha_i + 1), B = (beta_i).
std::pair<IntSequence, IntSequence> ab_sequences(const FrobeniusForm& f);
// C = (beta_i + 1), D = (alpha_i).
std::pair<IntSequence, IntSequence> cd_sequences(const FrobeniusForm& f);

Partition conjugate(const Partition& mu);

// lambda contained in the staircase (n, n-1, ..., 1).
bool fits_staircase(const StrictPartition& lambda, int n);
// mu contained in the n x n box.
bool fits_box(const Partition& mu, int n);

StrictPartition staircase(int n);

// Complement of lambda in {1, ..., n}; requires fits_staircase.
StrictPartition complement_strict(const StrictPartition& lambda, int n);
// Box complement (n - mu_n, ..., n - mu_1); requires fits_box.
Partition complement_box(const Partition& mu, int n);

// Drops zero entries, then sorts strictly decreasing. Returns the sign of the
// sorting permutation, or nullopt if a positive value repeats.
std::optional<std::pair<int, StrictPartition>> straighten(const IntSequence& k);

// All partitions of n with parts <= max_part and at most max_len parts.
// Ordered canonically (descending).
std::vector<Partition> partitions_of(long n, int max_part = -1,
                                     int max_len = -1);
std::vector<StrictPartition> strict_partitions_of(long n, int max_part = -1);
// Strict partitions contained in the staircase (n, ..., 1), all weights.
std::vector<StrictPartition> strict_partitions_in_staircase(int n);
// Partitions of weight w contained in the n x n box.
std::vector<Partition> partitions_in_box(long w, int n);

}  // namespace qschur
