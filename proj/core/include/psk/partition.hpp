#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace psk {

/// A weakly decreasing sequence of positive integers. Used both as the cycle type of a
/// permutation and as the Young diagram labelling an irreducible representation.
class Partition {
 public:
  Partition() = default;

  /// Throws InvalidArgument unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  /// Sorts `parts` descending first; zeros are dropped.
  static Partition from_unsorted(std::vector<int> parts);

  /// Parses "3,2,1". Throws ParseError.
  static Partition parse(std::string_view text);

  std::span<const int> parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Row `i` (0-based); 0 past the last row.
  int operator[](int i) const noexcept { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  /// Transposed diagram.
  Partition conjugate() const;

  /// "3,2,1"; the empty partition prints as "".
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  /// Lexicographic on parts.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Multiplicities (c₁,…,cₙ): c_j parts equal to j. Index 0 is unused.
struct CycleCounts {
  std::vector<int> counts;

  int weight() const noexcept;
  int count(int j) const noexcept {
    return j >= 1 && j < static_cast<int>(counts.size()) ? counts[static_cast<std::size_t>(j)] : 0;
  }
};

CycleCounts to_cycle_counts(const Partition& mu);
Partition to_partition(const CycleCounts& counts);

/// All partitions of n, in descending lexicographic order: (n), (n-1,1), ..., (1ⁿ).
/// With `max_length`, only those with at most that many parts.
std::vector<Partition> partitions_of(int n, std::optional<int> max_length = std::nullopt);

/// n! for 0 ≤ n ≤ 20; throws CapExceeded beyond.
std::uint64_t factorial(int n);

/// z_μ = ∏_j j^{c_j} c_j!, the order of the centralizer of a permutation with cycle type μ.
std::uint64_t centralizer_size(const Partition& mu);

/// n!/z_μ: the number of permutations with cycle type μ.
std::uint64_t class_size(const Partition& mu);

}  // namespace psk
