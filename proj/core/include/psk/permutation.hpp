#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "psk/partition.hpp"
#include "psk/random.hpp"

namespace psk {

/// An element of Sₙ in one-line notation: position i (1-based) holds g(i).
class Permutation {
 public:
  /// Throws InvalidArgument unless `images` is a bijection of {1..n} with n ≥ 1.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  /// Accepts whitespace- and/or comma-separated images, e.g. "2 1 3" or "2,1,3".
  /// Throws ParseError carrying the offending character offset.
  static Permutation parse(std::string_view text);

  int degree() const noexcept { return static_cast<int>(images_.size()); }

  /// g(i), 1-based.
  int operator()(int i) const noexcept { return images_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  /// Space-separated images, e.g. "2 1 3".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<int> images, Unchecked) : images_(std::move(images)) {}

  std::vector<int> images_;

  friend Permutation compose(const Permutation& g, const Permutation& h);
  friend Permutation inverse(const Permutation& g);
  friend Permutation transposition(int n, int i, int j);
  friend Permutation random_uniform(int n, Rng& rng);
  friend std::vector<Permutation> enumerate_group(int n, int cap);
  friend Permutation permutation_with_cycle_type(const Partition& mu);
};

/// (g∘h)(i) = g(h(i)). Throws DegreeMismatch.
Permutation compose(const Permutation& g, const Permutation& h);

Permutation inverse(const Permutation& g);

/// The transposition swapping i and j (1-based, i ≠ j) in Sₙ.
Permutation transposition(int n, int i, int j);

/// Disjoint cycles, each starting at its smallest element, ordered by that element.
/// Fixed points are included as 1-cycles.
std::vector<std::vector<int>> cycles(const Permutation& g);

/// Total number of cycles, fixed points included.
int cycle_count(const Permutation& g);

/// μ(g): cycle lengths sorted descending.
Partition cycle_type(const Permutation& g);

/// Cycle type of g∘h⁻¹.
Partition quotient_cycle_type(const Permutation& g, const Permutation& h);

/// d_C(g,h) = n − (number of cycles of g∘h⁻¹). Throws DegreeMismatch.
int cayley_distance(const Permutation& g, const Permutation& h);

inline constexpr int kDefaultEnumerationCap = 8;

/// All n! elements in lexicographic order of one-line notation. Throws CapExceeded when n > cap.
std::vector<Permutation> enumerate_group(int n, int cap = kDefaultEnumerationCap);

/// Uniform draw from Sₙ (Fisher–Yates).
Permutation random_uniform(int n, Rng& rng);

/// A canonical element of the conjugacy class μ: consecutive blocks 1..μ₁, μ₁+1..μ₁+μ₂, … as cycles.
Permutation permutation_with_cycle_type(const Partition& mu);

}  // namespace psk
