#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "psk/partition.hpp"

namespace psk {

/// Cells (i,j), 0-based, with j < shape[i].
struct YoungDiagram {
  Partition shape;

  bool contains(int row, int col) const noexcept { return row >= 0 && col >= 0 && col < shape[row]; }
  int arm(int row, int col) const noexcept { return shape[row] - col - 1; }
  int leg(int row, int col) const;
  int hook(int row, int col) const { return arm(row, col) + leg(row, col) + 1; }
  int content(int row, int col) const noexcept { return col - row; }
};

/// Rows of entries; rows weakly increase, columns strictly increase, values in 1..m.
struct SemistandardTableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  /// t_j: number of cells holding j, for j = 1..m (index 0 unused).
  std::vector<int> content_counts(int m) const;
};

/// d_λ via the hook length formula, exact. Throws CapExceeded when |λ| > 20.
std::uint64_t dimension(const Partition& lambda);

/// s_λ(1,…,1) with m ones by the hook-content formula; the number of SSYT of shape λ over {1..m}.
double ssyt_count(const Partition& lambda, int m);

inline constexpr double kSsytEnumerationLimit = 1e7;

/// Every SSYT of shape λ over {1..m}, in row-major backtracking order.
/// Throws CapExceeded if the count would exceed `limit`.
std::vector<SemistandardTableau> enumerate_ssyt(const Partition& lambda, int m,
                                                double limit = kSsytEnumerationLimit);

/// Visits every SSYT without materialising the list. Same guard as enumerate_ssyt.
template <class Visitor>
void for_each_ssyt(const Partition& lambda, int m, Visitor&& visit, double limit = kSsytEnumerationLimit);

/// d_λ² / n!. Throws InvalidArgument when |λ| ≠ n.
double plancherel_probability(const Partition& lambda, int n);

namespace detail {
void check_ssyt_budget(const Partition& lambda, int m, double limit);
}

template <class Visitor>
void for_each_ssyt(const Partition& lambda, int m, Visitor&& visit, double limit) {
  detail::check_ssyt_budget(lambda, m, limit);
  if (lambda.length() > m) return;
  SemistandardTableau t{lambda, {}};
  for (int r = 0; r < lambda.length(); ++r) t.rows.emplace_back(static_cast<std::size_t>(lambda[r]), 0);
  const int cells = lambda.weight();
  // Row-major cell order; each cell's value is bounded below by its left and upper neighbours.
  auto rec = [&](auto&& self, int idx, int row, int col) -> void {
    if (idx == cells) {
      visit(static_cast<const SemistandardTableau&>(t));
      return;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, t.rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - 1)]);
    if (row > 0) lo = std::max(lo, t.rows[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)] + 1);
    // Column strictness leaves room for the cells below: row r needs value ≤ m − (rows below in this column).
    int below = 0;
    while (row + below + 1 < lambda.length() && lambda[row + below + 1] > col) ++below;
    const int hi = m - below;
    const bool row_end = col + 1 == lambda[row];
    for (int v = lo; v <= hi; ++v) {
      t.rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = v;
      if (row_end)
        self(self, idx + 1, row + 1, 0);
      else
        self(self, idx + 1, row, col + 1);
    }
  };
  rec(rec, 0, 0, 0);
}

}  // namespace psk
