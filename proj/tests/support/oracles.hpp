#pragma once

// Independent reference computations used only by tests. None of them calls the code path it
// is used to check.

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "psk/partition.hpp"
#include "psk/permutation.hpp"
#include "psk/young.hpp"

namespace psk::oracle {

/// Number of standard Young tableaux: the largest entry n sits in a removable corner, so
/// f(λ) = Σ over corners c of f(λ − c).
inline std::uint64_t count_standard_tableaux(std::vector<int> shape) {
  static std::map<std::vector<int>, std::uint64_t> memo;
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  if (auto it = memo.find(shape); it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    const bool corner = i + 1 == shape.size() || shape[i + 1] < shape[i];
    if (!corner) continue;
    auto smaller = shape;
    --smaller[i];
    total += count_standard_tableaux(smaller);
  }
  memo.emplace(shape, total);
  return total;
}

/// Longest strictly increasing subsequence, quadratic dynamic program.
inline int longest_increasing_subsequence(const Permutation& g) {
  const int n = g.degree();
  std::vector<int> best(static_cast<std::size_t>(n), 1);
  int overall = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j)
      if (g(j + 1) < g(i + 1)) best[static_cast<std::size_t>(i)] = std::max(best[static_cast<std::size_t>(i)], best[static_cast<std::size_t>(j)] + 1);
    overall = std::max(overall, best[static_cast<std::size_t>(i)]);
  }
  return overall;
}

/// Brute-force Schur value: sum over all fillings of the diagram with 1..m, keeping the
/// semistandard ones. Exponential; tiny shapes only.
inline double schur_by_fillings(const Partition& lambda, const std::vector<double>& x) {
  const int m = static_cast<int>(x.size());
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) cells.emplace_back(i, j);
  std::vector<int> fill(cells.size(), 1);
  double total = 0.0;
  while (true) {
    std::map<std::pair<int, int>, int> at;
    for (std::size_t c = 0; c < cells.size(); ++c) at[cells[c]] = fill[c];
    bool ok = true;
    for (auto [cell, v] : at) {
      auto [i, j] = cell;
      if (j > 0 && at[{i, j - 1}] > v) ok = false;
      if (i > 0 && at[{i - 1, j}] >= v) ok = false;
    }
    if (ok) {
      double mono = 1.0;
      for (int v : fill) mono *= x[static_cast<std::size_t>(v - 1)];
      total += mono;
    }
    std::size_t k = 0;
    while (k < fill.size() && fill[k] == m) fill[k++] = 1;
    if (k == fill.size()) break;
    ++fill[k];
  }
  return total;
}

/// Character table of Sₙ recovered from p_μ(x) = Σ_λ χ_λ(μ) s_λ(x): evaluate both bases at
/// many random points (Schur values by brute-force fillings), solve the least-squares system
/// and round. Rows follow partitions_of(n), columns likewise.
inline std::vector<std::vector<std::int64_t>> character_table_by_frobenius_inversion(int n, std::uint64_t seed,
                                                                                     double* worst_rounding = nullptr) {
  const auto parts = partitions_of(n);
  const auto k = static_cast<Eigen::Index>(parts.size());
  const Eigen::Index points = 3 * k;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.2, 1.2);
  Eigen::MatrixXd S(points, k), P(points, k);
  for (Eigen::Index r = 0; r < points; ++r) {
    std::vector<double> x(static_cast<std::size_t>(n));
    for (auto& v : x) v = unif(rng);
    for (Eigen::Index c = 0; c < k; ++c) {
      S(r, c) = schur_by_fillings(parts[static_cast<std::size_t>(c)], x);
      double p = 1.0;
      for (int part : parts[static_cast<std::size_t>(c)].parts()) {
        double s = 0.0;
        for (double v : x) s += std::pow(v, part);
        p *= s;
      }
      P(r, c) = p;
    }
  }
  // Column μ of P equals S · (χ_λ(μ))_λ.
  const Eigen::MatrixXd chi = S.colPivHouseholderQr().solve(P);
  std::vector<std::vector<std::int64_t>> table(static_cast<std::size_t>(k), std::vector<std::int64_t>(static_cast<std::size_t>(k)));
  double worst = 0.0;
  for (Eigen::Index l = 0; l < k; ++l)
    for (Eigen::Index mu = 0; mu < k; ++mu) {
      const double v = chi(l, mu);
      table[static_cast<std::size_t>(l)][static_cast<std::size_t>(mu)] = std::llround(v);
      worst = std::max(worst, std::abs(v - std::round(v)));
    }
  if (worst_rounding) *worst_rounding = worst;
  return table;
}

}  // namespace psk::oracle
