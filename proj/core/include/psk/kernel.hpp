#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "psk/partition.hpp"
#include "psk/permutation.hpp"
#include "psk/random.hpp"

namespace psk {

/// Parameters of the power-sum kernel k_z on Sₙ, with the per-cycle-length factors p_j(z)
/// precomputed so that evaluation never touches z again.
class KernelParams {
 public:
  /// Throws InvalidArgument if z is empty, has a negative or non-finite entry, or is all zero.
  /// With `normalize`, z is divided by |z|₁ so that k(g,g) = 1.
  KernelParams(std::vector<double> z, int n, bool normalize = false);

  /// Rebuilds parameters written out earlier: z is taken as is and `normalized` only records
  /// the flag (checked against |z|₁ = 1 within 1e-12).
  static KernelParams restore(std::vector<double> z, int n, bool normalized);

  std::span<const double> z() const noexcept { return z_; }
  int n() const noexcept { return n_; }
  int m() const noexcept { return static_cast<int>(z_.size()); }
  bool normalized() const noexcept { return normalized_; }

  /// p_j(z) for 1 ≤ j ≤ n.
  double factor(int j) const { return factors_[static_cast<std::size_t>(j - 1)]; }

  /// k(g,g) = |z|₁ⁿ.
  double variance() const noexcept { return variance_; }

  /// Number of strictly positive entries of z.
  int positive_count() const noexcept;

 private:
  struct Restore {};
  KernelParams(std::vector<double> z, int n, bool normalized, Restore);

  std::vector<double> z_;
  int n_;
  bool normalized_;
  std::vector<double> factors_;
  double variance_;
};

/// k_z at a class: ∏_j p_j(z)^{c_j} over the cycle counts of μ. Requires |μ| = n.
double kernel_at_class(const KernelParams& params, const Partition& mu);

/// k_z(g,h) = ∏_j p_j(z)^{c_j} where c_j counts the j-cycles of g∘h⁻¹.
/// Throws DegreeMismatch if either degree differs from params.n().
double kernel_eval(const KernelParams& params, const Permutation& g, const Permutation& h);

inline constexpr int kCharacterExpansionCap = 14;

/// Σ_{λ⊢n, ℓ(λ)≤m} χ_λ(g∘h⁻¹)·s_λ(z), with s_λ from the tableau sum. Independent of the
/// product formula and used to check it.
double kernel_eval_via_characters(const KernelParams& params, const Permutation& g, const Permutation& h);

struct GramMatrix {
  std::vector<Permutation> points;
  Eigen::MatrixXd values;
  KernelParams params;
};

/// K_{ij} = k(points[i], points[j]). Rows are split across `threads` workers; the result does
/// not depend on the worker count.
GramMatrix gram(const KernelParams& params, std::vector<Permutation> points, int threads = 1);

/// Smallest eigenvalue of a symmetric matrix.
double min_eigenvalue(const Eigen::MatrixXd& symmetric);

/// min eigenvalue ≥ −tolerance_per_dim · dim.
bool is_psd(const GramMatrix& gram, double tolerance_per_dim = 1e-9);

/// g∘τ for a transposition τ drawn uniformly among those whose two points share a cycle of g,
/// which splits that cycle and moves one Cayley step toward e. Empty when g = e.
std::optional<Permutation> splitting_step(const Permutation& g, Rng& rng);

struct MonotonicityReport {
  std::size_t steps = 0;
  std::size_t violations = 0;
  bool strict = false;  // at least two positive z_j: every step must strictly increase k(·,e)
  double smallest_ratio = 0;  // min over steps of k(next,e)/k(current,e)
  bool pass = false;
};

/// Walks `trials` random splitting paths from g down to e and checks that k(·,e) never
/// decreases (strictly increases when two z_j are positive). Requires m ≥ 2.
MonotonicityReport check_monotonicity(const KernelParams& params, const Permutation& g, int trials, Rng& rng);

/// Per-class kernel values k(g,e) plus the quotient of the Cayley graph by conjugacy:
/// classes μ and ν are adjacent when ν comes from μ by splitting one part in two.
struct ClassKernelTable {
  std::vector<Partition> classes;  // partitions_of(n) order
  std::vector<double> values;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (coarser, finer) index pairs
};

inline constexpr int kClassTableCap = 12;

ClassKernelTable class_kernel_table(const KernelParams& params, int cap = kClassTableCap);

/// Split/merge adjacency between cycle types of Sₙ, as (coarser, finer) indices into partitions_of(n).
std::vector<std::pair<std::size_t, std::size_t>> class_graph_edges(const std::vector<Partition>& classes);

}  // namespace psk
