#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "psk/partition.hpp"
#include "psk/young.hpp"

namespace psk {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// p_d(x) = Σ x_j^d. Requires d ≥ 1.
double power_sum(int d, std::span<const double> x);

/// p_μ(x) = ∏ p_{μ_i}(x).
double power_sum_partition(const Partition& mu, std::span<const double> x);

/// tr(X^d), the power sum of the eigenvalues of X.
Complex power_sum_matrix(int d, const ComplexMatrix& X);

/// tr(X), tr(X²), …, tr(X^max_degree); element d−1 holds p_d.
std::vector<Complex> power_sums_matrix(int max_degree, const ComplexMatrix& X);

/// Σ over SSYT T of shape λ with entries in 1..m of x^T. Enumerates tableaux; test-scale only.
double schur_ssyt(const Partition& lambda, std::span<const double> x, double limit = kSsytEnumerationLimit);

/// The same tableau sum organised by the cells holding the largest letter: strips off one
/// horizontal strip per variable. Polynomial in |λ| and m, so usable well beyond enumeration.
double schur_branching(const Partition& lambda, std::span<const double> x);

/// det(x_i^{λ_j+m−j}) / det(x_i^{m−j}). The entries of x must be pairwise at least `min_gap`
/// apart, otherwise InvalidArgument is thrown. Numerically fragile; kept as a cross-check.
double schur_weyl_determinant(const Partition& lambda, std::span<const double> x, double min_gap = 1e-8);

inline constexpr int kSchurCharacterCap = 14;

/// s_λ = Σ_{μ⊢n} χ_λ(μ) p_μ / z_μ given p_d at element d−1 of `power_sums` (at least |λ| entries).
Complex schur_from_power_sums(const Partition& lambda, std::span<const Complex> power_sums,
                              int cap = kSchurCharacterCap);

/// s_λ of the eigenvalues of X, through traces of matrix powers; no eigensolver involved.
Complex schur_from_characters(const Partition& lambda, const ComplexMatrix& X, int cap = kSchurCharacterCap);

/// s_λ(x) through the character expansion of real power sums.
double schur_from_characters(const Partition& lambda, std::span<const double> x, int cap = kSchurCharacterCap);

}  // namespace psk
