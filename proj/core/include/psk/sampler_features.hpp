#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "psk/kernel.hpp"
#include "psk/partition.hpp"
#include "psk/permutation.hpp"
#include "psk/random.hpp"
#include "psk/symfunc.hpp"

namespace psk {

/// m×m matrix with i.i.d. entries N(0,½) + i·N(0,½).
ComplexMatrix sample_ginibre(int m, Rng& rng);

/// diag(√z₁, …, √z_m). Throws InvalidArgument on a negative entry.
ComplexMatrix scaling_matrix(std::span<const double> z);
ComplexMatrix scaling_matrix(const KernelParams& params);

/// One term of the random-feature expansion
///   f(g) ≈ L^{-1/2} Σ_j (w₁ Re a_j + w₂ Im a_j) χ_{λ_j}(g u_j),  a_j = s_{λ_j}(A Z_j).
struct FeatureRecord {
  Partition shape;   // RSK shape of a uniform v_j
  Permutation shift; // u_j
  Complex amplitude; // s_λ(A Z_j)
  double w1 = 0;
  double w2 = 0;
};

struct FeatureBasis {
  std::vector<FeatureRecord> features;
  KernelParams params;
  std::uint64_t seed = 0;
};

inline constexpr int kFeatureSamplingCap = 14;

/// Draws L features. Feature j uses substream (seed, j) and consumes, in order: v_j, u_j, the
/// 2m² normals of Z_j, then w₁, w₂. The result does not depend on `threads`.
/// Throws CapExceeded when n > cap or InvalidArgument when L = 0.
FeatureBasis build_feature_basis(const KernelParams& params, std::size_t L, std::uint64_t seed,
                                 int threads = 1, int cap = kFeatureSamplingCap);

/// Real-valued evaluation of the approximate sample path at g.
double evaluate_feature_gp(const FeatureBasis& basis, const Permutation& g);

/// JSON document: {"header": {n, m, z, normalized, L, seed}, "features": [{shape, shift,
/// amplitude_re, amplitude_im, w1, w2}, …]}. Doubles are written round-trip exact.
std::string feature_basis_to_json(const FeatureBasis& basis);

/// Inverse of feature_basis_to_json. Throws ParseError or InvalidArgument.
FeatureBasis feature_basis_from_json(const std::string& text);

/// Monte Carlo check of E|s_λ(AZ)|² = n!·s_λ(AA*)/d_λ with A A* = diag(z).
struct GinibreSchurReport {
  double estimate = 0;
  double standard_error = 0;
  double exact = 0;
  bool pass = false;  // |estimate − exact| ≤ 4 SE
  double mean_re_squared = 0;
  double mean_im_squared = 0;
  double symmetry_standard_error = 0;  // SE of the mean of (Re s)² − (Im s)²
  bool symmetry_pass = false;          // |mean difference| ≤ 4 SE
};

GinibreSchurReport verify_ginibre_schur(const Partition& lambda, const KernelParams& params, std::size_t samples,
                                        std::uint64_t seed, int cap = kFeatureSamplingCap);

/// One selected irreducible in the truncated character expansion.
struct TruncatedComponent {
  Partition shape;
  double coefficient = 0;  // a_λ = s_λ(z)
  std::uint64_t dim = 0;   // d_λ
  std::vector<Permutation> shifts;
  std::vector<double> weights;  // ~ N(0, a_λ/d_λ)
};

/// f(g) ≈ Σ_r L^{-1/2} Σ_l w_l d_λ χ_λ(g u_l).
struct TruncatedBasis {
  std::vector<TruncatedComponent> components;
  KernelParams params;
  std::size_t L = 0;
  std::uint64_t seed = 0;
};

struct ShapeScore {
  Partition shape;
  double coefficient = 0;
  std::uint64_t dim = 0;
};

/// Every λ ⊢ n with a_λ = s_λ(z) > 0, sorted by a_λ·d_λ descending; ties keep descending
/// lexicographic order of λ.
std::vector<ShapeScore> rank_shapes(const KernelParams& params, int cap = kSchurCharacterCap);

/// Keeps the top min(R, #ranked) shapes. Component r uses substream (seed, r).
TruncatedBasis build_truncated_basis(const KernelParams& params, std::size_t R, std::size_t L, std::uint64_t seed,
                                     int cap = kSchurCharacterCap);

double evaluate_truncated_gp(const TruncatedBasis& basis, const Permutation& g);

}  // namespace psk
