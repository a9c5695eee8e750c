#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "psk/kernel.hpp"

namespace psk {

enum class FactorMethod { spectral, cholesky_jitter };

const char* to_string(FactorMethod method) noexcept;

/// A Gram matrix together with a root R such that RᵀR reproduces it.
struct FactorizedGram {
  GramMatrix gram;
  Eigen::MatrixXd root;
  FactorMethod method = FactorMethod::spectral;
};

inline constexpr int kExactSamplingCap = 7;

/// Spectral: K = V diag(λ) Vᵀ, eigenvalues in [−tol·dim, dim·ε·λ_max] set to zero, R = diag(√λ) Vᵀ.
/// Cholesky: K + εI = LLᵀ with ε = 1e−10·tr(K)/dim, R = Lᵀ.
/// Throws IndefiniteMatrix below tolerance, CapExceeded when the group degree exceeds `cap`,
/// InvalidArgument when K is not symmetric.
FactorizedGram factorize(const GramMatrix& gram, FactorMethod method = FactorMethod::spectral,
                         int cap = kExactSamplingCap, double tolerance_per_dim = 1e-9);

/// max |RᵀR − K|.
double reconstruction_residual(const FactorizedGram& fg);

/// `count` draws f = Rᵀε with ε ~ N(0, I), as columns of a dim × count matrix.
/// Draw i uses substream (seed, i), so output is independent of `threads`.
Eigen::MatrixXd sample(const FactorizedGram& fg, std::size_t count, std::uint64_t seed, int threads = 1);

}  // namespace psk
