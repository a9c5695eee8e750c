#include "psk/sampler_exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include "psk/errors.hpp"

namespace psk {

const char* to_string(FactorMethod method) noexcept {
  return method == FactorMethod::spectral ? "spectral" : "cholesky-jitter";
}

FactorizedGram factorize(const GramMatrix& gram, FactorMethod method, int cap, double tolerance_per_dim) {
  if (gram.params.n() > cap)
    throw CapExceeded("exact sampling on S_" + std::to_string(gram.params.n()) + " exceeds the cap n <= " +
                      std::to_string(cap));
  const Eigen::MatrixXd& K = gram.values;
  const auto dim = K.rows();
  const double scale = std::max(1.0, K.cwiseAbs().maxCoeff());
  if (K.cols() != dim || (K - K.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw InvalidArgument("factorize: Gram matrix is not symmetric");

  FactorizedGram fg{gram, Eigen::MatrixXd(), method};
  if (method == FactorMethod::spectral) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(K);
    if (solver.info() != Eigen::Success) throw Error("symmetric eigensolver did not converge");
    Eigen::VectorXd eig = solver.eigenvalues();
    const double floor = -tolerance_per_dim * static_cast<double>(dim);
    if (eig.minCoeff() < floor)
      throw IndefiniteMatrix("Gram matrix has eigenvalue " + std::to_string(eig.minCoeff()) + " below " +
                             std::to_string(floor));
    // Below dim·ε·λ_max an eigenvalue is rounding noise; dropping it keeps rank-deficient Grams
    // (z = (1) has rank one) from leaking √ε-sized components into samples.
    const double noise = static_cast<double>(dim) * std::numeric_limits<double>::epsilon() * eig.maxCoeff();
    eig = (eig.array() <= noise).select(0.0, eig).cwiseSqrt();
    fg.root = eig.asDiagonal() * solver.eigenvectors().transpose();
  } else {
    const double jitter = 1e-10 * K.trace() / static_cast<double>(dim);
    Eigen::MatrixXd shifted = K;
    shifted.diagonal().array() += jitter;
    Eigen::LLT<Eigen::MatrixXd> llt(shifted);
    if (llt.info() != Eigen::Success) throw IndefiniteMatrix("Cholesky factorisation failed");
    fg.root = llt.matrixU();
  }
  return fg;
}

double reconstruction_residual(const FactorizedGram& fg) {
  return (fg.root.transpose() * fg.root - fg.gram.values).cwiseAbs().maxCoeff();
}

Eigen::MatrixXd sample(const FactorizedGram& fg, std::size_t count, std::uint64_t seed, int threads) {
  const auto dim = fg.root.cols();
  const auto rank = fg.root.rows();
  Eigen::MatrixXd out(dim, static_cast<Eigen::Index>(count));
  const Eigen::MatrixXd rootT = fg.root.transpose();
  auto run = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < count; i += stride) {
      Rng rng = make_substream(seed, i);
      const std::vector<double> eps = sample_standard_normal(static_cast<std::size_t>(rank), rng);
      out.col(static_cast<Eigen::Index>(i)).noalias() = rootT * Eigen::Map<const Eigen::VectorXd>(eps.data(), rank);
    }
  };
  const int workers = std::max(1, threads);
  if (workers == 1) {
    run(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, static_cast<std::size_t>(w), static_cast<std::size_t>(workers));
  }
  return out;
}

}  // namespace psk
