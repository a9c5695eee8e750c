#include <cmath>

#include "doctest.h"
#include "psk/errors.hpp"
#include "psk/sampler_exact.hpp"
#include "psk/stats.hpp"

using namespace psk;

TEST_CASE("factorize trivial cases") {
  const KernelParams p({0.5, 0.5}, 3);
  const auto one = factorize(gram(p, {Permutation::identity(3)}));
  CHECK(one.root.rows() == 1);
  CHECK(std::abs(one.root(0, 0)) == doctest::Approx(1.0));

  const auto fg = factorize(gram(p, enumerate_group(3)));
  CHECK(reconstruction_residual(fg) < 1e-10);

  // Identity covariance: white noise with m large enough that only e has nonzero kernel is
  // not reachable exactly, so build the identity Gram directly.
  GramMatrix id{{Permutation::identity(2), Permutation({2, 1})}, Eigen::MatrixXd::Identity(2, 2), KernelParams({1.0}, 2)};
  const auto fid = factorize(id);
  CHECK(reconstruction_residual(fid) < 1e-15);
  CHECK((fid.root.transpose() * fid.root - Eigen::MatrixXd::Identity(2, 2)).norm() < 1e-15);
}

TEST_CASE("factorize error paths") {
  const KernelParams p({0.5, 0.5}, 3);
  GramMatrix bad{enumerate_group(3), Eigen::MatrixXd::Identity(6, 6), p};
  bad.values(0, 0) = -1.0;
  CHECK_THROWS_AS(factorize(bad), IndefiniteMatrix);
  bad.values(0, 0) = 1.0;
  bad.values(0, 1) = 0.3;
  CHECK_THROWS_AS(factorize(bad), InvalidArgument);
  CHECK_THROWS_AS(factorize(gram(KernelParams({1.0}, 8), {Permutation::identity(8)})), CapExceeded);
}

TEST_CASE("cholesky path") {
  const auto fg = factorize(gram(KernelParams({0.6, 0.3, 0.1}, 4), enumerate_group(4)), FactorMethod::cholesky_jitter);
  CHECK(fg.method == FactorMethod::cholesky_jitter);
  CHECK(reconstruction_residual(fg) < 1e-8);
  // Rank one: jitter rescues Cholesky.
  const auto rank_one = factorize(gram(KernelParams({1.0}, 3), enumerate_group(3)), FactorMethod::cholesky_jitter);
  CHECK(reconstruction_residual(rank_one) < 1e-8);
}

TEST_CASE("standard normal stream") {
  Rng a(5), b(5);
  CHECK(sample_standard_normal(100, a) == sample_standard_normal(100, b));
  Rng rng(77);
  const auto xs = sample_standard_normal(1000000, rng);
  double mean = 0, sq = 0;
  for (double x : xs) mean += x;
  mean /= 1e6;
  for (double x : xs) sq += (x - mean) * (x - mean);
  CHECK(std::abs(mean) < 0.005);
  CHECK(std::abs(sq / 1e6 - 1.0) < 0.01);
  const std::vector<double> head(xs.begin(), xs.begin() + 100000);
  CHECK(stats::ks_statistic_normal(head) < stats::ks_critical_99(head.size()));
}

TEST_CASE("exact samples reproduce the covariance") {
  const KernelParams p({0.5, 0.5}, 3);
  const auto fg = factorize(gram(p, enumerate_group(3)));
  const Eigen::MatrixXd draws = sample(fg, 100000, 2024);
  const Eigen::MatrixXd emp = draws * draws.transpose() / static_cast<double>(draws.cols());
  CHECK((emp - fg.gram.values).cwiseAbs().maxCoeff() < 0.05);
  // f(e) variance
  CHECK(emp(0, 0) == doctest::Approx(1.0).epsilon(0.02));
  // Stationarity: every marginal variance is the same.
  for (Eigen::Index i = 0; i < 6; ++i) CHECK(std::abs(emp(i, i) - 1.0) < 0.02);
}

TEST_CASE("sampling is deterministic and thread independent") {
  const auto fg = factorize(gram(KernelParams({0.7, 0.3}, 4), enumerate_group(4)));
  const Eigen::MatrixXd a = sample(fg, 300, 9);
  CHECK(a == sample(fg, 300, 9));
  CHECK(a == sample(fg, 300, 9, 3));
  CHECK(a != sample(fg, 300, 10));
}

TEST_CASE("z = (1) gives constant sample paths") {
  const auto fg = factorize(gram(KernelParams({1.0}, 4), enumerate_group(4)));
  const Eigen::MatrixXd draws = sample(fg, 2000, 1);
  for (Eigen::Index d = 0; d < draws.cols(); ++d)
    CHECK((draws.col(d).array() - draws(0, d)).abs().maxCoeff() < 1e-12);
  std::vector<double> first;
  for (Eigen::Index d = 0; d < draws.cols(); ++d) first.push_back(draws(0, d));
  const auto est = stats::mean_estimate(first);
  CHECK(std::abs(est.mean) < 4 * est.standard_error);
}
