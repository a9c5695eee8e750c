#include "psk/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <thread>

#include "psk/characters.hpp"
#include "psk/errors.hpp"
#include "psk/symfunc.hpp"

namespace psk {

KernelParams::KernelParams(std::vector<double> z, int n, bool normalize)
    : KernelParams(std::move(z), n, normalize, Restore{}) {
  if (normalize) {
    const double sum = std::accumulate(z_.begin(), z_.end(), 0.0);
    for (double& v : z_) v /= sum;
    for (int j = 1; j <= n_; ++j) factors_[static_cast<std::size_t>(j - 1)] = power_sum(j, z_);
    variance_ = std::pow(factors_.front(), n_);
  }
}

KernelParams::KernelParams(std::vector<double> z, int n, bool normalized, Restore)
    : z_(std::move(z)), n_(n), normalized_(normalized) {
  if (n_ < 1) throw InvalidArgument("kernel degree n must be at least 1");
  if (z_.empty()) throw InvalidArgument("z must have at least one entry");
  for (double v : z_) {
    if (!std::isfinite(v)) throw InvalidArgument("z entries must be finite");
    if (v < 0.0) throw InvalidArgument("z entries must be nonnegative");
  }
  if (std::accumulate(z_.begin(), z_.end(), 0.0) == 0.0) throw InvalidArgument("z must have at least one positive entry");
  factors_.reserve(static_cast<std::size_t>(n_));
  for (int j = 1; j <= n_; ++j) factors_.push_back(power_sum(j, z_));
  variance_ = std::pow(factors_.front(), n_);
}

KernelParams KernelParams::restore(std::vector<double> z, int n, bool normalized) {
  KernelParams p(std::move(z), n, normalized, Restore{});
  if (normalized && std::abs(p.factor(1) - 1.0) > 1e-12) throw InvalidArgument("normalized z must sum to 1");
  return p;
}

int KernelParams::positive_count() const noexcept {
  return static_cast<int>(std::count_if(z_.begin(), z_.end(), [](double v) { return v > 0.0; }));
}

namespace {

// Multiplies in a fixed order (ascending cycle length) so the value is a function of the
// cycle type alone, bit for bit.
double product_over_counts(const KernelParams& params, std::span<const int> counts) {
  double k = 1.0;
  for (std::size_t j = 1; j < counts.size(); ++j)
    for (int r = 0; r < counts[j]; ++r) k *= params.factor(static_cast<int>(j));
  return k;
}

}  // namespace

double kernel_at_class(const KernelParams& params, const Partition& mu) {
  if (mu.weight() != params.n()) throw DegreeMismatch(params.n(), mu.weight());
  return product_over_counts(params, to_cycle_counts(mu).counts);
}

double kernel_eval(const KernelParams& params, const Permutation& g, const Permutation& h) {
  const int n = params.n();
  if (g.degree() != n) throw DegreeMismatch(n, g.degree());
  if (h.degree() != n) throw DegreeMismatch(n, h.degree());
  // Cycle counts of x ↦ g(h⁻¹(x)).
  std::vector<int> h_inv(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) h_inv[static_cast<std::size_t>(h(i))] = i;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> counts(static_cast<std::size_t>(n) + 1, 0);
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    int len = 0;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = g(h_inv[static_cast<std::size_t>(x)])) {
      seen[static_cast<std::size_t>(x)] = true;
      ++len;
    }
    ++counts[static_cast<std::size_t>(len)];
  }
  return product_over_counts(params, counts);
}

double kernel_eval_via_characters(const KernelParams& params, const Permutation& g, const Permutation& h) {
  const int n = params.n();
  if (g.degree() != n) throw DegreeMismatch(n, g.degree());
  if (h.degree() != n) throw DegreeMismatch(n, h.degree());
  if (n > kCharacterExpansionCap)
    throw CapExceeded("character expansion of the kernel needs n <= " + std::to_string(kCharacterExpansionCap));
  const Partition mu = quotient_cycle_type(g, h);
  double k = 0.0;
  for (const auto& lambda : partitions_of(n, params.m()))
    k += static_cast<double>(character(lambda, mu)) * schur_branching(lambda, params.z());
  return k;
}

GramMatrix gram(const KernelParams& params, std::vector<Permutation> points, int threads) {
  if (points.empty()) throw InvalidArgument("gram: no points");
  for (const auto& p : points)
    if (p.degree() != params.n()) throw DegreeMismatch(params.n(), p.degree());
  const auto dim = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd K(dim, dim);
  auto fill_rows = [&](Eigen::Index begin, Eigen::Index end) {
    for (Eigen::Index i = begin; i < end; ++i)
      for (Eigen::Index j = i; j < dim; ++j)
        K(i, j) = kernel_eval(params, points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)]);
  };
  const int workers = std::clamp(threads, 1, static_cast<int>(dim));
  if (workers == 1) {
    fill_rows(0, dim);
  } else {
    // Upper-triangle rows get shorter; interleave blocks so work is roughly even.
    std::vector<std::jthread> pool;
    const Eigen::Index block = 8;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (Eigen::Index b = static_cast<Eigen::Index>(w) * block; b < dim; b += static_cast<Eigen::Index>(workers) * block)
          fill_rows(b, std::min(dim, b + block));
      });
  }
  K.triangularView<Eigen::StrictlyLower>() = K.transpose().triangularView<Eigen::StrictlyLower>();
  return GramMatrix{std::move(points), std::move(K), params};
}

double min_eigenvalue(const Eigen::MatrixXd& symmetric) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(symmetric, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("symmetric eigensolver did not converge");
  return solver.eigenvalues().minCoeff();
}

bool is_psd(const GramMatrix& g, double tolerance_per_dim) {
  return min_eigenvalue(g.values) >= -tolerance_per_dim * static_cast<double>(g.values.rows());
}

std::optional<Permutation> splitting_step(const Permutation& g, Rng& rng) {
  const auto cyc = cycles(g);
  std::size_t pairs = 0;
  for (const auto& c : cyc) pairs += c.size() * (c.size() - 1) / 2;
  if (pairs == 0) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, pairs - 1);
  std::size_t idx = pick(rng);
  for (const auto& c : cyc) {
    const std::size_t here = c.size() * (c.size() - 1) / 2;
    if (idx >= here) {
      idx -= here;
      continue;
    }
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b)
        if (idx-- == 0) return compose(g, transposition(g.degree(), c[a], c[b]));
  }
  return std::nullopt;  // unreachable
}

MonotonicityReport check_monotonicity(const KernelParams& params, const Permutation& g, int trials, Rng& rng) {
  if (params.m() < 2) throw InvalidArgument("check_monotonicity needs m >= 2");
  MonotonicityReport r;
  r.strict = params.positive_count() >= 2;
  r.smallest_ratio = INFINITY;
  const Permutation e = Permutation::identity(g.degree());
  for (int t = 0; t < trials; ++t) {
    Permutation current = g;
    double value = kernel_eval(params, current, e);
    while (auto next = splitting_step(current, rng)) {
      const double next_value = kernel_eval(params, *next, e);
      ++r.steps;
      if (value > 0.0) r.smallest_ratio = std::min(r.smallest_ratio, next_value / value);
      const bool ok = r.strict ? next_value > value : next_value >= value;
      if (!ok) ++r.violations;
      current = std::move(*next);
      value = next_value;
    }
  }
  r.pass = r.violations == 0;
  return r;
}

std::vector<std::pair<std::size_t, std::size_t>> class_graph_edges(const std::vector<Partition>& classes) {
  std::map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < classes.size(); ++i) index.emplace(classes[i], i);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto parts = classes[i].parts();
    std::vector<std::size_t> targets;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      if (p > 0 && parts[p] == parts[p - 1]) continue;
      for (int c = 1; c <= parts[p] / 2; ++c) {
        std::vector<int> next(parts.begin(), parts.end());
        next[p] = parts[p] - c;
        next.push_back(c);
        const auto it = index.find(Partition::from_unsorted(std::move(next)));
        if (it != index.end()) targets.push_back(it->second);
      }
    }
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (std::size_t t : targets) edges.emplace_back(i, t);
  }
  return edges;
}

ClassKernelTable class_kernel_table(const KernelParams& params, int cap) {
  const int n = params.n();
  if (n > cap) throw CapExceeded("class table needs n <= " + std::to_string(cap));
  ClassKernelTable t;
  t.classes = partitions_of(n);
  const Permutation e = Permutation::identity(n);
  for (const auto& mu : t.classes) t.values.push_back(kernel_eval(params, permutation_with_cycle_type(mu), e));
  t.edges = class_graph_edges(t.classes);
  return t;
}

}  // namespace psk
