#include "psk/symfunc.hpp"

#include <cmath>
#include <map>

#include "psk/characters.hpp"
#include "psk/errors.hpp"

namespace psk {

double power_sum(int d, std::span<const double> x) {
  if (d < 1) throw InvalidArgument("power_sum: degree must be at least 1");
  double s = 0.0;
  for (double v : x) s += std::pow(v, d);
  return s;
}

double power_sum_partition(const Partition& mu, std::span<const double> x) {
  double p = 1.0;
  for (int part : mu.parts()) p *= power_sum(part, x);
  return p;
}

Complex power_sum_matrix(int d, const ComplexMatrix& X) {
  if (d < 1) throw InvalidArgument("power_sum_matrix: degree must be at least 1");
  return power_sums_matrix(d, X).back();
}

std::vector<Complex> power_sums_matrix(int max_degree, const ComplexMatrix& X) {
  if (X.rows() != X.cols()) throw InvalidArgument("power_sums_matrix: matrix must be square");
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(std::max(max_degree, 0)));
  ComplexMatrix power = X;
  for (int d = 1; d <= max_degree; ++d) {
    if (d > 1) power = power * X;
    out.push_back(power.trace());
  }
  return out;
}

double schur_ssyt(const Partition& lambda, std::span<const double> x, double limit) {
  const int m = static_cast<int>(x.size());
  if (m == 0) return lambda.empty() ? 1.0 : 0.0;
  double total = 0.0;
  for_each_ssyt(
      lambda, m,
      [&](const SemistandardTableau& t) {
        double mono = 1.0;
        for (const auto& row : t.rows)
          for (int v : row) mono *= x[static_cast<std::size_t>(v - 1)];
        total += mono;
      },
      limit);
  return total;
}

namespace {

class Branching {
 public:
  explicit Branching(std::span<const double> x) : x_(x) {}

  // s_λ(x_1, …, x_k).
  double eval(const std::vector<int>& lambda, int k) {
    if (lambda.empty()) return 1.0;
    if (static_cast<int>(lambda.size()) > k) return 0.0;
    if (k == 1) return std::pow(x_[0], lambda[0]);
    auto key = std::make_pair(lambda, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // μ interlaces λ: λ_{i+1} ≤ μ_i ≤ λ_i; λ/μ is a horizontal strip filled with the letter k.
    const double xk = x_[static_cast<std::size_t>(k - 1)];
    const int weight = [&] { int w = 0; for (int p : lambda) w += p; return w; }();
    std::vector<int> mu(lambda.size(), 0);
    double total = 0.0;
    auto rec = [&](auto&& self, std::size_t i, int mu_weight) -> void {
      if (i == lambda.size()) {
        std::vector<int> trimmed = mu;
        while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
        const double sub = eval(trimmed, k - 1);
        if (sub != 0.0) total += std::pow(xk, weight - mu_weight) * sub;
        return;
      }
      const int lo = i + 1 < lambda.size() ? lambda[i + 1] : 0;
      for (int v = lo; v <= lambda[i]; ++v) {
        mu[i] = v;
        self(self, i + 1, mu_weight + v);
      }
    };
    rec(rec, 0, 0);
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::span<const double> x_;
  std::map<std::pair<std::vector<int>, int>, double> memo_;
};

}  // namespace

double schur_branching(const Partition& lambda, std::span<const double> x) {
  Branching b(x);
  return b.eval(std::vector<int>(lambda.parts().begin(), lambda.parts().end()), static_cast<int>(x.size()));
}

double schur_weyl_determinant(const Partition& lambda, std::span<const double> x, double min_gap) {
  const int m = static_cast<int>(x.size());
  if (m == 0) return lambda.empty() ? 1.0 : 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (std::abs(x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)]) <= min_gap)
        throw InvalidArgument("schur_weyl_determinant: entries must be pairwise distinct (Vandermonde vanishes)");
  if (lambda.length() > m) return 0.0;
  Eigen::MatrixXd num(m, m), den(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const double xi = x[static_cast<std::size_t>(i)];
      num(i, j) = std::pow(xi, lambda[j] + m - 1 - j);
      den(i, j) = std::pow(xi, m - 1 - j);
    }
  const double d = den.partialPivLu().determinant();
  if (d == 0.0) throw InvalidArgument("schur_weyl_determinant: singular Vandermonde denominator");
  return num.partialPivLu().determinant() / d;
}

Complex schur_from_power_sums(const Partition& lambda, std::span<const Complex> power_sums, int cap) {
  const int n = lambda.weight();
  if (n == 0) return 1.0;
  if (n > cap) throw CapExceeded("character expansion of s_lambda with |lambda| = " + std::to_string(n) +
                                 " exceeds the cap " + std::to_string(cap));
  if (static_cast<int>(power_sums.size()) < n) throw InvalidArgument("schur_from_power_sums: need p_1..p_n");
  Complex total = 0.0;
  for (const auto& mu : partitions_of(n)) {
    const std::int64_t chi = character(lambda, mu);
    if (chi == 0) continue;
    Complex p = 1.0;
    for (int part : mu.parts()) p *= power_sums[static_cast<std::size_t>(part - 1)];
    total += static_cast<double>(chi) * p / static_cast<double>(centralizer_size(mu));
  }
  return total;
}

Complex schur_from_characters(const Partition& lambda, const ComplexMatrix& X, int cap) {
  if (lambda.weight() > cap) throw CapExceeded("character expansion of s_lambda exceeds the cap");
  return schur_from_power_sums(lambda, power_sums_matrix(lambda.weight(), X), cap);
}

double schur_from_characters(const Partition& lambda, std::span<const double> x, int cap) {
  if (lambda.weight() > cap) throw CapExceeded("character expansion of s_lambda exceeds the cap");
  std::vector<Complex> p;
  for (int d = 1; d <= lambda.weight(); ++d) p.emplace_back(power_sum(d, x));
  return schur_from_power_sums(lambda, p, cap).real();
}

}  // namespace psk
