#include "psk/sampler_features.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <thread>

#include <nlohmann/json.hpp>

#include "psk/characters.hpp"
#include "psk/errors.hpp"
#include "psk/rsk.hpp"
#include "psk/young.hpp"

namespace psk {

ComplexMatrix sample_ginibre(int m, Rng& rng) {
  if (m < 1) throw InvalidArgument("sample_ginibre: m must be at least 1");
  std::normal_distribution<double> half(0.0, std::sqrt(0.5));
  ComplexMatrix Z(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const double re = half(rng);
      const double im = half(rng);
      Z(i, j) = Complex(re, im);
    }
  return Z;
}

ComplexMatrix scaling_matrix(std::span<const double> z) {
  const auto m = static_cast<Eigen::Index>(z.size());
  ComplexMatrix A = ComplexMatrix::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double v = z[static_cast<std::size_t>(i)];
    if (v < 0.0) throw InvalidArgument("scaling_matrix: z entries must be nonnegative");
    A(i, i) = std::sqrt(v);
  }
  return A;
}

ComplexMatrix scaling_matrix(const KernelParams& params) { return scaling_matrix(params.z()); }

namespace {

FeatureRecord draw_feature(int n, const ComplexMatrix& A, Rng& rng, int cap) {
  const Permutation v = random_uniform(n, rng);
  Permutation u = random_uniform(n, rng);
  const ComplexMatrix Z = sample_ginibre(static_cast<int>(A.rows()), rng);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double w1 = normal(rng);
  const double w2 = normal(rng);
  Partition shape = rsk_shape(v);
  const Complex amplitude = schur_from_characters(shape, A * Z, cap);
  return FeatureRecord{std::move(shape), std::move(u), amplitude, w1, w2};
}

}  // namespace

FeatureBasis build_feature_basis(const KernelParams& params, std::size_t L, std::uint64_t seed, int threads,
                                 int cap) {
  if (L == 0) throw InvalidArgument("build_feature_basis: L must be at least 1");
  const int n = params.n();
  if (n > cap) throw CapExceeded("feature sampling on S_" + std::to_string(n) + " exceeds the cap n <= " + std::to_string(cap));
  const ComplexMatrix A = scaling_matrix(params);

  std::vector<std::optional<FeatureRecord>> slots(L);
  auto run = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t j = begin; j < L; j += stride) {
      Rng rng = make_substream(seed, j);
      slots[j] = draw_feature(n, A, rng, cap);
    }
  };
  const int workers = std::clamp(threads, 1, static_cast<int>(std::min<std::size_t>(L, 256)));
  if (workers == 1) {
    run(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, static_cast<std::size_t>(w), static_cast<std::size_t>(workers));
  }

  FeatureBasis basis{{}, params, seed};
  basis.features.reserve(L);
  for (auto& s : slots) basis.features.push_back(std::move(*s));
  return basis;
}

double evaluate_feature_gp(const FeatureBasis& basis, const Permutation& g) {
  if (g.degree() != basis.params.n()) throw DegreeMismatch(basis.params.n(), g.degree());
  double total = 0.0;
  for (const auto& f : basis.features) {
    const double coeff = f.w1 * f.amplitude.real() + f.w2 * f.amplitude.imag();
    if (coeff == 0.0) continue;
    total += coeff * static_cast<double>(character_at(f.shape, compose(g, f.shift)));
  }
  return total / std::sqrt(static_cast<double>(basis.features.size()));
}

std::string feature_basis_to_json(const FeatureBasis& basis) {
  using nlohmann::json;
  json header{{"n", basis.params.n()},
              {"m", basis.params.m()},
              {"z", std::vector<double>(basis.params.z().begin(), basis.params.z().end())},
              {"normalized", basis.params.normalized()},
              {"L", basis.features.size()},
              {"seed", basis.seed}};
  json features = json::array();
  for (const auto& f : basis.features) {
    features.push_back(json{{"shape", std::vector<int>(f.shape.parts().begin(), f.shape.parts().end())},
                            {"shift", std::vector<int>(f.shift.images().begin(), f.shift.images().end())},
                            {"amplitude_re", f.amplitude.real()},
                            {"amplitude_im", f.amplitude.imag()},
                            {"w1", f.w1},
                            {"w2", f.w2}});
  }
  return json{{"header", header}, {"features", features}}.dump(1) + "\n";
}

FeatureBasis feature_basis_from_json(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("feature basis JSON: ") + e.what(), e.byte);
  }
  try {
    const auto& h = doc.at("header");
    // z is stored post-normalisation; renormalising could perturb the last bit.
    const auto params = KernelParams::restore(h.at("z").get<std::vector<double>>(), h.at("n").get<int>(),
                                              h.at("normalized").get<bool>());
    FeatureBasis basis{{}, params, h.at("seed").get<std::uint64_t>()};
    for (const auto& f : doc.at("features")) {
      Partition shape(f.at("shape").get<std::vector<int>>());
      Permutation shift(f.at("shift").get<std::vector<int>>());
      if (shape.weight() != params.n() || shift.degree() != params.n())
        throw InvalidArgument("feature basis JSON: feature degree does not match header n");
      basis.features.push_back(FeatureRecord{std::move(shape), std::move(shift),
                                             Complex(f.at("amplitude_re").get<double>(), f.at("amplitude_im").get<double>()),
                                             f.at("w1").get<double>(), f.at("w2").get<double>()});
    }
    if (basis.features.size() != h.at("L").get<std::size_t>())
      throw InvalidArgument("feature basis JSON: header L does not match feature count");
    return basis;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("feature basis JSON: ") + e.what());
  }
}

GinibreSchurReport verify_ginibre_schur(const Partition& lambda, const KernelParams& params, std::size_t samples,
                                        std::uint64_t seed, int cap) {
  if (samples < 2) throw InvalidArgument("verify_ginibre_schur: need at least two samples");
  const int n = lambda.weight();
  const ComplexMatrix A = scaling_matrix(params);
  Rng rng = make_substream(seed, 0);
  double sum = 0, sum_sq = 0, diff_sum = 0, diff_sq = 0, re_sum = 0, im_sum = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const Complex s = schur_from_characters(lambda, A * sample_ginibre(params.m(), rng), cap);
    const double re2 = s.real() * s.real();
    const double im2 = s.imag() * s.imag();
    const double mod2 = re2 + im2;
    sum += mod2;
    sum_sq += mod2 * mod2;
    re_sum += re2;
    im_sum += im2;
    diff_sum += re2 - im2;
    diff_sq += (re2 - im2) * (re2 - im2);
  }
  const auto N = static_cast<double>(samples);
  auto standard_error = [N](double s, double s2) {
    const double mean = s / N;
    return std::sqrt(std::max(0.0, (s2 / N - mean * mean) * N / (N - 1)) / N);
  };
  GinibreSchurReport r;
  r.estimate = sum / N;
  r.standard_error = standard_error(sum, sum_sq);
  r.exact = static_cast<double>(factorial(n)) * schur_branching(lambda, params.z()) /
            static_cast<double>(dimension(lambda));
  r.pass = std::abs(r.estimate - r.exact) <= 4.0 * r.standard_error;
  r.mean_re_squared = re_sum / N;
  r.mean_im_squared = im_sum / N;
  r.symmetry_standard_error = standard_error(diff_sum, diff_sq);
  r.symmetry_pass = std::abs(diff_sum / N) <= 4.0 * r.symmetry_standard_error;
  return r;
}

std::vector<ShapeScore> rank_shapes(const KernelParams& params, int cap) {
  const int n = params.n();
  if (n > cap) throw CapExceeded("ranking all shapes of S_" + std::to_string(n) + " exceeds the cap n <= " + std::to_string(cap));
  std::vector<ShapeScore> out;
  for (auto& lambda : partitions_of(n, params.m())) {
    const double a = schur_branching(lambda, params.z());
    if (a > 0.0) out.push_back(ShapeScore{lambda, a, dimension(lambda)});
  }
  // partitions_of is already descending lexicographic, so a stable sort keeps that as the tie-break.
  std::stable_sort(out.begin(), out.end(), [](const ShapeScore& x, const ShapeScore& y) {
    return x.coefficient * static_cast<double>(x.dim) > y.coefficient * static_cast<double>(y.dim);
  });
  return out;
}

TruncatedBasis build_truncated_basis(const KernelParams& params, std::size_t R, std::size_t L, std::uint64_t seed,
                                     int cap) {
  if (R == 0 || L == 0) throw InvalidArgument("build_truncated_basis: R and L must be at least 1");
  auto ranked = rank_shapes(params, cap);
  if (ranked.size() > R) ranked.resize(R);
  TruncatedBasis basis{{}, params, L, seed};
  for (std::size_t r = 0; r < ranked.size(); ++r) {
    Rng rng = make_substream(seed, r);
    TruncatedComponent c{ranked[r].shape, ranked[r].coefficient, ranked[r].dim, {}, {}};
    std::normal_distribution<double> weight(0.0, std::sqrt(c.coefficient / static_cast<double>(c.dim)));
    for (std::size_t l = 0; l < L; ++l) {
      c.shifts.push_back(random_uniform(params.n(), rng));
      c.weights.push_back(weight(rng));
    }
    basis.components.push_back(std::move(c));
  }
  return basis;
}

double evaluate_truncated_gp(const TruncatedBasis& basis, const Permutation& g) {
  if (g.degree() != basis.params.n()) throw DegreeMismatch(basis.params.n(), g.degree());
  double total = 0.0;
  for (const auto& c : basis.components) {
    double inner = 0.0;
    for (std::size_t l = 0; l < c.shifts.size(); ++l)
      inner += c.weights[l] * static_cast<double>(character_at(c.shape, compose(g, c.shifts[l])));
    total += static_cast<double>(c.dim) * inner;
  }
  return total / std::sqrt(static_cast<double>(basis.L));
}

}  // namespace psk
