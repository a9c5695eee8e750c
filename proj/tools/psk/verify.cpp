// `psk verify`: executable versions of the identities the library rests on.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>

#include "commands.hpp"
#include "psk/characters.hpp"
#include "psk/errors.hpp"
#include "psk/kernel.hpp"
#include "psk/random.hpp"
#include "psk/rsk.hpp"
#include "psk/sampler_features.hpp"
#include "psk/stats.hpp"
#include "psk/symfunc.hpp"
#include "psk/young.hpp"

namespace psk::cli {

namespace {

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

struct Reporter {
  std::ostream& out;
  bool all_pass = true;

  void line(const std::string& suite, bool pass, const std::string& detail) {
    out << (pass ? "[PASS] " : "[FAIL] ") << suite << ": " << detail << "\n";
    all_pass = all_pass && pass;
  }
};

std::vector<double> random_z(int m, Rng& rng, double lo = 0.0) {
  std::uniform_real_distribution<double> u(lo, 1.0);
  std::vector<double> z(static_cast<std::size_t>(m));
  for (auto& x : z) x = u(rng);
  return z;
}

// Either the single --z vector or `count` random ones with m entries.
std::vector<std::vector<double>> z_list(const VerifyArgs& args, int m, int count, Rng& rng, double lo = 0.0) {
  if (!args.z.empty()) return {parse_z(args.z)};
  std::vector<std::vector<double>> zs;
  for (int i = 0; i < count; ++i) zs.push_back(random_z(m, rng, lo));
  return zs;
}

void frobenius(const VerifyArgs& args, Rng& rng, Reporter& report) {
  const int n = args.n.value_or(4);
  const int m = args.m.value_or(3);
  double worst = 0.0;
  const auto zs = z_list(args, m, 10, rng);
  const auto classes = partitions_of(n);
  for (const auto& z : zs) {
    const auto shapes = partitions_of(n, static_cast<int>(z.size()));
    std::vector<double> schur;
    for (const auto& lambda : shapes) schur.push_back(schur_ssyt(lambda, z));
    for (const auto& mu : classes) {
      const double lhs = power_sum_partition(mu, z);
      double rhs = 0.0;
      for (std::size_t i = 0; i < shapes.size(); ++i) rhs += static_cast<double>(character(shapes[i], mu)) * schur[i];
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
    }
  }
  report.line("frobenius", worst < 1e-10,
              "n=" + std::to_string(n) + " classes=" + std::to_string(classes.size()) + " z_vectors=" +
                  std::to_string(zs.size()) + " max_residual=" + sci(worst) + " (tol 1e-10)");
}

void characters(const VerifyArgs& args, Rng& rng, Reporter& report) {
  const int n = args.n.value_or(5);
  const CharacterTable table = character_table(n);
  const Partition identity_class(std::vector<int>(static_cast<std::size_t>(n), 1));
  bool dims = true;
  for (const auto& lambda : table.partitions)
    dims = dims && character(lambda, identity_class) == static_cast<std::int64_t>(dimension(lambda));
  report.line("characters", dims, "chi(e) = d for all " + std::to_string(table.partitions.size()) + " shapes");
  const auto rows = row_orthogonality_defect(table);
  const auto cols = column_orthogonality_defect(table);
  report.line("characters", rows == 0, "row orthogonality defect " + std::to_string(rows));
  report.line("characters", cols == 0, "column orthogonality defect " + std::to_string(cols));

  if (n > kCharacterAverageCap) {
    report.out << "[SKIP] characters: averaging identity needs n <= " << kCharacterAverageCap << "\n";
    return;
  }
  constexpr std::size_t pairs = 20;
  double worst = 0.0;
  for (const auto& lambda : table.partitions)
    for (std::size_t t = 0; t < pairs; ++t) {
      const Permutation g = random_uniform(n, rng);
      const Permutation h = random_uniform(n, rng);
      worst = std::max(worst, verify_character_average(lambda, g, h).residual);
    }
  report.line("characters", worst < 1e-12,
              "averaging identity over " + std::to_string(pairs) + " pairs per shape, max_residual=" + sci(worst) +
                  " (tol 1e-12)");
}

void ginibre(const VerifyArgs& args, const Common& common, Reporter& report) {
  const int n = args.n.value_or(3);
  const std::size_t samples = args.draws.value_or(100000);
  const KernelParams params(args.z.empty() ? std::vector<double>{0.7, 0.3} : parse_z(args.z), n, common.normalize);
  std::uint64_t k = 0;
  for (const auto& lambda : partitions_of(n, params.m())) {
    const auto r = verify_ginibre_schur(lambda, params, samples, make_substream(common.seed, 100 + k++)());
    report.line("ginibre", r.pass && r.symmetry_pass,
                "lambda=(" + lambda.to_string() + ") estimate=" + sci(r.estimate) + " exact=" + sci(r.exact) +
                    " se=" + sci(r.standard_error) + " |Re^2-Im^2|/se=" +
                    sci(std::abs(r.mean_re_squared - r.mean_im_squared) / r.symmetry_standard_error) + " (4 SE)");
  }
}

void plancherel(const VerifyArgs& args, Rng& rng, Reporter& report) {
  const int n = args.n.value_or(6);
  const std::size_t draws = args.draws.value_or(100000);
  const auto shapes = partitions_of(n);
  std::map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < shapes.size(); ++i) index.emplace(shapes[i], i);

  if (n <= kEnumerationCap) {
    std::vector<std::uint64_t> counts(shapes.size(), 0);
    for (const auto& g : enumerate_group(n, kEnumerationCap)) ++counts[index.at(rsk_shape(g))];
    bool exact = true;
    for (std::size_t i = 0; i < shapes.size(); ++i) exact = exact && counts[i] == dimension(shapes[i]) * dimension(shapes[i]);
    report.line("plancherel", exact, "exhaustive: #{g : shape(g) = lambda} = d^2 for all lambda of " + std::to_string(n));
  }

  std::vector<std::size_t> observed(shapes.size(), 0);
  std::vector<double> expected;
  for (std::size_t t = 0; t < draws; ++t) ++observed[index.at(rsk_shape(random_uniform(n, rng)))];
  for (const auto& lambda : shapes) expected.push_back(plancherel_probability(lambda, n));
  const auto r = stats::chi_square_gof(observed, expected);
  report.line("plancherel", r.p_value > 1e-3,
              "chi-square over " + std::to_string(draws) + " draws: stat=" + sci(r.statistic) + " dof=" +
                  std::to_string(static_cast<int>(r.dof)) + " p=" + sci(r.p_value) + " (threshold 1e-3)");
}

void monotonic(const VerifyArgs& args, Rng& rng, Reporter& report) {
  const int n = args.n.value_or(8);
  const int m = args.m.value_or(3);
  const std::size_t trials = args.draws.value_or(10000);
  std::vector<std::vector<double>> zs = z_list(args, m, 1, rng, 0.05);
  if (args.z.empty()) {
    std::vector<double> corner(static_cast<std::size_t>(m), 0.0);
    corner[0] = 1.0;
    zs.push_back(corner);
  }
  for (const auto& z : zs) {
    const KernelParams params(z, n);
    if (params.m() < 2) throw UsageError("monotonic suite needs m >= 2");
    const bool strict = params.positive_count() >= 2;
    std::size_t steps = 0, violations = 0;
    while (steps < trials) {
      const Permutation g = random_uniform(n, rng);
      const auto next = splitting_step(g, rng);
      if (!next) continue;  // g = e has no splitting step
      const double before = kernel_eval(params, g, Permutation::identity(n));
      const double after = kernel_eval(params, *next, Permutation::identity(n));
      if (strict ? !(after > before) : !(after >= before)) ++violations;
      ++steps;
    }
    std::string zs_text;
    for (double x : z) zs_text += (zs_text.empty() ? "" : ",") + sci(x);
    report.line("monotonic", violations == 0,
                std::string(strict ? "strict" : "non-strict") + " z=(" + zs_text + ") steps=" + std::to_string(steps) +
                    " violations=" + std::to_string(violations));
  }
}

void psd(const VerifyArgs& args, const Common& common, Rng& rng, Reporter& report) {
  const int n = args.n.value_or(5);
  const int m = args.m.value_or(3);
  const auto points = enumerate_group(n, kEnumerationCap);
  for (const auto& z : z_list(args, m, 5, rng)) {
    const GramMatrix g = gram(KernelParams(z, n, common.normalize), points, common.threads);
    const double lowest = min_eigenvalue(g.values);
    report.line("psd", lowest >= -1e-9,
                "n=" + std::to_string(n) + " m=" + std::to_string(z.size()) + " min_eigenvalue=" + sci(lowest) +
                    " (>= -1e-9)");
  }
}

}  // namespace

int run_verify(const VerifyArgs& args, const Common& common, std::ostream& out) {
  static const std::vector<std::string> suites = {"frobenius", "characters", "ginibre", "plancherel", "monotonic", "psd"};
  const bool all = args.suite == "all";
  if (!all && std::find(suites.begin(), suites.end(), args.suite) == suites.end())
    throw UsageError("--suite: unknown suite '" + args.suite + "'");
  // `all` runs every suite at its own defaults; only --N (Monte Carlo size) carries over.
  VerifyArgs defaults;
  defaults.draws = args.draws;
  const VerifyArgs& a = all ? defaults : args;

  Reporter report{out};
  for (std::size_t s = 0; s < suites.size(); ++s) {
    if (!all && suites[s] != args.suite) continue;
    Rng rng = make_substream(common.seed, s);
    if (suites[s] == "frobenius") frobenius(a, rng, report);
    else if (suites[s] == "characters") characters(a, rng, report);
    else if (suites[s] == "ginibre") ginibre(a, common, report);
    else if (suites[s] == "plancherel") plancherel(a, rng, report);
    else if (suites[s] == "monotonic") monotonic(a, rng, report);
    else psd(a, common, rng, report);
  }
  out << (report.all_pass ? "all checks passed" : "verification FAILED") << "\n";
  return report.all_pass ? kOk : kVerificationFailed;
}

}  // namespace psk::cli
