#include "commands.hpp"

#include <algorithm>
#include <limits>

#include <Eigen/Dense>

#include "psk/characters.hpp"
#include "psk/errors.hpp"
#include "psk/io.hpp"
#include "psk/kernel.hpp"
#include "psk/random.hpp"
#include "psk/sampler_exact.hpp"
#include "psk/sampler_features.hpp"

namespace psk::cli {

namespace {

KernelParams make_params(const std::string& z, int n, const Common& common) {
  if (z.empty()) throw UsageError("--z is required");
  try {
    return KernelParams(parse_z(z), n, common.normalize);
  } catch (const InvalidArgument& e) {
    throw UsageError(std::string("--z: ") + e.what());
  }
}

Permutation parse_permutation(const std::string& text, const char* flag) {
  try {
    return Permutation::parse(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

// Seed of the i-th independent draw in the feature modes.
std::uint64_t draw_seed(std::uint64_t seed, std::size_t i) { return make_substream(seed, i)(); }

}  // namespace

int run_kernel(const KernelArgs& args, const Common& common, std::ostream& out) {
  const Permutation g = parse_permutation(args.g, "--g");
  const Permutation h = args.h.empty() ? Permutation::identity(g.degree()) : parse_permutation(args.h, "--h");
  const int n = args.n.value_or(g.degree());
  if (g.degree() != n) throw DegreeMismatch(n, g.degree());
  if (h.degree() != n) throw DegreeMismatch(n, h.degree());
  const KernelParams params = make_params(args.z, n, common);
  out << io::format_double(kernel_eval(params, g, h)) << "\n";
  out << "cycle type of gh^-1: (" << quotient_cycle_type(g, h).to_string() << ")\n";
  return kOk;
}

int run_gram(const GramArgs& args, const Common& common, std::ostream& out) {
  std::vector<Permutation> points;
  if (!args.points.empty()) {
    points = read_points(args.points);
    if (args.n && *args.n != points.front().degree()) throw DegreeMismatch(*args.n, points.front().degree());
  } else {
    if (!args.n) throw UsageError("--n or --points is required");
    points = enumerate_group(*args.n, args.cap);
  }
  const KernelParams params = make_params(args.z, points.front().degree(), common);
  const GramMatrix g = gram(params, std::move(points), common.threads);
  const double lowest = min_eigenvalue(g.values);
  const bool psd = is_psd(g);

  write_file(args.out, io::gram_to_csv(g));
  auto meta = sidecar("gram", params, common);
  meta["points"] = g.points.size();
  meta["point_source"] = args.points.empty() ? "enumeration" : "file";
  meta["min_eigenvalue"] = lowest;
  meta["psd"] = psd;
  write_file(sidecar_path(args.out), dump(meta));

  out << "points " << g.points.size() << "\n";
  out << "min eigenvalue " << io::format_double(lowest) << "\n";
  out << (psd ? "PSD pass" : "PSD FAIL") << "\n";
  return psd ? kOk : kVerificationFailed;
}

int run_sample(const SampleArgs& args, const Common& common, std::ostream& out) {
  if (args.draws == 0) throw UsageError("--N must be at least 1");
  int n = 0;
  std::vector<Permutation> points;
  if (!args.points.empty()) {
    if (args.mode == "exact") throw UsageError("--points: exact mode always samples all of S_n");
    points = read_points(args.points);
    n = points.front().degree();
    if (args.n && *args.n != n) throw DegreeMismatch(*args.n, n);
  } else {
    if (!args.n) throw UsageError("--n is required");
    n = *args.n;
  }
  const KernelParams params = make_params(args.z, n, common);
  auto meta = sidecar("sample", params, common);
  meta["mode"] = args.mode;
  meta["N"] = args.draws;

  Eigen::MatrixXd draws;
  if (args.mode == "exact") {
    const int cap = args.cap.value_or(kExactSamplingCap);
    FactorMethod method;
    if (args.method == "spectral") method = FactorMethod::spectral;
    else if (args.method == "cholesky") method = FactorMethod::cholesky_jitter;
    else throw UsageError("--method: expected spectral or cholesky, got '" + args.method + "'");
    if (n > cap) throw CapExceeded("exact sampling limited to n <= " + std::to_string(cap));
    points = enumerate_group(n, cap);
    const FactorizedGram fg = factorize(gram(params, points, common.threads), method, cap);
    draws = sample(fg, args.draws, common.seed, common.threads);
    meta["method"] = to_string(method);
    meta["reconstruction_residual"] = reconstruction_residual(fg);
  } else if (args.mode == "features" || args.mode == "truncated") {
    const int cap = args.cap.value_or(kFeatureSamplingCap);
    if (n > cap) throw CapExceeded("feature sampling limited to n <= " + std::to_string(cap));
    if (args.L == 0) throw UsageError("--L must be at least 1");
    if (points.empty()) {
      if (n > kEnumerationCap) throw UsageError("--points is required for n > " + std::to_string(kEnumerationCap));
      points = enumerate_group(n, kEnumerationCap);
    }
    draws.resize(static_cast<Eigen::Index>(points.size()), static_cast<Eigen::Index>(args.draws));
    meta["L"] = args.L;
    if (args.mode == "features") {
      nlohmann::ordered_json bases = nlohmann::ordered_json::array();
      for (std::size_t d = 0; d < args.draws; ++d) {
        const FeatureBasis basis = build_feature_basis(params, args.L, draw_seed(common.seed, d), common.threads, cap);
        for (std::size_t i = 0; i < points.size(); ++i)
          draws(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(d)) = evaluate_feature_gp(basis, points[i]);
        if (!args.basis_out.empty()) bases.push_back(nlohmann::ordered_json::parse(feature_basis_to_json(basis)));
      }
      if (!args.basis_out.empty()) write_file(args.basis_out, bases.dump(1) + "\n");
    } else {
      if (!args.basis_out.empty()) throw UsageError("--basis-out applies to features mode only");
      const std::size_t R = args.R == 0 ? std::numeric_limits<std::size_t>::max() : args.R;
      std::size_t used = 0;
      for (std::size_t d = 0; d < args.draws; ++d) {
        const TruncatedBasis basis = build_truncated_basis(params, R, args.L, draw_seed(common.seed, d), cap);
        used = basis.components.size();
        for (std::size_t i = 0; i < points.size(); ++i)
          draws(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(d)) = evaluate_truncated_gp(basis, points[i]);
      }
      meta["R"] = used;
    }
  } else {
    throw UsageError("--mode: expected exact, features or truncated, got '" + args.mode + "'");
  }

  meta["points"] = points.size();
  write_file(args.out, io::samples_to_csv(points, draws));
  write_file(sidecar_path(args.out), dump(meta));
  out << "wrote " << args.draws << " draws over " << points.size() << " points\n";
  return kOk;
}

int run_figure_data(const FigureArgs& args, const Common& common, std::ostream& out) {
  const std::vector<std::string> zs =
      args.z.empty() ? std::vector<std::string>{"1/2,1/2", "2/3,1/3", "3/4,1/4", "4/5,1/5"} : args.z;
  std::vector<ClassKernelTable> tables;
  nlohmann::ordered_json meta;
  meta["tool"] = tool_version();
  meta["command"] = "figure-data";
  meta["n"] = args.n;
  meta["normalized"] = common.normalize;
  meta["seed"] = common.seed;
  meta["tables"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const KernelParams params = make_params(zs[i], args.n, common);
    tables.push_back(class_kernel_table(params));
    const std::string csv = args.out + "_z" + std::to_string(i + 1) + ".csv";
    write_file(csv, io::class_table_to_csv(tables.back()));
    meta["tables"].push_back({{"file", csv.substr(csv.find_last_of('/') + 1)},
                              {"m", params.m()},
                              {"z", std::vector<double>(params.z().begin(), params.z().end())},
                              {"z_input", zs[i]}});
    out << csv << "\n";
  }
  const std::string dot = args.out + ".dot";
  write_file(dot, io::class_graph_to_dot(tables, args.n));
  meta["classes"] = tables.front().classes.size();
  meta["edges"] = tables.front().edges.size();
  write_file(args.out + ".json", dump(meta));
  out << dot << "\n" << args.out << ".json\n";
  return kOk;
}

int run_character_table(const TableArgs& args, const Common& common, std::ostream& out) {
  const CharacterTable table = character_table(args.n, args.cap);
  if (args.out.empty()) {
    out << table.to_csv();
    return kOk;
  }
  write_file(args.out, table.to_csv());
  nlohmann::ordered_json meta;
  meta["tool"] = tool_version();
  meta["command"] = "character-table";
  meta["n"] = args.n;
  meta["classes"] = table.partitions.size();
  meta["seed"] = common.seed;
  write_file(sidecar_path(args.out), dump(meta));
  out << args.out << "\n";
  return kOk;
}

}  // namespace psk::cli
