#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "psk/errors.hpp"

using namespace psk::cli;

int main(int argc, char** argv) {
  CLI::App app{"Power-sum kernels and bi-invariant Gaussian processes on symmetric groups"};
  app.set_help_flag("--help", "print this help and exit");  // -h would clash with kernel --h
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--seed", common.seed, "RNG seed (recorded in every sidecar)");
  app.add_option("--threads", common.threads, "worker threads for Gram fill and sampling")->check(CLI::PositiveNumber);
  app.add_flag("--normalize", common.normalize, "divide z by its 1-norm so that k(g,g) = 1");

  KernelArgs kernel_args;
  auto* kernel = app.add_subcommand("kernel", "evaluate k_z(g,h) and print the cycle type of gh^-1");
  kernel->add_option("--n", kernel_args.n, "degree (defaults to that of g)");
  kernel->add_option("--z", kernel_args.z, "z vector, e.g. 0.5,0.5 or 2/3,1/3")->required();
  kernel->add_option("--g", kernel_args.g, "permutation in one-line notation, e.g. \"2 1 3\"")->required();
  kernel->add_option("--h", kernel_args.h, "second permutation (default: identity)");

  GramArgs gram_args;
  auto* gram = app.add_subcommand("gram", "write the Gram matrix over S_n or a point list; exit 0 iff PSD");
  gram->add_option("--n", gram_args.n);
  gram->add_option("--z", gram_args.z)->required();
  gram->add_option("--points", gram_args.points, "file with one permutation per line");
  gram->add_option("--out", gram_args.out, "CSV path; metadata goes to <out>.json")->capture_default_str();
  gram->add_option("--cap", gram_args.cap, "largest n enumerated")->capture_default_str();

  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "draw Gaussian process sample paths");
  sample->add_option("--mode", sample_args.mode)->check(CLI::IsMember({"exact", "features", "truncated"}))->capture_default_str();
  sample->add_option("--n", sample_args.n);
  sample->add_option("--z", sample_args.z)->required();
  sample->add_option("--N", sample_args.draws, "number of draws")->capture_default_str();
  sample->add_option("--L", sample_args.L, "features per basis")->capture_default_str();
  sample->add_option("--R", sample_args.R, "truncated mode: number of shapes kept (0 = all)")->capture_default_str();
  sample->add_option("--points", sample_args.points, "evaluation points (feature modes)");
  sample->add_option("--out", sample_args.out, "CSV path; metadata goes to <out>.json")->capture_default_str();
  sample->add_option("--basis-out", sample_args.basis_out, "features mode: write every drawn basis as JSON");
  sample->add_option("--method", sample_args.method, "exact mode: spectral or cholesky")->capture_default_str();
  sample->add_option("--cap", sample_args.cap, "largest n accepted (default 7 exact, 14 features)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run identity checks; exit 0 iff all pass");
  verify->add_option("--suite", verify_args.suite)
      ->check(CLI::IsMember({"frobenius", "characters", "ginibre", "plancherel", "monotonic", "psd", "all"}))
      ->capture_default_str();
  verify->add_option("--n", verify_args.n);
  verify->add_option("--m", verify_args.m);
  verify->add_option("--N", verify_args.draws, "Monte Carlo size");
  verify->add_option("--z", verify_args.z, "fixed z instead of random ones");

  FigureArgs figure_args;
  auto* figure = app.add_subcommand("figure-data", "per-class kernel values and the class graph as CSV + DOT");
  figure->add_option("--n", figure_args.n)->capture_default_str();
  figure->add_option("--z", figure_args.z, "repeatable; default: 1/2,1/2 2/3,1/3 3/4,1/4 4/5,1/5");
  figure->add_option("--out", figure_args.out, "output prefix")->capture_default_str();

  TableArgs table_args;
  auto* table = app.add_subcommand("character-table", "character table of S_n as CSV");
  table->add_option("--n", table_args.n)->required();
  table->add_option("--out", table_args.out, "CSV path (default: stdout)");
  table->add_option("--cap", table_args.cap)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*kernel) return run_kernel(kernel_args, common, std::cout);
    if (*gram) return run_gram(gram_args, common, std::cout);
    if (*sample) return run_sample(sample_args, common, std::cout);
    if (*verify) return run_verify(verify_args, common, std::cout);
    if (*figure) return run_figure_data(figure_args, common, std::cout);
    if (*table) return run_character_table(table_args, common, std::cout);
  } catch (const psk::CapExceeded& e) {
    std::cerr << "psk: cap exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const psk::IndefiniteMatrix& e) {
    std::cerr << "psk: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const UsageError& e) {
    std::cerr << "psk: " << e.what() << "\n";
    return kUsage;
  } catch (const psk::Error& e) {  // parse errors, degree mismatches, invalid arguments
    std::cerr << "psk: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
