#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "common.hpp"

namespace psk::cli {

struct KernelArgs {
  std::optional<int> n;
  std::string z;
  std::string g;
  std::string h;  // empty: identity
};

struct GramArgs {
  std::optional<int> n;
  std::string z;
  std::string points;
  std::string out = "gram.csv";
  int cap = kEnumerationCap;
};

struct SampleArgs {
  std::string mode = "exact";
  std::optional<int> n;
  std::string z;
  std::size_t draws = 100;
  std::size_t L = 1000;
  std::size_t R = 0;  // 0: every shape with a positive coefficient
  std::string points;
  std::string out = "samples.csv";
  std::string basis_out;
  std::string method = "spectral";
  std::optional<int> cap;
};

struct VerifyArgs {
  std::string suite = "all";
  std::optional<int> n;
  std::optional<int> m;
  std::optional<std::size_t> draws;
  std::string z;
};

struct FigureArgs {
  int n = 6;
  std::vector<std::string> z;  // empty: the four vectors (1/2,1/2), (2/3,1/3), (3/4,1/4), (4/5,1/5)
  std::string out = "figure";
};

struct TableArgs {
  int n = 0;
  std::string out;  // empty: stdout
  int cap = 8;
};

int run_kernel(const KernelArgs& args, const Common& common, std::ostream& out);
int run_gram(const GramArgs& args, const Common& common, std::ostream& out);
int run_sample(const SampleArgs& args, const Common& common, std::ostream& out);
int run_verify(const VerifyArgs& args, const Common& common, std::ostream& out);
int run_figure_data(const FigureArgs& args, const Common& common, std::ostream& out);
int run_character_table(const TableArgs& args, const Common& common, std::ostream& out);

}  // namespace psk::cli
