#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "psk/kernel.hpp"
#include "psk/permutation.hpp"

namespace psk::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kCapExceeded = 3 };

/// Bad flags or unusable input files; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default size guards of the tool (the library's own defaults are looser where cheap).
inline constexpr int kEnumerationCap = 7;

struct Common {
  std::uint64_t seed = 1;
  int threads = 1;
  bool normalize = false;
};

/// Comma-separated nonnegative reals; each entry may be a decimal or a fraction "a/b".
/// Errors name `flag` and the offending offset.
std::vector<double> parse_z(std::string_view text, std::string_view flag = "--z");

/// One permutation per line in one-line notation; blank lines and '#' comments are skipped.
std::vector<Permutation> read_points(const std::filesystem::path& path);

void write_file(const std::filesystem::path& path, std::string_view contents);

/// `out.csv` → `out.csv.json`.
std::filesystem::path sidecar_path(const std::filesystem::path& out);

/// Fields every sidecar carries. No timestamps or paths, so reruns are byte-identical.
nlohmann::ordered_json sidecar(std::string_view command, const KernelParams& params, const Common& common);

std::string dump(const nlohmann::ordered_json& doc);

std::string tool_version();

}  // namespace psk::cli
