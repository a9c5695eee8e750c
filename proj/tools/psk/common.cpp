#include "common.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "psk/errors.hpp"
#include "psk/version.hpp"

namespace psk::cli {

namespace {

double parse_number(std::string_view text, std::size_t offset, std::string_view flag) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end)
    throw UsageError(std::string(flag) + ": malformed number '" + std::string(text) + "' at position " +
                     std::to_string(offset));
  return value;
}

}  // namespace

std::vector<double> parse_z(std::string_view text, std::string_view flag) {
  std::vector<double> z;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view entry = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    // Tolerate surrounding blanks, e.g. "0.5, 0.5".
    std::size_t lead = 0;
    while (lead < entry.size() && entry[lead] == ' ') ++lead;
    entry.remove_prefix(lead);
    while (!entry.empty() && entry.back() == ' ') entry.remove_suffix(1);
    const std::size_t offset = start + lead;

    double value;
    if (const auto slash = entry.find('/'); slash != std::string_view::npos) {
      const double num = parse_number(entry.substr(0, slash), offset, flag);
      const double den = parse_number(entry.substr(slash + 1), offset + slash + 1, flag);
      if (den == 0.0) throw UsageError(std::string(flag) + ": zero denominator at position " + std::to_string(offset));
      value = num / den;
    } else {
      value = parse_number(entry, offset, flag);
    }
    if (!std::isfinite(value) || value < 0.0)
      throw UsageError(std::string(flag) + ": entries must be finite and nonnegative (position " +
                       std::to_string(offset) + ")");
    z.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return z;
}

std::vector<Permutation> read_points(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("--points: cannot open " + path.string());
  std::vector<Permutation> points;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      points.push_back(Permutation::parse(line));
    } catch (const ParseError& e) {
      throw UsageError("--points: line " + std::to_string(number) + ": " + e.what());
    }
  }
  if (points.empty()) throw UsageError("--points: no permutations in " + path.string());
  const int n = points.front().degree();
  for (const auto& p : points)
    if (p.degree() != n) throw UsageError("--points: mixed degrees in " + path.string());
  return points;
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw UsageError("write failed: " + path.string());
}

std::filesystem::path sidecar_path(const std::filesystem::path& out) {
  auto p = out;
  p += ".json";
  return p;
}

nlohmann::ordered_json sidecar(std::string_view command, const KernelParams& params, const Common& common) {
  nlohmann::ordered_json doc;
  doc["tool"] = tool_version();
  doc["command"] = command;
  doc["n"] = params.n();
  doc["m"] = params.m();
  doc["z"] = std::vector<double>(params.z().begin(), params.z().end());
  doc["normalized"] = params.normalized();
  doc["seed"] = common.seed;
  return doc;
}

std::string dump(const nlohmann::ordered_json& doc) { return doc.dump(2) + "\n"; }

std::string tool_version() { return std::string("psk ") + kVersion; }

}  // namespace psk::cli
