#include "psk/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "psk/errors.hpp"

namespace psk {

__extension__ typedef unsigned __int128 u128;

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidArgument("partition parts must be weakly decreasing");
    weight_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_space();
  if (pos == text.size()) throw ParseError("empty partition", pos);
  while (pos < text.size()) {
    skip_space();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) throw ParseError("expected a positive integer", pos);
    if (value < 1) throw ParseError("partition parts must be positive", pos);
    if (!parts.empty() && value > parts.back()) throw ParseError("partition parts must be weakly decreasing", pos);
    parts.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    skip_space();
    if (pos < text.size()) {
      if (text[pos] != ',') throw ParseError("expected ','", pos);
      ++pos;
      if (pos == text.size()) throw ParseError("trailing ','", pos);
    }
  }
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> out(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (int row : parts_)
    for (int j = 0; j < row; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

int CycleCounts::weight() const noexcept {
  int w = 0;
  for (std::size_t j = 1; j < counts.size(); ++j) w += static_cast<int>(j) * counts[j];
  return w;
}

CycleCounts to_cycle_counts(const Partition& mu) {
  CycleCounts c;
  c.counts.assign(static_cast<std::size_t>(mu.weight()) + 1, 0);
  for (int part : mu.parts()) ++c.counts[static_cast<std::size_t>(part)];
  return c;
}

Partition to_partition(const CycleCounts& counts) {
  std::vector<int> parts;
  for (std::size_t j = counts.counts.size(); j-- > 1;)
    for (int k = 0; k < counts.counts[j]; ++k) parts.push_back(static_cast<int>(j));
  return Partition(std::move(parts));
}

namespace {

void partitions_rec(int remaining, int max_part, int max_len, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (max_len == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, max_len - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, std::optional<int> max_length) {
  if (n < 1) throw InvalidArgument("partitions_of requires n >= 1");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, max_length.value_or(n), prefix, out);
  return out;
}

std::uint64_t factorial(int n) {
  if (n < 0) throw InvalidArgument("factorial of a negative number");
  if (n > 20) throw CapExceeded("factorial overflows 64 bits beyond n = 20");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t centralizer_size(const Partition& mu) {
  const CycleCounts c = to_cycle_counts(mu);
  u128 z = 1;
  for (std::size_t j = 1; j < c.counts.size(); ++j) {
    for (int k = 1; k <= c.counts[j]; ++k) z *= static_cast<u128>(j) * static_cast<unsigned>(k);
  }
  if (z > static_cast<u128>(UINT64_MAX)) throw CapExceeded("centralizer order overflows 64 bits");
  return static_cast<std::uint64_t>(z);
}

std::uint64_t class_size(const Partition& mu) { return factorial(mu.weight()) / centralizer_size(mu); }

}  // namespace psk
