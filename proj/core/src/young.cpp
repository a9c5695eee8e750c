#include "psk/young.hpp"

#include "psk/errors.hpp"

namespace psk {

__extension__ typedef unsigned __int128 u128;

int YoungDiagram::leg(int row, int col) const {
  int leg = 0;
  while (contains(row + leg + 1, col)) ++leg;
  return leg;
}

std::vector<int> SemistandardTableau::content_counts(int m) const {
  std::vector<int> counts(static_cast<std::size_t>(m) + 1, 0);
  for (const auto& row : rows)
    for (int v : row) ++counts[static_cast<std::size_t>(v)];
  return counts;
}

std::uint64_t dimension(const Partition& lambda) {
  const int n = lambda.weight();
  if (n > 20) throw CapExceeded("dimension: |lambda| > 20 overflows 64-bit factorials");
  const YoungDiagram d{lambda};
  u128 hooks = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) hooks *= static_cast<unsigned>(d.hook(i, j));
  return static_cast<std::uint64_t>(static_cast<u128>(factorial(n)) / hooks);
}

double ssyt_count(const Partition& lambda, int m) {
  if (lambda.length() > m) return 0.0;
  const YoungDiagram d{lambda};
  double count = 1.0;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) count *= static_cast<double>(m + d.content(i, j)) / d.hook(i, j);
  return count;
}

namespace detail {

void check_ssyt_budget(const Partition& lambda, int m, double limit) {
  if (m < 1) throw InvalidArgument("alphabet size must be at least 1");
  const double count = ssyt_count(lambda, m);
  if (count > limit)
    throw CapExceeded("SSYT enumeration of shape " + lambda.to_string() + " over " + std::to_string(m) +
                      " letters would produce ~" + std::to_string(count) + " tableaux");
}

}  // namespace detail

std::vector<SemistandardTableau> enumerate_ssyt(const Partition& lambda, int m, double limit) {
  std::vector<SemistandardTableau> out;
  for_each_ssyt(lambda, m, [&](const SemistandardTableau& t) { out.push_back(t); }, limit);
  return out;
}

double plancherel_probability(const Partition& lambda, int n) {
  if (lambda.weight() != n) throw InvalidArgument("plancherel_probability: |lambda| != n");
  const double d = static_cast<double>(dimension(lambda));
  return d * d / static_cast<double>(factorial(n));
}

}  // namespace psk
