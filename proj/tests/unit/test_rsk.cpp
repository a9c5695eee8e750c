#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "psk/rsk.hpp"
#include "psk/stats.hpp"
#include "psk/young.hpp"

using namespace psk;

namespace {

bool is_standard(const Tableau& t, int n) {
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      const int v = t[i][j];
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = true;
      if (j > 0 && t[i][j - 1] >= v) return false;
      if (i > 0 && (t[i - 1].size() <= j || t[i - 1][j] >= v)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("rsk_shape examples") {
  for (int n = 1; n <= 9; ++n) {
    CHECK(rsk_shape(Permutation::identity(n)) == Partition({n}));
    std::vector<int> rev;
    for (int i = n; i >= 1; --i) rev.push_back(i);
    CHECK(rsk_shape(Permutation(rev)) == Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
  }
  CHECK(rsk_shape(Permutation({3, 1, 2})) == Partition({2, 1}));
}

TEST_CASE("rsk_full") {
  const auto id = rsk_full(Permutation::identity(3));
  CHECK(id.p_tableau == Tableau{{1, 2, 3}});
  CHECK(id.q_tableau == Tableau{{1, 2, 3}});
  const auto t = rsk_full(Permutation({3, 1, 2}));
  CHECK(t.p_tableau == Tableau{{1, 2}, {3}});
  CHECK(t.q_tableau == Tableau{{1, 3}, {2}});
}

TEST_CASE("rsk is a bijection onto same-shape standard pairs on S4") {
  std::set<TableauPair> seen;
  for (const auto& g : enumerate_group(4)) {
    const auto pair = rsk_full(g);
    CHECK(is_standard(pair.p_tableau, 4));
    CHECK(is_standard(pair.q_tableau, 4));
    CHECK(pair.shape == rsk_shape(g));
    seen.insert(pair);
  }
  CHECK(seen.size() == 24);
}

TEST_CASE("shape distribution over S5 is exactly Plancherel") {
  std::map<Partition, std::uint64_t> counts;
  for (const auto& g : enumerate_group(5)) ++counts[rsk_shape(g)];
  for (const auto& l : partitions_of(5)) CHECK(counts[l] == dimension(l) * dimension(l));
}

TEST_CASE("shape is invariant under inversion (P and Q swap)") {
  for (const auto& g : enumerate_group(5)) {
    const auto a = rsk_full(g);
    const auto b = rsk_full(inverse(g));
    REQUIRE(a.shape == b.shape);
    REQUIRE(a.p_tableau == b.q_tableau);
  }
}

TEST_CASE("first row length is the longest increasing subsequence") {
  Rng rng(12);
  for (int t = 0; t < 1000; ++t) {
    const auto g = random_uniform(12, rng);
    REQUIRE(rsk_shape(g)[0] == oracle::longest_increasing_subsequence(g));
  }
}

TEST_CASE("uniform draws on S6 follow Plancherel (chi-square, 99.9%)") {
  const auto parts = partitions_of(6);
  std::map<Partition, std::size_t> freq;
  Rng rng(606);
  for (int i = 0; i < 100000; ++i) ++freq[rsk_shape(random_uniform(6, rng))];
  std::vector<std::size_t> observed;
  std::vector<double> probs;
  for (const auto& l : parts) {
    observed.push_back(freq[l]);
    probs.push_back(plancherel_probability(l, 6));
  }
  CHECK(stats::chi_square_gof(observed, probs).p_value > 0.001);
}
