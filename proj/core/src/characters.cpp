#include "psk/characters.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "psk/errors.hpp"
#include "psk/young.hpp"

namespace psk {
namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

class Memo {
 public:
  bool find(const Key& key, std::int64_t& out) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return false;
    out = it->second;
    return true;
  }
  void insert(Key key, std::int64_t value) {
    std::unique_lock lock(mutex_);
    table_.emplace(std::move(key), value);
  }
  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, std::int64_t> table_;
};

Memo& memo() {
  static Memo instance;
  return instance;
}

// λ as a beta set: β_i = λ_i + (ℓ − 1 − i), strictly decreasing.
std::vector<int> beta_set(const std::vector<int>& lambda) {
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta(lambda.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + len - 1 - i;
  return beta;
}

std::vector<int> from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int len = static_cast<int>(beta.size());
  std::vector<int> lambda;
  for (int i = 0; i < len; ++i) {
    const int part = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (part > 0) lambda.push_back(part);
  }
  return lambda;
}

// μ is consumed from its largest part. Removing a rim hook of length r moves one bead from
// b to b − r; the sign is (−1)^(beads strictly between), which equals (−1)^(height − 1).
std::int64_t mn_rec(const std::vector<int>& lambda, std::span<const int> mu, bool use_memo) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  // Single row: trivial character. Single cycle: (−1)^leg on hooks, 0 elsewhere.
  if (lambda.size() == 1) return 1;
  if (mu.size() == 1) {
    for (std::size_t i = 1; i < lambda.size(); ++i)
      if (lambda[i] != 1) return 0;
    return (lambda.size() - 1) % 2 == 0 ? 1 : -1;
  }

  Key key;
  if (use_memo) {
    key = Key{lambda, std::vector<int>(mu.begin(), mu.end())};
    std::int64_t cached = 0;
    if (memo().find(key, cached)) return cached;
  }

  const int r = mu.front();
  const auto rest = mu.subspan(1);
  std::vector<int> beta = beta_set(lambda);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int from = beta[i];
    const int to = from - r;
    if (to < 0) continue;
    if (std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    int between = 0;
    for (int b : beta)
      if (b > to && b < from) ++between;
    std::vector<int> moved = beta;
    moved[i] = to;
    const std::int64_t sub = mn_rec(from_beta_set(std::move(moved)), rest, use_memo);
    total += (between % 2 == 0) ? sub : -sub;
  }

  if (use_memo) memo().insert(std::move(key), total);
  return total;
}

std::int64_t character_impl(const Partition& lambda, const Partition& mu, bool use_memo) {
  if (lambda.weight() != mu.weight())
    throw InvalidArgument("character: |lambda| = " + std::to_string(lambda.weight()) +
                          " but |mu| = " + std::to_string(mu.weight()));
  const std::vector<int> l(lambda.parts().begin(), lambda.parts().end());
  return mn_rec(l, mu.parts(), use_memo);
}

}  // namespace

std::int64_t character(const Partition& lambda, const Partition& mu) { return character_impl(lambda, mu, true); }

std::int64_t character_uncached(const Partition& lambda, const Partition& mu) {
  return character_impl(lambda, mu, false);
}

std::int64_t character_at(const Partition& lambda, const Permutation& g) {
  if (lambda.weight() != g.degree()) throw InvalidArgument("character_at: |lambda| != degree of g");
  return character(lambda, cycle_type(g));
}

std::size_t character_memo_size() { return memo().size(); }

std::string CharacterTable::to_csv() const {
  std::string out = "lambda\\mu";
  for (const auto& mu : partitions) out += ",\"" + mu.to_string() + "\"";
  out += "\n";
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    out += "\"" + partitions[i].to_string() + "\"";
    for (std::size_t j = 0; j < partitions.size(); ++j) out += "," + std::to_string(at(i, j));
    out += "\n";
  }
  return out;
}

CharacterTable character_table(int n, int cap) {
  if (n > cap) throw CapExceeded("character table of S_" + std::to_string(n) + " exceeds the cap n <= " + std::to_string(cap));
  CharacterTable t;
  t.n = n;
  t.partitions = partitions_of(n);
  t.values.reserve(t.partitions.size() * t.partitions.size());
  for (const auto& lambda : t.partitions)
    for (const auto& mu : t.partitions) t.values.push_back(character(lambda, mu));
  return t;
}

std::int64_t row_orthogonality_defect(const CharacterTable& table) {
  const std::size_t k = table.partitions.size();
  const auto order = static_cast<std::int64_t>(factorial(table.n));
  std::int64_t worst = 0;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      std::int64_t sum = 0;
      for (std::size_t c = 0; c < k; ++c)
        sum += static_cast<std::int64_t>(class_size(table.partitions[c])) * table.at(a, c) * table.at(b, c);
      worst = std::max(worst, std::abs(sum - (a == b ? order : 0)));
    }
  return worst;
}

std::int64_t column_orthogonality_defect(const CharacterTable& table) {
  const std::size_t k = table.partitions.size();
  std::int64_t worst = 0;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      std::int64_t sum = 0;
      for (std::size_t r = 0; r < k; ++r) sum += table.at(r, a) * table.at(r, b);
      const auto expected = a == b ? static_cast<std::int64_t>(centralizer_size(table.partitions[a])) : 0;
      worst = std::max(worst, std::abs(sum - expected));
    }
  return worst;
}

CharacterAverageReport verify_character_average(const Partition& lambda, const Permutation& g,
                                                 const Permutation& h) {
  if (g.degree() != h.degree()) throw DegreeMismatch(g.degree(), h.degree());
  const int n = g.degree();
  if (lambda.weight() != n) throw InvalidArgument("verify_character_average: |lambda| != n");
  const auto group = enumerate_group(n, kCharacterAverageCap);
  double sum = 0.0;
  for (const auto& u : group)
    sum += static_cast<double>(character_at(lambda, compose(g, u)) * character_at(lambda, compose(h, u)));
  CharacterAverageReport r;
  r.average = sum / static_cast<double>(group.size());
  r.expected = static_cast<double>(character_at(lambda, compose(g, inverse(h)))) / static_cast<double>(dimension(lambda));
  r.residual = std::abs(r.average - r.expected);
  r.pass = r.residual < 1e-12;
  return r;
}

}  // namespace psk
