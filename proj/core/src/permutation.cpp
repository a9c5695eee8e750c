#include "psk/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "psk/errors.hpp"

namespace psk {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  if (n < 1) throw InvalidArgument("permutation degree must be at least 1");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n) throw InvalidArgument("permutation image " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(v)]) throw InvalidArgument("permutation image " + std::to_string(v) + " repeated");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw InvalidArgument("permutation degree must be at least 1");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> images;
  std::vector<std::size_t> offsets;
  std::size_t pos = 0;
  auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    if (pos == text.size()) break;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) throw ParseError("expected an integer", pos);
    const auto end = static_cast<std::size_t>(ptr - text.data());
    if (end < text.size() && !is_sep(text[end])) throw ParseError("unexpected character '" + std::string(1, text[end]) + "'", end);
    images.push_back(value);
    offsets.push_back(pos);
    pos = end;
  }
  if (images.empty()) throw ParseError("empty permutation", 0);
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const int v = images[i];
    if (v < 1 || v > n) throw ParseError("image " + std::to_string(v) + " out of range 1.." + std::to_string(n), offsets[i]);
    if (seen[static_cast<std::size_t>(v)]) throw ParseError("image " + std::to_string(v) + " repeated", offsets[i]);
    seen[static_cast<std::size_t>(v)] = true;
  }
  return Permutation(std::move(images), Unchecked{});
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(images_[i]);
  }
  return s;
}

Permutation compose(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree()) throw DegreeMismatch(g.degree(), h.degree());
  std::vector<int> out(g.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = g.images_[static_cast<std::size_t>(h.images_[i] - 1)];
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& g) {
  std::vector<int> out(g.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[static_cast<std::size_t>(g.images_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation transposition(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n || i == j) throw InvalidArgument("transposition needs distinct points in 1..n");
  Permutation t = Permutation::identity(n);
  std::swap(t.images_[static_cast<std::size_t>(i - 1)], t.images_[static_cast<std::size_t>(j - 1)]);
  return t;
}

std::vector<std::vector<int>> cycles(const Permutation& g) {
  const int n = g.degree();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::vector<int>> out;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    auto& cyc = out.emplace_back();
    for (int i = start; !seen[static_cast<std::size_t>(i)]; i = g(i)) {
      seen[static_cast<std::size_t>(i)] = true;
      cyc.push_back(i);
    }
  }
  return out;
}

namespace {

// Cycle lengths of the map i ↦ f(i) on {1..n}.
template <class F>
std::vector<int> cycle_lengths(int n, F&& f) {
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> lengths;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    int len = 0;
    for (int i = start; !seen[static_cast<std::size_t>(i)]; i = f(i)) {
      seen[static_cast<std::size_t>(i)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

}  // namespace

int cycle_count(const Permutation& g) {
  return static_cast<int>(cycle_lengths(g.degree(), [&](int i) { return g(i); }).size());
}

Partition cycle_type(const Permutation& g) {
  return Partition::from_unsorted(cycle_lengths(g.degree(), [&](int i) { return g(i); }));
}

Partition quotient_cycle_type(const Permutation& g, const Permutation& h) {
  return cycle_type(compose(g, inverse(h)));
}

int cayley_distance(const Permutation& g, const Permutation& h) {
  return g.degree() - cycle_count(compose(g, inverse(h)));
}

std::vector<Permutation> enumerate_group(int n, int cap) {
  if (n < 1) throw InvalidArgument("group degree must be at least 1");
  if (n > cap) throw CapExceeded("enumerating S_" + std::to_string(n) + " exceeds the cap n <= " + std::to_string(cap));
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(factorial(n)));
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  do {
    out.push_back(Permutation(images, Permutation::Unchecked{}));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Permutation random_uniform(int n, Rng& rng) {
  Permutation g = Permutation::identity(n);
  auto& a = g.images_;
  for (std::size_t i = a.size(); i > 1; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(a[i - 1], a[pick(rng)]);
  }
  return g;
}

Permutation permutation_with_cycle_type(const Partition& mu) {
  Permutation g = Permutation::identity(mu.weight());
  int offset = 0;
  for (int len : mu.parts()) {
    for (int k = 0; k < len; ++k) g.images_[static_cast<std::size_t>(offset + k)] = offset + (k + 1) % len + 1;
    offset += len;
  }
  return g;
}

}  // namespace psk
