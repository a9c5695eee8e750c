#include "psk/rsk.hpp"

#include <algorithm>

namespace psk {

TableauPair rsk_full(const Permutation& g) {
  TableauPair out;
  for (int step = 1; step <= g.degree(); ++step) {
    int value = g(step);
    std::size_t row = 0;
    for (;; ++row) {
      if (row == out.p_tableau.size()) {
        out.p_tableau.push_back({value});
        out.q_tableau.push_back({step});
        break;
      }
      auto& r = out.p_tableau[row];
      auto it = std::upper_bound(r.begin(), r.end(), value);
      if (it == r.end()) {
        r.push_back(value);
        out.q_tableau[row].push_back(step);
        break;
      }
      std::swap(*it, value);
    }
  }
  std::vector<int> parts;
  for (const auto& r : out.p_tableau) parts.push_back(static_cast<int>(r.size()));
  out.shape = Partition(std::move(parts));
  return out;
}

Partition rsk_shape(const Permutation& g) {
  Tableau rows;
  for (int value : g.images()) {
    for (std::size_t row = 0;; ++row) {
      if (row == rows.size()) {
        rows.push_back({value});
        break;
      }
      auto& r = rows[row];
      auto it = std::upper_bound(r.begin(), r.end(), value);
      if (it == r.end()) {
        r.push_back(value);
        break;
      }
      std::swap(*it, value);
    }
  }
  std::vector<int> parts;
  parts.reserve(rows.size());
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

}  // namespace psk
