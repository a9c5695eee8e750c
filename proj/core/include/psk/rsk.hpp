#pragma once

#include <tuple>
#include <vector>

#include "psk/partition.hpp"
#include "psk/permutation.hpp"

namespace psk {

using Tableau = std::vector<std::vector<int>>;

/// Insertion tableau P and recording tableau Q of g, both standard of the same shape.
struct TableauPair {
  Tableau p_tableau;
  Tableau q_tableau;
  Partition shape;

  friend bool operator==(const TableauPair&, const TableauPair&) = default;
  friend auto operator<=>(const TableauPair& a, const TableauPair& b) {
    return std::tie(a.p_tableau, a.q_tableau) <=> std::tie(b.p_tableau, b.q_tableau);
  }
};

/// Robinson–Schensted row insertion of g(1), …, g(n).
TableauPair rsk_full(const Permutation& g);

/// Shape of the insertion tableau only. Row insertion with a binary search per row.
Partition rsk_shape(const Permutation& g);

}  // namespace psk
