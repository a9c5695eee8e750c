#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "psk/partition.hpp"
#include "psk/permutation.hpp"

namespace psk {

/// χ_λ on the class of cycle type μ, by the Murnaghan–Nakayama rule. Exact; memoised in a
/// process-wide table that is safe for concurrent use. Throws InvalidArgument if |λ| ≠ |μ|.
std::int64_t character(const Partition& lambda, const Partition& mu);

/// Same value with no memo reads or writes.
std::int64_t character_uncached(const Partition& lambda, const Partition& mu);

/// χ_λ(g) = character(λ, cycle_type(g)).
std::int64_t character_at(const Partition& lambda, const Permutation& g);

/// Number of (λ, μ) entries currently held by the memo.
std::size_t character_memo_size();

/// Rows λ and columns μ both run over partitions_of(n) (descending lexicographic).
struct CharacterTable {
  int n = 0;
  std::vector<Partition> partitions;
  std::vector<std::int64_t> values;  // row-major

  std::int64_t at(std::size_t row, std::size_t col) const { return values[row * partitions.size() + col]; }

  /// Header "lambda\mu,<μ>…", then one line per λ. Partitions are quoted since they contain commas.
  std::string to_csv() const;
};

inline constexpr int kCharacterTableCap = 8;

/// Full table of Sₙ. Throws CapExceeded when n > cap.
CharacterTable character_table(int n, int cap = kCharacterTableCap);

/// max over λ,ν of |Σ_μ (n!/z_μ) χ_λ(μ) χ_ν(μ) − n!·[λ=ν]|. Zero for a correct table.
std::int64_t row_orthogonality_defect(const CharacterTable& table);

/// max over μ,ν of |Σ_λ χ_λ(μ) χ_λ(ν) − z_μ·[μ=ν]|. Zero for a correct table.
std::int64_t column_orthogonality_defect(const CharacterTable& table);

struct CharacterAverageReport {
  double expected = 0;  // χ_λ(gh⁻¹)/d_λ
  double average = 0;   // (1/n!) Σ_u χ_λ(gu) χ_λ(hu)
  double residual = 0;
  bool pass = false;
};

inline constexpr int kCharacterAverageCap = 6;

/// Checks χ_λ(gh⁻¹)/d_λ = E_u χ_λ(gu)χ_λ(hu) by summing over all of Sₙ; passes when the
/// residual is below 1e-12.
CharacterAverageReport verify_character_average(const Partition& lambda, const Permutation& g,
                                                 const Permutation& h);

}  // namespace psk
