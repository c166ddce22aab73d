#pragma once

// Brute-force tiling counter: cell-by-cell backtracking that always fills
// the first empty cell (row-major) with either a monomer or an s x s square
// anchored there. Shares no code with the transfer-matrix engine.

#include <cstddef>
#include <stdexcept>

#include "tilings/series.hpp"

namespace tilings {

inline constexpr std::size_t kDefaultOracleCells = 64;
inline constexpr std::size_t kMaxOracleCells = 128;

class BoardTooLarge : public std::runtime_error {
 public:
  BoardTooLarge(std::size_t cells, std::size_t cap);
  std::size_t cells() const { return cells_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cells_;
  std::size_t cap_;
};

struct OracleOptions {
  std::size_t cell_cap = kDefaultOracleCells;  // at most kMaxOracleCells
  /// Cache subtree results keyed by the full occupancy mask. Off means every
  /// tiling is visited as a separate leaf.
  bool memoize = true;
};

CountTable brute_force_counts(int s, int n, int m, const OracleOptions& options = {});

}  // namespace tilings
