#pragma once

// Closed-form identities and conjectures for T_{n x m}(s, k), checked
// against the series engine (and against the oracle wherever the board is
// small enough for it).

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tilings/oracle.hpp"
#include "tilings/series.hpp"

namespace tilings {

struct Instance {
  int s = 0, n = 0, m = 0, k = -1;  // k = -1 when the check concerns a whole table
  BigInt expected;
  BigInt actual;
  bool passed = false;
  /// Binding instances decide the report verdict; conjectures and
  /// observations about printed-but-dubious formulas are recorded only.
  bool binding = true;
  std::string note;
};

struct IdentityReport {
  std::string name;
  std::string range;
  std::vector<Instance> instances;

  bool passed() const;
  std::size_t failures() const;
};

struct IntRange {
  int lo = 1;
  int hi = 1;
};

struct Caps {
  std::size_t state_cap = kDefaultStateCap;
  std::size_t oracle_cells = kDefaultOracleCells;
};

/// Memoizing source of count tables. Each (s, n) gets one transfer graph,
/// extended in m on demand. When n*m fits the oracle, the oracle runs too
/// and any disagreement is collected in `disagreements()`.
class TableSource {
 public:
  explicit TableSource(Caps caps = {}) : caps_(caps) {}

  const CountTable& table(int s, int n, int m);
  const std::vector<Instance>& disagreements() const { return disagreements_; }
  std::size_t oracle_checks() const { return oracle_checks_; }
  const Caps& caps() const { return caps_; }

 private:
  Caps caps_;
  std::map<std::pair<int, int>, std::vector<PolyT>> walks_;
  std::map<std::tuple<int, int, int>, CountTable> tables_;
  std::vector<Instance> disagreements_;
  std::size_t oracle_checks_ = 0;
};

/// k = 0 count, one-square count, full coverage, small-board degeneracy,
/// rotation symmetry, row sum, and engine/oracle agreement.
IdentityReport check_basic(TableSource& src, IntRange s_range, IntRange n_range, IntRange m_range);

/// Width-s boards: binomial counts per k and the row-sum recurrence
/// a_m = a_{m-1} + a_{m-s}. The printed lag-3 variant is recorded as a
/// non-binding observation.
IdentityReport check_single_lane(TableSource& src, int s, IntRange m_range);

/// T_{n x m}(s, k) = (n-s+1)^k T_{s x m}(s, k) for s <= n < 2s.
IdentityReport check_subwidth(TableSource& src, IntRange s_range, int m_max);

/// The four closed forms on the 2s x 2s board.
IdentityReport check_two_s_square(TableSource& src, IntRange s_range);

/// Row sums of width-3 boards with s = 2 against (2^{m+1} + (-1)^m) / 3.
IdentityReport check_jacobsthal(TableSource& src, int m_max);

/// Conjectured closed forms on 2s x (2s+1) (s > 1) and 2s x (2s+2) (s > 2)
/// boards; instances are non-binding confirmations or refutations.
IdentityReport check_conjectures(TableSource& src, IntRange s_range);

/// Engine/oracle disagreements seen by `src` so far, as one binding report.
IdentityReport oracle_agreement(const TableSource& src);

std::string render_text(const std::vector<IdentityReport>& reports);
std::string render_json(const std::vector<IdentityReport>& reports);

}  // namespace tilings
