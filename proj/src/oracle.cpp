#include "tilings/oracle.hpp"

#include <bit>
#include <unordered_map>
#include <vector>

namespace tilings {

BoardTooLarge::BoardTooLarge(std::size_t cells, std::size_t cap)
    : std::runtime_error("board of " + std::to_string(cells) + " cells exceeds the oracle cell cap " +
                         std::to_string(cap)),
      cells_(cells),
      cap_(cap) {}

namespace {

using Mask = unsigned __int128;

struct MaskHash {
  std::size_t operator()(Mask m) const noexcept {
    auto lo = static_cast<std::uint64_t>(m);
    auto hi = static_cast<std::uint64_t>(m >> 64);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ull));
  }
};

int first_zero(Mask occupied) {
  auto lo = static_cast<std::uint64_t>(occupied);
  if (lo != ~std::uint64_t{0}) return std::countr_one(lo);
  return 64 + std::countr_one(static_cast<std::uint64_t>(occupied >> 64));
}

class Board {
 public:
  Board(int s, int n, int m) : s_(s), n_(n), m_(m), cells_(n * m) {
    full_ = cells_ == 128 ? ~Mask{0} : ((Mask{1} << cells_) - 1);
  }

  // Occupancy mask of the s x s square whose top-left cell is `cell`, or 0
  // when it leaves the board.
  Mask square_at(int cell) const {
    int row = cell / m_, col = cell % m_;
    if (row + s_ > n_ || col + s_ > m_) return 0;
    Mask line = ((Mask{1} << s_) - 1) << col;
    Mask sq = 0;
    for (int r = row; r < row + s_; ++r) sq |= line << (r * m_);
    return sq;
  }

  // Adds, for every tiling completing `occupied`, t^(squares so far) into
  // `counts`.
  void enumerate(Mask occupied, std::size_t squares, std::vector<BigInt>& counts) const {
    if (occupied == full_) {
      if (counts.size() <= squares) counts.resize(squares + 1);
      ++counts[squares];
      return;
    }
    int cell = first_zero(occupied);
    enumerate(occupied | (Mask{1} << cell), squares, counts);
    Mask sq = square_at(cell);
    if (sq && !(sq & occupied)) enumerate(occupied | sq, squares + 1, counts);
  }

  // Polynomial in t counting the completions of `occupied`.
  const PolyT& completions(Mask occupied) {
    if (auto it = memo_.find(occupied); it != memo_.end()) return it->second;
    PolyT result;
    if (occupied == full_) {
      result = PolyT(1);
    } else {
      int cell = first_zero(occupied);
      result = completions(occupied | (Mask{1} << cell));
      Mask sq = square_at(cell);
      if (sq && !(sq & occupied)) result.add_scaled(completions(occupied | sq), 1, 1);
    }
    return memo_.emplace(occupied, std::move(result)).first->second;
  }

 private:
  int s_, n_, m_, cells_;
  Mask full_;
  std::unordered_map<Mask, PolyT, MaskHash> memo_;
};

}  // namespace

CountTable brute_force_counts(int s, int n, int m, const OracleOptions& options) {
  if (s < 1 || n < 0 || m < 0) throw std::invalid_argument("brute_force_counts needs s >= 1");
  const std::size_t cap = std::min(options.cell_cap, kMaxOracleCells);
  const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(m);
  if (cells > cap) throw BoardTooLarge(cells, cap);
  if (cells == 0) return make_count_table(s, n, m, PolyT(1));

  Board board(s, n, m);
  if (options.memoize) return make_count_table(s, n, m, board.completions(0));
  std::vector<BigInt> counts;
  board.enumerate(0, 0, counts);
  return make_count_table(s, n, m, PolyT::from_dense(counts));
}

}  // namespace tilings
