#pragma once

// Exact coefficient tables T_{n x m}(s, k), obtained by iterating the
// transfer operator on vectors of polynomials in t.

#include <string>
#include <vector>

#include "tilings/engine.hpp"
#include "tilings/poly.hpp"

namespace tilings {

/// Counts of tilings of an n x m board by k squares of side s, k = 0.. the
/// largest k admitting a packing (trailing zeros are not stored).
struct CountTable {
  int s = 0;
  int n = 0;
  int m = 0;
  std::vector<BigInt> counts;
  BigInt row_sum;

  friend bool operator==(const CountTable&, const CountTable&) = default;
};

/// Builds a table from the polynomial sum_k T(s,k) t^k.
CountTable make_count_table(int s, int n, int m, const PolyT& by_squares);

/// Entry m (0..m_max) is the state-0 component of M^m e0: the polynomial in
/// t whose coefficients are T_{n x m}(s, k).
std::vector<PolyT> closed_walk_series(const TransferGraph& g, int m_max);

CountTable count_table(int s, int n, int m, std::size_t state_cap = kDefaultStateCap);

/// Element m is the total number of tilings of the n x m board; element 0
/// is 1.
std::vector<BigInt> row_sum_sequence(int s, int n, int m_max,
                                     std::size_t state_cap = kDefaultStateCap);

/// count_table(s, size, size) for size = 1..size_max.
std::vector<CountTable> square_table(int s, int size_max, std::size_t state_cap = kDefaultStateCap);

/// count_table(s, n, m) for m = 1..m_max, sharing one transfer graph.
std::vector<CountTable> table_sweep(int s, int n, int m_max, std::size_t state_cap = kDefaultStateCap);

/// `S N M : c0 c1 ... cK : ROWSUM`
std::string format_paper(const CountTable& t);
/// Header `s,n,m,k,count`, then one row per (table, k).
std::string format_csv(const std::vector<CountTable>& tables);
/// JSON array of {"s","n","m","counts","row_sum"}; counts are decimal
/// strings so that values beyond 64 bits survive.
std::string format_json(const std::vector<CountTable>& tables);

}  // namespace tilings
