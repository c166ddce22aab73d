#pragma once

// Growth-front states and the transfer graph between them.
//
// A front stores, per lane, how many more rows a previously placed s x s
// square still occupies beyond the current base line (0 .. s-1). One
// transition fills the next row: squares are dropped onto runs of s free
// lanes, every other free lane receives a monomer, and all heights shrink
// by one.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tilings {

inline constexpr std::size_t kDefaultStateCap = 100000;
inline constexpr std::size_t kDefaultGfCap = 400;

struct FrontState {
  std::vector<int> heights;

  friend bool operator==(const FrontState&, const FrontState&) = default;
  friend auto operator<=>(const FrontState&, const FrontState&) = default;
};

struct FrontStateHash {
  std::size_t operator()(const FrontState& f) const noexcept;
};

/// True when every height lies in [0, s) and every maximal run of equal
/// nonzero heights has a length that is a multiple of s.
bool is_valid_front(const FrontState& front, int s);

struct Transition {
  FrontState next;
  unsigned squares;
};

/// One entry per set of pairwise disjoint placements (the empty set
/// included), ordered by number of squares and then lexicographically by
/// placement positions.
std::vector<Transition> transitions(const FrontState& front, int s);

struct Edge {
  std::size_t target;
  unsigned squares;
  std::uint64_t multiplicity;
};

class StateCapExceeded : public std::runtime_error {
 public:
  StateCapExceeded(std::size_t count, std::size_t cap);
  std::size_t count() const { return count_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t count_;
  std::size_t cap_;
};

struct TransferGraph {
  int s = 0;
  int n = 0;
  std::vector<FrontState> states;        // index 0 is the all-zeros front
  std::vector<std::vector<Edge>> edges;  // out-edges per source, (target, k) unique

  std::size_t size() const { return states.size(); }
};

/// Breadth-first closure of `transitions` from the all-zeros front. States
/// are indexed in discovery order.
TransferGraph enumerate_states(int s, int n, std::size_t cap = kDefaultStateCap);

/// `index: h0 h1 ... h(n-1)`, one state per line.
std::string dump_states(const TransferGraph& g);
/// `src -> dst k=K mult=M`, one edge per line.
std::string dump_edges(const TransferGraph& g);

}  // namespace tilings
