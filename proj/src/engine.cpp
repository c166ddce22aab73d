#include "tilings/engine.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace tilings {

std::size_t FrontStateHash::operator()(const FrontState& f) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : f.heights) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

bool is_valid_front(const FrontState& front, int s) {
  const auto& h = front.heights;
  for (std::size_t i = 0; i < h.size();) {
    if (h[i] < 0 || h[i] >= s) return false;
    std::size_t j = i;
    while (j < h.size() && h[j] == h[i]) ++j;
    if (h[i] != 0 && (j - i) % static_cast<std::size_t>(s) != 0) return false;
    i = j;
  }
  return true;
}

namespace {

void place_from(const FrontState& front, int s, std::size_t pos, std::vector<int>& placed,
                std::vector<std::vector<int>>& out) {
  const int n = static_cast<int>(front.heights.size());
  for (int i = static_cast<int>(pos); i + s <= n; ++i) {
    bool free = std::all_of(front.heights.begin() + i, front.heights.begin() + i + s,
                            [](int v) { return v == 0; });
    if (!free) continue;
    placed.push_back(i);
    out.push_back(placed);
    place_from(front, s, static_cast<std::size_t>(i + s), placed, out);
    placed.pop_back();
  }
}

}  // namespace

std::vector<Transition> transitions(const FrontState& front, int s) {
  std::vector<std::vector<int>> sets{{}};
  std::vector<int> placed;
  place_from(front, s, 0, placed, sets);
  std::stable_sort(sets.begin(), sets.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });

  std::vector<Transition> out;
  out.reserve(sets.size());
  for (const auto& set : sets) {
    FrontState next = front;
    for (int i : set) std::fill_n(next.heights.begin() + i, s, s);
    for (int& v : next.heights) v = std::max(v - 1, 0);
    out.push_back({std::move(next), static_cast<unsigned>(set.size())});
  }
  return out;
}

StateCapExceeded::StateCapExceeded(std::size_t count, std::size_t cap)
    : std::runtime_error("state cap exceeded: more than " + std::to_string(cap) +
                         " reachable front states (reached " + std::to_string(count) + ")"),
      count_(count),
      cap_(cap) {}

TransferGraph enumerate_states(int s, int n, std::size_t cap) {
  if (s < 1 || n < 1 || cap < 1) throw std::invalid_argument("enumerate_states needs s, n, cap >= 1");

  TransferGraph g;
  g.s = s;
  g.n = n;
  std::unordered_map<FrontState, std::size_t, FrontStateHash> index;
  g.states.push_back(FrontState{std::vector<int>(static_cast<std::size_t>(n), 0)});
  index.emplace(g.states.front(), 0);

  for (std::size_t src = 0; src < g.states.size(); ++src) {
    std::vector<Edge> out;
    for (auto& [next, k] : transitions(g.states[src], s)) {
      auto [it, inserted] = index.try_emplace(next, g.states.size());
      if (inserted) {
        if (g.states.size() >= cap) throw StateCapExceeded(g.states.size() + 1, cap);
        g.states.push_back(std::move(next));
      }
      std::size_t target = it->second;
      auto same = std::find_if(out.begin(), out.end(), [&](const Edge& e) {
        return e.target == target && e.squares == k;
      });
      if (same != out.end()) ++same->multiplicity;
      else out.push_back({target, k, 1});
    }
    g.edges.push_back(std::move(out));
  }
  return g;
}

std::string dump_states(const TransferGraph& g) {
  std::ostringstream out;
  for (std::size_t i = 0; i < g.states.size(); ++i) {
    out << i << ':';
    for (int v : g.states[i].heights) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

std::string dump_edges(const TransferGraph& g) {
  std::ostringstream out;
  for (std::size_t src = 0; src < g.edges.size(); ++src)
    for (const Edge& e : g.edges[src])
      out << src << " -> " << e.target << " k=" << e.squares << " mult=" << e.multiplicity << '\n';
  return out.str();
}

}  // namespace tilings
