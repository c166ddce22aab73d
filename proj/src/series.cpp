#include "tilings/series.hpp"

#include <sstream>

#include "json.hpp"

namespace tilings {

CountTable make_count_table(int s, int n, int m, const PolyT& by_squares) {
  CountTable t{s, n, m, by_squares.dense(), 0};
  if (t.counts.empty()) t.counts.push_back(0);
  for (const auto& c : t.counts) t.row_sum += c;
  return t;
}

std::vector<PolyT> closed_walk_series(const TransferGraph& g, int m_max) {
  std::vector<PolyT> out;
  std::vector<PolyT> v(g.size());
  v[0] = PolyT(1);
  out.push_back(v[0]);
  for (int m = 1; m <= m_max; ++m) {
    std::vector<PolyT> next(g.size());
    for (std::size_t src = 0; src < g.size(); ++src) {
      if (v[src].is_zero()) continue;
      for (const Edge& e : g.edges[src])
        next[e.target].add_scaled(v[src], BigInt(static_cast<unsigned long>(e.multiplicity)),
                                  e.squares);
    }
    v = std::move(next);
    out.push_back(v[0]);
  }
  return out;
}

CountTable count_table(int s, int n, int m, std::size_t state_cap) {
  if (s < 1 || n < 1 || m < 0) throw std::invalid_argument("count_table needs s, n >= 1 and m >= 0");
  if (m == 0) return make_count_table(s, n, 0, PolyT(1));
  TransferGraph g = enumerate_states(s, n, state_cap);
  return make_count_table(s, n, m, closed_walk_series(g, m).back());
}

std::vector<BigInt> row_sum_sequence(int s, int n, int m_max, std::size_t state_cap) {
  TransferGraph g = enumerate_states(s, n, state_cap);
  std::vector<BigInt> out;
  for (const PolyT& p : closed_walk_series(g, m_max)) out.push_back(p.evaluate(1));
  return out;
}

std::vector<CountTable> square_table(int s, int size_max, std::size_t state_cap) {
  std::vector<CountTable> out;
  for (int size = 1; size <= size_max; ++size) out.push_back(count_table(s, size, size, state_cap));
  return out;
}

std::vector<CountTable> table_sweep(int s, int n, int m_max, std::size_t state_cap) {
  TransferGraph g = enumerate_states(s, n, state_cap);
  auto walks = closed_walk_series(g, m_max);
  std::vector<CountTable> out;
  for (int m = 1; m <= m_max; ++m) out.push_back(make_count_table(s, n, m, walks[m]));
  return out;
}

std::string format_paper(const CountTable& t) {
  std::ostringstream out;
  out << t.s << ' ' << t.n << ' ' << t.m << " :";
  for (const auto& c : t.counts) out << ' ' << c.get_str();
  out << " : " << t.row_sum.get_str();
  return out.str();
}

std::string format_csv(const std::vector<CountTable>& tables) {
  std::ostringstream out;
  out << "s,n,m,k,count\n";
  for (const auto& t : tables)
    for (std::size_t k = 0; k < t.counts.size(); ++k)
      out << t.s << ',' << t.n << ',' << t.m << ',' << k << ',' << t.counts[k].get_str() << '\n';
  return out.str();
}

std::string format_json(const std::vector<CountTable>& tables) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : tables) {
    nlohmann::json counts = nlohmann::json::array();
    for (const auto& c : t.counts) counts.push_back(c.get_str());
    arr.push_back({{"s", t.s}, {"n", t.n}, {"m", t.m}, {"counts", counts},
                   {"row_sum", t.row_sum.get_str()}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace tilings
