#include "tilings/gfun.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace tilings {

BiPoly SymbolicTransferMatrix::entry(std::size_t row, std::size_t col) const {
  auto it = entries.find({row, col});
  return it == entries.end() ? BiPoly() : it->second;
}

GfCapExceeded::GfCapExceeded(std::size_t dim, std::size_t cap)
    : std::runtime_error("generating function dimension " + std::to_string(dim) +
                         " exceeds the GF cap " + std::to_string(cap)),
      dim_(dim),
      cap_(cap) {}

SymbolicTransferMatrix build_matrix(const TransferGraph& g) {
  SymbolicTransferMatrix mat;
  mat.dim = g.size();
  for (std::size_t src = 0; src < g.size(); ++src)
    for (const Edge& e : g.edges[src])
      mat.entries[{e.target, src}] +=
          BiPoly::monomial(BigInt(static_cast<unsigned long>(e.multiplicity)), 1, e.squares);
  return mat;
}

namespace {

using Cells = std::vector<std::pair<std::size_t, BiPoly>>;  // sorted by column

struct Row {
  Cells cells;
  std::size_t level = 0;  // entries are minors of this elimination order
  bool active = true;

  const BiPoly* find(std::size_t col) const {
    auto it = std::lower_bound(cells.begin(), cells.end(), col,
                               [](const auto& cell, std::size_t c) { return cell.first < c; });
    return (it != cells.end() && it->first == col) ? &it->second : nullptr;
  }
};

// Bareiss over a sparse matrix. After step k every touched entry is a
// (k+1)-minor; a row left alone by step k only gains the factor
// p[k] / p[k-1], so untouched rows keep their level and are rescaled by
// the telescoped ratio p[target] / p[level] when next needed.
class Eliminator {
 public:
  Eliminator(std::vector<Row> rows, std::size_t pivot_cols)
      : rows_(std::move(rows)), col_active_(pivot_cols, true), pivots_{BiPoly(1)} {
    if (!col_active_.empty()) col_active_[0] = false;  // column 0 is solved for, never pivoted
  }

  // Eliminates every column except 0 and returns the surviving row at full
  // level.
  const Row& run() {
    const std::size_t steps = col_active_.size() - 1;
    for (std::size_t step = 1; step <= steps; ++step) {
      auto [r, c] = choose_pivot();
      lift(rows_[r], step - 1);
      const BiPoly pivot = *rows_[r].find(c);
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i == r || !rows_[i].active || !rows_[i].find(c)) continue;
        lift(rows_[i], step - 1);
        eliminate(rows_[i], rows_[r], c, pivot, pivots_[step - 1]);
        rows_[i].level = step;
      }
      pivots_.push_back(pivot);
      rows_[r].active = false;
      col_active_[c] = false;
    }
    for (Row& row : rows_) {
      if (!row.active) continue;
      lift(row, steps);
      return row;
    }
    throw EliminationDegenerate("no row left after elimination");
  }

 private:
  std::pair<std::size_t, std::size_t> choose_pivot() const {
    std::vector<std::size_t> col_count(col_active_.size(), 0);
    for (const Row& row : rows_) {
      if (!row.active) continue;
      for (const auto& [c, v] : row.cells)
        if (c < col_count.size()) ++col_count[c];
    }
    std::size_t best_r = 0, best_c = 0;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    std::size_t best_terms = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Row& row = rows_[r];
      if (!row.active) continue;
      for (const auto& [c, v] : row.cells) {
        if (c >= col_active_.size() || !col_active_[c]) continue;
        std::size_t cost = (row.cells.size() - 1) * (col_count[c] - 1);
        std::size_t terms = v.term_count();
        if (cost < best_cost || (cost == best_cost && terms < best_terms)) {
          best_cost = cost;
          best_terms = terms;
          best_r = r;
          best_c = c;
        }
      }
    }
    if (best_cost == std::numeric_limits<std::size_t>::max())
      throw EliminationDegenerate("singular system: no pivot available");
    return {best_r, best_c};
  }

  void lift(Row& row, std::size_t level) const {
    if (row.level == level) return;
    for (auto& [c, v] : row.cells) v = divexact(v * pivots_[level], pivots_[row.level]);
    row.level = level;
  }

  // row <- (pivot * row - row[c] * pivot_row) / prev, dropping column c.
  static void eliminate(Row& row, const Row& pivot_row, std::size_t c, const BiPoly& pivot,
                        const BiPoly& prev) {
    const BiPoly factor = *row.find(c);
    Cells out;
    out.reserve(row.cells.size() + pivot_row.cells.size());
    auto a = row.cells.begin();
    auto b = pivot_row.cells.begin();
    while (a != row.cells.end() || b != pivot_row.cells.end()) {
      BiPoly v;
      std::size_t col;
      if (b == pivot_row.cells.end() || (a != row.cells.end() && a->first < b->first)) {
        col = a->first;
        v = pivot * a->second;
        ++a;
      } else if (a == row.cells.end() || b->first < a->first) {
        col = b->first;
        v = -(factor * b->second);
        ++b;
      } else {
        col = a->first;
        v = pivot * a->second - factor * b->second;
        ++a;
        ++b;
      }
      if (col == c) continue;
      v = divexact(v, prev);
      if (!v.is_zero()) out.emplace_back(col, std::move(v));
    }
    row.cells = std::move(out);
  }

  std::vector<Row> rows_;
  std::vector<bool> col_active_;
  std::vector<BiPoly> pivots_;
};

}  // namespace

RatFun generating_function(const SymbolicTransferMatrix& mat, std::size_t dim_cap) {
  if (mat.dim == 0) throw std::invalid_argument("generating_function needs a nonempty matrix");
  if (mat.dim > dim_cap) throw GfCapExceeded(mat.dim, dim_cap);

  const std::size_t rhs = mat.dim;
  std::vector<Row> rows(mat.dim);
  for (std::size_t i = 0; i < mat.dim; ++i) rows[i].cells.emplace_back(i, BiPoly(1));
  for (const auto& [rc, v] : mat.entries) {
    auto& cells = rows[rc.first].cells;
    auto it = std::lower_bound(cells.begin(), cells.end(), rc.second,
                               [](const auto& cell, std::size_t c) { return cell.first < c; });
    if (it != cells.end() && it->first == rc.second) {
      it->second -= v;
      if (it->second.is_zero()) cells.erase(it);
    } else {
      cells.insert(it, {rc.second, -v});
    }
  }
  rows[0].cells.emplace_back(rhs, BiPoly(1));

  Eliminator elim(std::move(rows), mat.dim);
  const Row& last = elim.run();
  const BiPoly* det = last.find(0);
  if (!det) throw EliminationDegenerate("transfer system is singular");
  const BiPoly* num = last.find(rhs);
  return RatFun(num ? *num : BiPoly(), *det);
}

std::vector<PolyT> series_expand(const RatFun& r, unsigned z_order) {
  const int dz = r.den().degree_z();
  std::vector<PolyT> den(static_cast<std::size_t>(dz + 1));
  for (int i = 0; i <= dz; ++i) den[i] = r.den().z_slice(static_cast<unsigned>(i));
  if (!(den[0] == PolyT(1)))
    throw std::invalid_argument("series_expand needs a denominator with z^0 part equal to 1");

  std::vector<PolyT> out;
  for (unsigned j = 0; j <= z_order; ++j) {
    PolyT c = r.num().z_slice(j);
    for (unsigned i = 1; i <= j && i < den.size(); ++i)
      if (!den[i].is_zero()) c -= den[i] * out[j - i];
    out.push_back(std::move(c));
  }
  return out;
}

std::string emit_cas_script(const SymbolicTransferMatrix& mat, CasStyle style) {
  if (style != CasStyle::maple_like) throw std::invalid_argument("unsupported CAS style");
  std::vector<std::vector<std::pair<std::size_t, const BiPoly*>>> by_row(mat.dim);
  for (const auto& [rc, v] : mat.entries) by_row[rc.first].emplace_back(rc.second, &v);

  std::ostringstream out;
  out << "# transfer system, dim = " << mat.dim << "\n";
  for (std::size_t i = 0; i < mat.dim; ++i) {
    out << "eq_" << i << " := x" << i << " =";
    bool first = true;
    if (i == 0) {
      out << " 1";
      first = false;
    }
    for (const auto& [j, v] : by_row[i]) {
      out << (first ? " " : " + ") << '(' << v->str() << ")*x" << j;
      first = false;
    }
    if (first) out << " 0";
    out << ";\n";
  }
  auto list = [&](const char* prefix) {
    for (std::size_t i = 0; i < mat.dim; ++i) out << (i ? ", " : "") << prefix << i;
  };
  out << "sol := solve({";
  list("eq_");
  out << "}, {";
  list("x");
  out << "}):\n";
  out << "print(normal(subs(sol, x0)));\n";
  return out.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t parse_index(std::string_view s, std::size_t offset) {
  s = trim(s);
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("expected variable index", offset);
  return std::stoul(std::string(s));
}

}  // namespace

SymbolicTransferMatrix parse_cas_script(std::string_view script) {
  SymbolicTransferMatrix mat;
  std::size_t line_start = 0;
  std::size_t expected_row = 0;
  while (line_start < script.size()) {
    std::size_t line_end = script.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = script.size();
    std::string_view line = trim(script.substr(line_start, line_end - line_start));
    const std::size_t offset = line_start;
    line_start = line_end + 1;
    if (!line.starts_with("eq_")) continue;

    std::size_t assign = line.find(":=");
    std::size_t eq = line.find('=', assign + 2);
    if (assign == std::string_view::npos || eq == std::string_view::npos || line.back() != ';')
      throw ParseError("malformed equation", offset);
    std::string_view lhs = trim(line.substr(assign + 2, eq - assign - 2));
    if (!lhs.starts_with('x')) throw ParseError("expected unknown on left-hand side", offset);
    const std::size_t row = parse_index(lhs.substr(1), offset);
    if (row != expected_row++) throw ParseError("equations out of order", offset);

    std::string_view rhs = line.substr(eq + 1, line.size() - eq - 2);
    bool has_one = false;
    int depth = 0;
    std::size_t piece_start = 0;
    for (std::size_t i = 0; i <= rhs.size(); ++i) {
      if (i < rhs.size()) {
        if (rhs[i] == '(') ++depth;
        if (rhs[i] == ')') --depth;
        if (rhs[i] != '+' || depth != 0) continue;
      }
      std::string_view piece = trim(rhs.substr(piece_start, i - piece_start));
      piece_start = i + 1;
      if (piece == "0") continue;
      if (piece == "1") {
        has_one = true;
        continue;
      }
      std::size_t close = piece.rfind(')');
      if (!piece.starts_with('(') || close == std::string_view::npos ||
          !piece.substr(close + 1).starts_with("*x"))
        throw ParseError("expected (poly)*xj term", offset);
      BiPoly coeff = BiPoly::parse(piece.substr(1, close - 1));
      std::size_t col = parse_index(piece.substr(close + 3), offset);
      mat.entries[{row, col}] += coeff;
    }
    if (has_one != (row == 0)) throw ParseError("right-hand side is not the unit vector e0", offset);
  }
  mat.dim = expected_row;
  for (const auto& [rc, v] : mat.entries)
    if (rc.second >= mat.dim) throw ParseError("unknown x" + std::to_string(rc.second), 0);
  return mat;
}

}  // namespace tilings
