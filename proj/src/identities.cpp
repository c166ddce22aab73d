#include "tilings/identities.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace tilings {

bool IdentityReport::passed() const { return failures() == 0; }

std::size_t IdentityReport::failures() const {
  return static_cast<std::size_t>(std::count_if(
      instances.begin(), instances.end(), [](const Instance& i) { return i.binding && !i.passed; }));
}

const CountTable& TableSource::table(int s, int n, int m) {
  auto key = std::make_tuple(s, n, m);
  if (auto it = tables_.find(key); it != tables_.end()) return it->second;

  auto& walks = walks_[{s, n}];
  if (static_cast<int>(walks.size()) <= m) {
    TransferGraph g = enumerate_states(s, n, caps_.state_cap);
    walks = closed_walk_series(g, std::max(m, 2 * static_cast<int>(walks.size())));
  }
  CountTable t = make_count_table(s, n, m, walks[m]);

  const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(m);
  if (cells > 0 && cells <= std::min(caps_.oracle_cells, kMaxOracleCells)) {
    ++oracle_checks_;
    CountTable truth = brute_force_counts(s, n, m, {caps_.oracle_cells, true});
    if (!(truth == t))
      disagreements_.push_back({s, n, m, -1, truth.row_sum, t.row_sum, false, true,
                                "engine and oracle tables differ"});
  }
  return tables_.emplace(key, std::move(t)).first->second;
}

namespace {

BigInt count_at(const CountTable& t, int k) {
  return k >= 0 && static_cast<std::size_t>(k) < t.counts.size() ? t.counts[k] : BigInt(0);
}

Instance compare(int s, int n, int m, int k, const BigInt& expected, const BigInt& actual,
                 std::string note, bool binding = true) {
  return {s, n, m, k, expected, actual, expected == actual, binding, std::move(note)};
}

BigInt binomial(long top, long k) {
  if (top < 0 || k < 0 || k > top) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(k));
  return out;
}

BigInt pow_big(long base, unsigned long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
  return out;
}

std::string describe(IntRange r) { return std::to_string(r.lo) + ".." + std::to_string(r.hi); }

}  // namespace

IdentityReport check_basic(TableSource& src, IntRange s_range, IntRange n_range, IntRange m_range) {
  IdentityReport rep{"basic",
                     "s=" + describe(s_range) + " n=" + describe(n_range) + " m=" + describe(m_range),
                     {}};
  for (int s = s_range.lo; s <= s_range.hi; ++s)
    for (int n = n_range.lo; n <= n_range.hi; ++n)
      for (int m = m_range.lo; m <= m_range.hi; ++m) {
        const CountTable t = src.table(s, n, m);
        auto& out = rep.instances;
        out.push_back(compare(s, n, m, 0, 1, count_at(t, 0), "monomers only"));
        if (n >= s && m >= s)
          out.push_back(compare(s, n, m, 1, BigInt((n - s + 1) * (m - s + 1)), count_at(t, 1),
                                "single square"));
        if (n >= s && m >= s && n % s == 0 && m % s == 0) {
          const int full = (n / s) * (m / s);
          out.push_back(compare(s, n, m, full, 1, count_at(t, full), "full coverage"));
        }
        if (s > n || s > m)
          out.push_back(compare(s, n, m, -1, 1, BigInt(static_cast<unsigned long>(t.counts.size())),
                                "small board: table length"));
        BigInt sum = 0;
        for (const auto& c : t.counts) sum += c;
        out.push_back(compare(s, n, m, -1, sum, t.row_sum, "row sum"));
        const CountTable& rotated = src.table(s, m, n);
        Instance rot = compare(s, n, m, -1, rotated.row_sum, t.row_sum, "rotation symmetry");
        rot.passed = rotated.counts == t.counts;
        out.push_back(rot);
      }
  return rep;
}

IdentityReport check_single_lane(TableSource& src, int s, IntRange m_range) {
  IdentityReport rep{"single-lane", "s=" + std::to_string(s) + " m=" + describe(m_range), {}};
  auto row_sum = [&](int m) { return src.table(s, s, m).row_sum; };
  for (int m = m_range.lo; m <= m_range.hi; ++m) {
    const CountTable t = src.table(s, s, m);
    const int k_max = m / s;
    for (int k = 0; k <= k_max; ++k)
      rep.instances.push_back(compare(s, s, m, k, binomial(m - static_cast<long>(s - 1) * k, k),
                                      count_at(t, k), "binomial"));
    rep.instances.push_back(compare(s, s, m, -1, BigInt(k_max + 1),
                                    BigInt(static_cast<unsigned long>(t.counts.size())),
                                    "table length"));
    if (m >= s)
      rep.instances.push_back(compare(s, s, m, -1, row_sum(m - 1) + row_sum(m - s), t.row_sum,
                                      "recurrence a(m) = a(m-1) + a(m-s)"));
    if (m >= 3)
      rep.instances.push_back(compare(s, s, m, -1, row_sum(m - 1) + row_sum(m - 3), t.row_sum,
                                      "printed lag-3 recurrence a(m) = a(m-1) + a(m-3)", false));
  }
  return rep;
}

IdentityReport check_subwidth(TableSource& src, IntRange s_range, int m_max) {
  IdentityReport rep{"subwidth", "s=" + describe(s_range) + " m=1.." + std::to_string(m_max), {}};
  for (int s = s_range.lo; s <= s_range.hi; ++s)
    for (int n = s; n < 2 * s; ++n)
      for (int m = 1; m <= m_max; ++m) {
        const CountTable narrow = src.table(s, s, m);
        const CountTable wide = src.table(s, n, m);
        for (std::size_t k = 0; k < std::max(narrow.counts.size(), wide.counts.size()); ++k) {
          const int kk = static_cast<int>(k);
          rep.instances.push_back(compare(s, n, m, kk, pow_big(n - s + 1, k) * count_at(narrow, kk),
                                          count_at(wide, kk), "(n-s+1)^k scaling"));
        }
      }
  return rep;
}

IdentityReport check_two_s_square(TableSource& src, IntRange s_range) {
  IdentityReport rep{"two-s-square", "s=" + describe(s_range), {}};
  for (int s = s_range.lo; s <= s_range.hi; ++s) {
    const CountTable t = src.table(s, 2 * s, 2 * s);
    auto add = [&](int k, long expected, const char* note) {
      rep.instances.push_back(compare(s, 2 * s, 2 * s, k, BigInt(expected), count_at(t, k), note));
    };
    add(1, static_cast<long>(s + 1) * (s + 1), "(s+1)^2");
    add(2, 2L * s * (s + 2), "2s(s+2)");
    add(3, 4L * s, "4s");
    add(4, 1, "full coverage");
    rep.instances.push_back(compare(s, 2 * s, 2 * s, -1, 5,
                                    BigInt(static_cast<unsigned long>(t.counts.size())),
                                    "table length"));
  }
  return rep;
}

IdentityReport check_jacobsthal(TableSource& src, int m_max) {
  IdentityReport rep{"jacobsthal", "s=2 n=3 m=0.." + std::to_string(m_max), {}};
  for (int m = 0; m <= m_max; ++m) {
    BigInt expected = pow_big(2, static_cast<unsigned long>(m + 1)) + (m % 2 ? -1 : 1);
    expected /= 3;
    rep.instances.push_back(
        compare(2, 3, m, -1, expected, src.table(2, 3, m).row_sum, "(2^(m+1) + (-1)^m) / 3"));
  }
  return rep;
}

IdentityReport check_conjectures(TableSource& src, IntRange s_range) {
  IdentityReport rep{"conjectures", "s=" + describe(s_range), {}};
  for (int s = std::max(s_range.lo, 2); s <= s_range.hi; ++s) {
    const long S = s;
    const CountTable a = src.table(s, 2 * s, 2 * s + 1);
    rep.instances.push_back(compare(s, 2 * s, 2 * s + 1, 2, BigInt(1 + 10 * S + 4 * S * S),
                                    count_at(a, 2), "conjecture 1: 1+10s+4s^2", false));
    rep.instances.push_back(compare(s, 2 * s, 2 * s + 1, 3, BigInt(2 + 16 * S), count_at(a, 3),
                                    "conjecture 1: 2+16s", false));
    rep.instances.push_back(
        compare(s, 2 * s, 2 * s + 1, 4, 9, count_at(a, 4), "conjecture 1: 9", false));
    if (s <= 2) continue;
    const CountTable b = src.table(s, 2 * s, 2 * s + 2);
    rep.instances.push_back(compare(s, 2 * s, 2 * s + 2, 2, BigInt(3 + 18 * S + 7 * S * S),
                                    count_at(b, 2), "conjecture 2: 3+18s+7s^2", false));
    rep.instances.push_back(compare(s, 2 * s, 2 * s + 2, 3, BigInt(8 + 40 * S), count_at(b, 3),
                                    "conjecture 2: 8+40s", false));
    rep.instances.push_back(
        compare(s, 2 * s, 2 * s + 2, 4, 36, count_at(b, 4), "conjecture 2: 36", false));
  }
  return rep;
}

IdentityReport oracle_agreement(const TableSource& src) {
  return {"oracle-agreement", std::to_string(src.oracle_checks()) + " boards compared",
          src.disagreements()};
}

namespace {

std::string where(const Instance& i) {
  std::ostringstream out;
  out << "s=" << i.s << " n=" << i.n << " m=" << i.m;
  if (i.k >= 0) out << " k=" << i.k;
  return out.str();
}

}  // namespace

std::string render_text(const std::vector<IdentityReport>& reports) {
  std::ostringstream out;
  for (const auto& rep : reports) {
    std::size_t binding = std::count_if(rep.instances.begin(), rep.instances.end(),
                                        [](const Instance& i) { return i.binding; });
    out << (rep.passed() ? "PASS " : "FAIL ") << rep.name << " (" << rep.range << "): " << binding
        << " checks, " << rep.failures() << " failed\n";
    for (const auto& i : rep.instances) {
      if (i.binding && i.passed) continue;
      const char* tag = i.binding ? "failed" : (i.passed ? "holds" : "does not hold");
      out << "  " << tag << ": " << where(i) << " expected " << i.expected.get_str() << ", got "
          << i.actual.get_str() << " [" << i.note << "]\n";
    }
  }
  return out.str();
}

std::string render_json(const std::vector<IdentityReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& rep : reports) {
    nlohmann::json instances = nlohmann::json::array();
    for (const auto& i : rep.instances)
      instances.push_back({{"s", i.s}, {"n", i.n}, {"m", i.m}, {"k", i.k},
                           {"expected", i.expected.get_str()}, {"actual", i.actual.get_str()},
                           {"passed", i.passed}, {"binding", i.binding}, {"note", i.note}});
    arr.push_back({{"name", rep.name}, {"range", rep.range}, {"passed", rep.passed()},
                   {"instances", instances}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace tilings
