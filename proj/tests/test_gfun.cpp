#include "doctest.h"

#include "fixtures.hpp"
#include "tilings/gfun.hpp"
#include "tilings/oracle.hpp"
#include "tilings/series.hpp"

using namespace tilings;

namespace {

BiPoly P(const char* text) { return BiPoly::parse(text); }
RatFun R(const char* text) { return RatFun::parse(text); }

RatFun gf(int s, int n) { return generating_function(build_matrix(enumerate_states(s, n))); }

}  // namespace

TEST_CASE("build_matrix examples") {
  auto m22 = build_matrix(enumerate_states(2, 2));
  CHECK(m22.dim == 2);
  CHECK(m22.entries.size() == 3);
  CHECK(m22.entry(0, 0) == P("z"));
  CHECK(m22.entry(1, 0) == P("z*t"));
  CHECK(m22.entry(0, 1) == P("z"));
  CHECK(m22.entry(1, 1).is_zero());

  auto g23 = enumerate_states(2, 3);
  auto m23 = build_matrix(g23);
  REQUIRE(g23.size() == 3);
  CHECK(g23.states[1].heights == std::vector<int>{1, 1, 0});
  CHECK(g23.states[2].heights == std::vector<int>{0, 1, 1});
  CHECK(m23.entry(1, 0) == P("z*t"));
  CHECK(m23.entry(2, 0) == P("z*t"));

  auto m32 = build_matrix(enumerate_states(3, 2));
  CHECK(m32.dim == 1);
  CHECK(m32.entry(0, 0) == P("z"));

  // Multiplicities fold into the coefficient.
  auto m15 = build_matrix(enumerate_states(1, 5));
  CHECK(m15.entry(0, 0) == P("z + 5*z*t + 10*z*t^2 + 10*z*t^3 + 5*z*t^4 + z*t^5"));
}

TEST_CASE("every matrix entry is z times a polynomial in t") {
  for (int s = 1; s <= 4; ++s)
    for (int n = 1; n <= 8; ++n)
      for (const auto& [rc, v] : build_matrix(enumerate_states(s, n)).entries)
        for (const auto& term : v.terms()) CHECK(term.mono.z == 1);
}

TEST_CASE("generating_function examples") {
  CHECK(gf(2, 2).str() == "(1) / (1 - z - z^2*t)");
  CHECK(ratfun_eq(gf(3, 6), fixtures::printed_gf(3, 6)));
  CHECK(ratfun_eq(gf(4, 8), fixtures::printed_gf(4, 8)));
  CHECK(gf(3, 2).str() == "(1) / (1 - z)");
}

TEST_CASE("width s and subwidth closed forms") {
  for (int s = 1; s <= 7; ++s) {
    CHECK(gf(s, s).str() == RatFun(1, BiPoly(1) - P("z") - BiPoly::monomial(1, s, 1)).str());
    for (int n = s; n < 2 * s; ++n) {
      RatFun want(1, BiPoly(1) - P("z") - BiPoly::monomial(n - s + 1, s, 1));
      CHECK(ratfun_eq(gf(s, n), want));
    }
  }
}

TEST_CASE("denominator constant term is 1") {
  for (int s = 1; s <= 4; ++s)
    for (int n = 1; n <= 9; ++n) CHECK(gf(s, n).den().constant_term() == 1);
}

TEST_CASE("series_expand examples") {
  auto fib = series_expand(R("1/(1-z-z^2*t)"), 3);
  REQUIRE(fib.size() == 4);
  CHECK(fib[0] == PolyT(1));
  CHECK(fib[1] == PolyT(1));
  CHECK(fib[2] == PolyT::from_dense({1, 1}));
  CHECK(fib[3] == PolyT::from_dense({1, 2}));

  auto geo = series_expand(R("1/(1-z)"), 2);
  CHECK(geo == std::vector<PolyT>(3, PolyT(1)));

  // Row sums of width-4 boards from the printed t=1 function, checked
  // against brute-force counts.
  auto rows = series_expand(fixtures::printed_gf(2, 4, true), 5);
  for (int m = 1; m <= 5; ++m) CHECK(rows[m] == PolyT(brute_force_counts(2, 4, m).row_sum));

  CHECK_THROWS_AS(series_expand(R("1/(1+t-z)"), 2), std::invalid_argument);
}

TEST_CASE("generating function agrees with the series engine") {
  for (int s = 1; s <= 4; ++s)
    for (int n = 1; n <= 8; ++n) {
      TransferGraph g = enumerate_states(s, n);
      auto walks = closed_walk_series(g, 12);
      auto expanded = series_expand(generating_function(build_matrix(g)), 12);
      CAPTURE(s);
      CAPTURE(n);
      CHECK(walks == expanded);
    }
}

TEST_CASE("GF cap") {
  auto mat = build_matrix(enumerate_states(2, 6));
  CHECK_THROWS_AS(generating_function(mat, 10), GfCapExceeded);
  CHECK_NOTHROW(generating_function(mat, mat.dim));
  CHECK_THROWS_AS(generating_function(SymbolicTransferMatrix{}), std::invalid_argument);
}

TEST_CASE("emit_cas_script") {
  auto m22 = build_matrix(enumerate_states(2, 2));
  CHECK(emit_cas_script(m22) ==
        "# transfer system, dim = 2\n"
        "eq_0 := x0 = 1 + (z)*x0 + (z)*x1;\n"
        "eq_1 := x1 = (z*t)*x0;\n"
        "sol := solve({eq_0, eq_1}, {x0, x1}):\n"
        "print(normal(subs(sol, x0)));\n");

  auto m32 = build_matrix(enumerate_states(3, 2));
  std::string s32 = emit_cas_script(m32);
  CHECK(s32.find("eq_0 := x0 = 1 + (z)*x0;\n") != std::string::npos);
  CHECK(generating_function(parse_cas_script(s32)).str() == "(1) / (1 - z)");

  for (auto [s, n] : {std::pair{2, 2}, {2, 4}, {3, 6}, {2, 5}}) {
    auto mat = build_matrix(enumerate_states(s, n));
    auto back = parse_cas_script(emit_cas_script(mat));
    CHECK(back.dim == mat.dim);
    CHECK(back.entries == mat.entries);
    CHECK(ratfun_eq(generating_function(back), gf(s, n)));
  }
  CHECK(ratfun_eq(generating_function(parse_cas_script(emit_cas_script(build_matrix(enumerate_states(2, 4))))),
                  fixtures::printed_gf(2, 4)));
}

TEST_CASE("parse_cas_script rejects malformed input") {
  CHECK_THROWS_AS(parse_cas_script("eq_0 := x0 = (z)*x0;\n"), ParseError);  // rhs lacks e0
  CHECK_THROWS_AS(parse_cas_script("eq_0 := x0 = 1 + (z)*x1;\n"), ParseError);
  CHECK_THROWS_AS(parse_cas_script("eq_1 := x1 = 1;\n"), ParseError);
  CHECK_THROWS_AS(parse_cas_script("eq_0 := x0 = 1 + z*x0;\n"), ParseError);
}
