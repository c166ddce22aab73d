#include "doctest.h"

#include <algorithm>

#include "tilings/engine.hpp"

using namespace tilings;

namespace {

FrontState F(std::vector<int> h) { return FrontState{std::move(h)}; }

}  // namespace

TEST_CASE("enumerate_states examples") {
  TransferGraph g22 = enumerate_states(2, 2);
  REQUIRE(g22.size() == 2);
  CHECK(g22.states[0] == F({0, 0}));
  CHECK(g22.states[1] == F({1, 1}));

  TransferGraph g24 = enumerate_states(2, 4);
  std::vector<FrontState> want{F({0, 0, 0, 0}), F({1, 1, 0, 0}), F({0, 1, 1, 0}),
                               F({0, 0, 1, 1}), F({1, 1, 1, 1})};
  CHECK(g24.states == want);

  TransferGraph g32 = enumerate_states(3, 2);
  REQUIRE(g32.size() == 1);
  REQUIRE(g32.edges[0].size() == 1);
  CHECK(g32.edges[0][0].target == 0);
  CHECK(g32.edges[0][0].squares == 0);
}

TEST_CASE("transitions examples") {
  auto t3 = transitions(F({0, 0, 0}), 2);
  REQUIRE(t3.size() == 3);
  CHECK(t3[0].next == F({0, 0, 0}));
  CHECK(t3[0].squares == 0);
  CHECK(t3[1].next == F({1, 1, 0}));
  CHECK(t3[1].squares == 1);
  CHECK(t3[2].next == F({0, 1, 1}));
  CHECK(t3[2].squares == 1);

  auto blocked = transitions(F({1, 1}), 2);
  REQUIRE(blocked.size() == 1);
  CHECK(blocked[0].next == F({0, 0}));
  CHECK(blocked[0].squares == 0);

  // Placement sets on 4 lanes: {}, {0}, {1}, {2}, {0,2}.
  auto t4 = transitions(F({0, 0, 0, 0}), 2);
  std::vector<std::pair<FrontState, unsigned>> want{
      {F({0, 0, 0, 0}), 0}, {F({1, 1, 0, 0}), 1}, {F({0, 1, 1, 0}), 1},
      {F({0, 0, 1, 1}), 1}, {F({1, 1, 1, 1}), 2}};
  REQUIRE(t4.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    CHECK(t4[i].next == want[i].first);
    CHECK(t4[i].squares == want[i].second);
  }

  // s=3 front with a protruding square in the middle
  auto mid = transitions(F({0, 2, 2, 2, 0, 0, 0}), 3);
  REQUIRE(mid.size() == 2);
  CHECK(mid[1].next == F({0, 1, 1, 1, 2, 2, 2}));
}

TEST_CASE("edge multiplicities aggregate distinct placement sets") {
  // s = 1: every subset of lanes is a placement set and all land on the
  // empty front, so the multiplicity of k squares is C(n, k).
  TransferGraph g = enumerate_states(1, 5);
  REQUIRE(g.size() == 1);
  REQUIRE(g.edges[0].size() == 6);
  const std::uint64_t binom5[] = {1, 5, 10, 10, 5, 1};
  for (const Edge& e : g.edges[0]) CHECK(e.multiplicity == binom5[e.squares]);
}

TEST_CASE("state cap is enforced") {
  CHECK_THROWS_AS(enumerate_states(2, 8, 10), StateCapExceeded);
  try {
    enumerate_states(2, 8, 10);
  } catch (const StateCapExceeded& e) {
    CHECK(e.cap() == 10);
    CHECK(e.count() == 11);
  }
  CHECK(enumerate_states(2, 8, 34).size() == 34);
  CHECK_THROWS_AS(enumerate_states(0, 3), std::invalid_argument);
}

TEST_CASE("graph invariants") {
  for (int s = 1; s <= 4; ++s)
    for (int n = 1; n <= 10; ++n) {
      TransferGraph g = enumerate_states(s, n);
      CAPTURE(s);
      CAPTURE(n);
      CHECK(std::all_of(g.states[0].heights.begin(), g.states[0].heights.end(),
                        [](int h) { return h == 0; }));
      for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(is_valid_front(g.states[i], s));
        for (const Edge& e : g.edges[i]) {
          CHECK(e.squares <= static_cast<unsigned>(n / s));
          CHECK(e.multiplicity >= 1);
          for (const Edge& f : g.edges[i])
            if (&e != &f) CHECK_FALSE((e.target == f.target && e.squares == f.squares));
        }
        // Placing nothing s-1 times returns to the empty front.
        FrontState f = g.states[i];
        for (int step = 0; step < s - 1; ++step) f = transitions(f, s).front().next;
        CHECK(f == g.states[0]);
      }
    }
}

TEST_CASE("s=2 state count equals even-run binary vectors") {
  for (int n = 1; n <= 12; ++n) {
    std::size_t want = 0;
    for (unsigned bits = 0; bits < (1u << n); ++bits) {
      bool ok = true;
      int run = 0;
      for (int i = 0; i <= n; ++i) {
        bool one = i < n && ((bits >> i) & 1);
        if (one) {
          ++run;
        } else {
          if (run % 2) ok = false;
          run = 0;
        }
      }
      want += ok;
    }
    CHECK(enumerate_states(2, n).size() == want);
  }
}

TEST_CASE("is_valid_front") {
  CHECK(is_valid_front(F({0, 1, 1, 0}), 2));
  CHECK(is_valid_front(F({1, 1, 1, 1}), 2));
  CHECK_FALSE(is_valid_front(F({1, 1, 1}), 2));
  CHECK_FALSE(is_valid_front(F({2, 2}), 2));
  CHECK(is_valid_front(F({2, 2, 2, 1, 1, 1}), 3));
}

TEST_CASE("debug dumps") {
  TransferGraph g = enumerate_states(2, 2);
  CHECK(dump_states(g) == "0: 0 0\n1: 1 1\n");
  CHECK(dump_edges(g) == "0 -> 0 k=0 mult=1\n0 -> 1 k=1 mult=1\n1 -> 0 k=0 mult=1\n");
}
