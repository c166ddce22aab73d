#include "doctest.h"

#include "tilings/series.hpp"

using namespace tilings;

namespace {

std::vector<BigInt> V(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

BigInt binom(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

TEST_CASE("count_table examples") {
  CHECK(count_table(2, 3, 5).counts[2] == 12);

  CountTable t225 = count_table(2, 2, 5);
  CHECK(t225.counts == V({1, 4, 3}));
  CHECK(t225.row_sum == 8);

  CHECK(count_table(3, 6, 6).counts[4] == 1);
  CHECK(count_table(2, 4, 4).counts == V({1, 9, 16, 8, 1}));
}

TEST_CASE("m = 0 is the empty board") {
  CountTable t = count_table(3, 5, 0);
  CHECK(t.counts == V({1}));
  CHECK(t.row_sum == 1);
}

TEST_CASE("row_sum_sequence examples") {
  CHECK(row_sum_sequence(2, 2, 7) == V({1, 1, 2, 3, 5, 8, 13, 21}));

  auto jac = row_sum_sequence(2, 3, 10);
  CHECK(jac[4] == 11);
  for (int m = 0; m <= 10; ++m) {
    BigInt want = (BigInt(1) << (m + 1)) + (m % 2 ? -1 : 1);
    CHECK(jac[m] == want / 3);
  }

  auto a = row_sum_sequence(3, 3, 20);
  for (int m = 3; m <= 20; ++m) CHECK(a[m] == a[m - 1] + a[m - 3]);
}

TEST_CASE("square_table examples") {
  auto sq2 = square_table(2, 4);
  REQUIRE(sq2.size() == 4);
  CHECK(sq2[1].counts == V({1, 1}));
  CHECK(sq2[2].counts == V({1, 4}));
  CHECK(sq2[2].row_sum == 5);
  CHECK(sq2[3].row_sum == 35);

  auto sq3 = square_table(3, 6);
  CHECK(sq3[5].counts == V({1, 16, 30, 12, 1}));
}

TEST_CASE("rotation symmetry") {
  for (int s = 1; s <= 4; ++s)
    for (int n = 1; n <= 7; ++n)
      for (int m = n + 1; m <= 7; ++m) {
        CAPTURE(s);
        CAPTURE(n);
        CAPTURE(m);
        CHECK(count_table(s, n, m).counts == count_table(s, m, n).counts);
      }
}

TEST_CASE("table invariants") {
  for (int s = 1; s <= 4; ++s)
    for (int n = 1; n <= 8; ++n)
      for (const auto& t : table_sweep(s, n, 8)) {
        CAPTURE(s);
        CAPTURE(n);
        CAPTURE(t.m);
        CHECK(t.counts[0] == 1);
        CHECK(t.counts.size() - 1 <= static_cast<std::size_t>(t.n * t.m / (s * s)));
        CHECK(t.counts.back() != 0);
        BigInt sum = 0;
        for (const auto& c : t.counts) sum += c;
        CHECK(sum == t.row_sum);
        if (s > n || s > t.m) CHECK(t.counts == V({1}));
      }
}

TEST_CASE("subwidth scaling") {
  for (int s = 2; s <= 5; ++s)
    for (int n = s; n < 2 * s; ++n)
      for (int m = 1; m <= 12; ++m) {
        CountTable narrow = count_table(s, s, m), wide = count_table(s, n, m);
        REQUIRE(narrow.counts.size() == wide.counts.size());
        BigInt factor = 1;
        for (std::size_t k = 0; k < wide.counts.size(); ++k, factor *= n - s + 1)
          CHECK(wide.counts[k] == factor * narrow.counts[k]);
      }
}

TEST_CASE("s = 1 gives binomial coefficients") {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 5; ++m) {
      CountTable t = count_table(1, n, m);
      REQUIRE(t.counts.size() == static_cast<std::size_t>(n * m + 1));
      for (int k = 0; k <= n * m; ++k) CHECK(t.counts[k] == binom(n * m, k));
      CHECK(t.row_sum == BigInt(1) << (n * m));
    }
}

TEST_CASE("large values stay exact") {
  // 2 x m row sums are Fibonacci numbers; m = 200 is far beyond 64 bits.
  auto seq = row_sum_sequence(2, 2, 200);
  BigInt a = 1, b = 1;
  for (int m = 2; m <= 200; ++m) {
    BigInt c = a + b;
    a = b;
    b = c;
  }
  CHECK(seq[200] == b);
  CHECK(seq[200] == BigInt("453973694165307953197296969697410619233826"));
}

TEST_CASE("output formats") {
  CHECK(format_paper(count_table(2, 3, 5)) == "2 3 5 : 1 8 12 : 21");
  CHECK(format_paper(count_table(5, 4, 9)) == "5 4 9 : 1 : 1");

  auto tables = table_sweep(2, 2, 2);
  CHECK(format_csv(tables) == "s,n,m,k,count\n2,2,1,0,1\n2,2,2,0,1\n2,2,2,1,1\n");
  std::string json = format_json({count_table(2, 2, 2)});
  CHECK(json.find("\"counts\": [\n      \"1\",\n      \"1\"\n    ]") != std::string::npos);
  CHECK(json.find("\"row_sum\": \"2\"") != std::string::npos);
}

TEST_CASE("caps propagate") {
  CHECK_THROWS_AS(count_table(2, 12, 3, 50), StateCapExceeded);
  CHECK_THROWS_AS(row_sum_sequence(2, 12, 3, 50), StateCapExceeded);
}
