#pragma once

// Exact sparse polynomials over arbitrary-precision integers in t (PolyT)
// and in z,t (BiPoly), plus rational functions of BiPoly.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tilings {

using BigInt = mpz_class;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Univariate polynomial in t. Terms are kept sorted by ascending exponent
/// and never carry a zero coefficient.
class PolyT {
 public:
  struct Term {
    unsigned exp;
    BigInt coeff;
  };

  PolyT() = default;
  explicit PolyT(const BigInt& constant);
  static PolyT monomial(const BigInt& coeff, unsigned exp);
  /// Coefficient i of `dense` becomes the coefficient of t^i.
  static PolyT from_dense(const std::vector<BigInt>& dense);

  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.back().exp); }
  const std::vector<Term>& terms() const { return terms_; }
  BigInt coeff(unsigned exp) const;
  std::vector<BigInt> dense() const;
  BigInt evaluate(const BigInt& t) const;

  /// this += scale * t^shift * other
  void add_scaled(const PolyT& other, const BigInt& scale, unsigned shift = 0);

  PolyT& operator+=(const PolyT& o);
  PolyT& operator-=(const PolyT& o);
  friend PolyT operator+(PolyT a, const PolyT& b) { return a += b; }
  friend PolyT operator-(PolyT a, const PolyT& b) { return a -= b; }
  friend PolyT operator*(const PolyT& a, const PolyT& b);
  PolyT operator-() const;
  friend bool operator==(const PolyT& a, const PolyT& b);

  /// Ascending powers, e.g. `1 + 2*t + t^2`.
  std::string str() const;

 private:
  std::vector<Term> terms_;
};

struct Monomial {
  unsigned z = 0;
  unsigned t = 0;

  std::uint64_t key() const { return (std::uint64_t{z} << 32) | t; }
  unsigned degree() const { return z + t; }
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.key() <=> b.key(); }
  friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

/// Bivariate polynomial in z and t. Terms are stored in ascending
/// lexicographic order of (z-power, t-power); rendering uses graded lex.
class BiPoly {
 public:
  struct Term {
    Monomial mono;
    BigInt coeff;
  };

  BiPoly() = default;
  BiPoly(long constant);  // NOLINT: integer literals are polynomials
  explicit BiPoly(const BigInt& constant);
  static BiPoly monomial(const BigInt& coeff, unsigned z, unsigned t);
  /// Sorts, merges like terms and prunes zeros.
  static BiPoly from_terms(std::vector<Term> terms);
  /// Parses the rendering grammar: signed sums of products of integers,
  /// `z`, `t` and `^` powers, e.g. `-z*t -2*z^2*t +t^2*z^3 +1`.
  static BiPoly parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  BigInt coeff(unsigned z, unsigned t) const;
  BigInt constant_term() const { return coeff(0, 0); }
  /// -1 for the zero polynomial.
  int degree_z() const;
  int degree_t() const;

  /// Positive gcd of all coefficients; 0 for the zero polynomial.
  BigInt content() const;
  /// Divides every coefficient by `d`, which must divide each exactly.
  BiPoly divexact(const BigInt& d) const;
  BiPoly substitute_t(const BigInt& value) const;
  /// Coefficient of z^power as a polynomial in t.
  PolyT z_slice(unsigned power) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BigInt& c);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const BigInt& c) { return a *= c; }
  BiPoly operator-() const;
  friend bool operator==(const BiPoly& a, const BiPoly& b);

  std::string str() const;

 private:
  std::vector<Term> terms_;
};

/// Exact quotient a / b. Throws std::domain_error when b does not divide a.
BiPoly divexact(const BiPoly& a, const BiPoly& b);

enum class ArithOp { add, sub, mul };
BiPoly poly_arith(const BiPoly& a, const BiPoly& b, ArithOp op);

class DegenerateDenominator : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// num/den with den(0,0) != 0. Construction normalizes: the joint integer
/// content is divided out and the denominator's constant term made positive
/// (it becomes +1 whenever the content allows it, which is always the case
/// for transfer-matrix generating functions).
class RatFun {
 public:
  RatFun() : num_(0), den_(1) {}
  RatFun(BiPoly num, BiPoly den);
  /// `(num) / (den)`, a bare polynomial, or `(num)/(den)` spread over
  /// several lines.
  static RatFun parse(std::string_view text);

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }
  /// `(num) / (den)`
  std::string str() const;

 private:
  BiPoly num_;
  BiPoly den_;
};

/// Equality of the represented functions via cross-multiplication.
bool ratfun_eq(const RatFun& a, const RatFun& b);

/// Replaces t by `value`. Throws DegenerateDenominator when the denominator
/// vanishes identically or loses its constant term.
RatFun substitute_t(const RatFun& r, const BigInt& value);

}  // namespace tilings
