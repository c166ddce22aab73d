#include "tilings/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tilings {

// ---------------------------------------------------------------- PolyT

PolyT::PolyT(const BigInt& constant) {
  if (constant != 0) terms_.push_back({0, constant});
}

PolyT PolyT::monomial(const BigInt& coeff, unsigned exp) {
  PolyT p;
  if (coeff != 0) p.terms_.push_back({exp, coeff});
  return p;
}

PolyT PolyT::from_dense(const std::vector<BigInt>& dense) {
  PolyT p;
  for (unsigned i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) p.terms_.push_back({i, dense[i]});
  return p;
}

BigInt PolyT::coeff(unsigned exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& a, unsigned e) { return a.exp < e; });
  if (it != terms_.end() && it->exp == exp) return it->coeff;
  return 0;
}

std::vector<BigInt> PolyT::dense() const {
  std::vector<BigInt> out(static_cast<std::size_t>(degree() + 1));
  for (const auto& term : terms_) out[term.exp] = term.coeff;
  return out;
}

BigInt PolyT::evaluate(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    acc += it->coeff;
    unsigned next = (it + 1 == terms_.rend()) ? 0 : (it + 1)->exp;
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), t.get_mpz_t(), it->exp - next);
    acc *= power;
  }
  return acc;
}

void PolyT::add_scaled(const PolyT& other, const BigInt& scale, unsigned shift) {
  if (other.is_zero() || scale == 0) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->exp < b->exp + shift)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || a->exp > b->exp + shift) {
      merged.push_back({b->exp + shift, b->coeff * scale});
      ++b;
    } else {
      BigInt c = std::move(a->coeff);
      mpz_addmul(c.get_mpz_t(), b->coeff.get_mpz_t(), scale.get_mpz_t());
      if (c != 0) merged.push_back({a->exp, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

PolyT& PolyT::operator+=(const PolyT& o) {
  add_scaled(o, 1);
  return *this;
}

PolyT& PolyT::operator-=(const PolyT& o) {
  add_scaled(o, -1);
  return *this;
}

PolyT operator*(const PolyT& a, const PolyT& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> acc(static_cast<std::size_t>(a.degree() + b.degree() + 1));
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_)
      mpz_addmul(acc[x.exp + y.exp].get_mpz_t(), x.coeff.get_mpz_t(), y.coeff.get_mpz_t());
  return PolyT::from_dense(acc);
}

PolyT PolyT::operator-() const {
  PolyT p = *this;
  for (auto& term : p.terms_) term.coeff = -term.coeff;
  return p;
}

bool operator==(const PolyT& a, const PolyT& b) {
  return std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                    [](const PolyT::Term& x, const PolyT::Term& y) {
                      return x.exp == y.exp && x.coeff == y.coeff;
                    });
}

namespace {

// Appends one signed term to `out`; `first` controls the leading separator.
void render_term(std::ostringstream& out, const BigInt& coeff, const Monomial& m, bool first) {
  BigInt mag = abs(coeff);
  if (first) {
    if (coeff < 0) out << '-';
  } else {
    out << (coeff < 0 ? " - " : " + ");
  }
  bool wrote = false;
  if (mag != 1 || (m.z == 0 && m.t == 0)) {
    out << mag.get_str();
    wrote = true;
  }
  auto factor = [&](char var, unsigned power) {
    if (power == 0) return;
    if (wrote) out << '*';
    out << var;
    if (power > 1) out << '^' << power;
    wrote = true;
  };
  factor('z', m.z);
  factor('t', m.t);
}

}  // namespace

std::string PolyT::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& term : terms_) {
    render_term(out, term.coeff, Monomial{0, term.exp}, first);
    first = false;
  }
  return out.str();
}

// ---------------------------------------------------------------- BiPoly

BiPoly::BiPoly(long constant) {
  if (constant != 0) terms_.push_back({{0, 0}, BigInt(constant)});
}

BiPoly::BiPoly(const BigInt& constant) {
  if (constant != 0) terms_.push_back({{0, 0}, constant});
}

BiPoly BiPoly::monomial(const BigInt& coeff, unsigned z, unsigned t) {
  BiPoly p;
  if (coeff != 0) p.terms_.push_back({{z, t}, coeff});
  return p;
}

BiPoly BiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  BiPoly p;
  for (auto& term : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == term.mono) {
      p.terms_.back().coeff += term.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (term.coeff != 0) {
      p.terms_.push_back(std::move(term));
    }
  }
  return p;
}

BigInt BiPoly::coeff(unsigned z, unsigned t) const {
  Monomial m{z, t};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& a, const Monomial& b) { return a.mono < b; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

int BiPoly::degree_z() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.back().mono.z);
}

int BiPoly::degree_t() const {
  int d = -1;
  for (const auto& term : terms_) d = std::max(d, static_cast<int>(term.mono.t));
  return d;
}

BigInt BiPoly::content() const {
  BigInt g = 0;
  for (const auto& term : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), term.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

BiPoly BiPoly::divexact(const BigInt& d) const {
  BiPoly p = *this;
  for (auto& term : p.terms_)
    mpz_divexact(term.coeff.get_mpz_t(), term.coeff.get_mpz_t(), d.get_mpz_t());
  return p;
}

BiPoly BiPoly::substitute_t(const BigInt& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& term : terms_) {
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), value.get_mpz_t(), term.mono.t);
    out.push_back({{term.mono.z, 0}, term.coeff * power});
  }
  return from_terms(std::move(out));
}

PolyT BiPoly::z_slice(unsigned power) const {
  std::vector<BigInt> dense;
  for (const auto& term : terms_) {
    if (term.mono.z != power) continue;
    if (dense.size() <= term.mono.t) dense.resize(term.mono.t + 1);
    dense[term.mono.t] = term.coeff;
  }
  return PolyT::from_dense(dense);
}

namespace {

std::vector<BiPoly::Term> merge_terms(const std::vector<BiPoly::Term>& a,
                                      const std::vector<BiPoly::Term>& b, bool subtract) {
  std::vector<BiPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto x = a.begin();
  auto y = b.begin();
  while (x != a.end() || y != b.end()) {
    if (y == b.end() || (x != a.end() && x->mono < y->mono)) {
      out.push_back(*x++);
    } else if (x == a.end() || y->mono < x->mono) {
      out.push_back({y->mono, subtract ? BigInt(-y->coeff) : y->coeff});
      ++y;
    } else {
      BigInt c = subtract ? BigInt(x->coeff - y->coeff) : BigInt(x->coeff + y->coeff);
      if (c != 0) out.push_back({x->mono, std::move(c)});
      ++x;
      ++y;
    }
  }
  return out;
}

}  // namespace

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

BiPoly& BiPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& term : terms_) term.coeff *= c;
  }
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly p = *this;
  for (auto& term : p.terms_) term.coeff = -term.coeff;
  return p;
}

bool operator==(const BiPoly& a, const BiPoly& b) {
  return std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                    [](const BiPoly::Term& x, const BiPoly::Term& y) {
                      return x.mono == y.mono && x.coeff == y.coeff;
                    });
}

namespace {

// Bounding box of the exponents appearing in a term list.
struct Box {
  unsigned z_lo = ~0u, z_hi = 0, t_lo = ~0u, t_hi = 0;
  explicit Box(const std::vector<BiPoly::Term>& terms) {
    for (const auto& term : terms) {
      z_lo = std::min(z_lo, term.mono.z);
      z_hi = std::max(z_hi, term.mono.z);
      t_lo = std::min(t_lo, term.mono.t);
      t_hi = std::max(t_hi, term.mono.t);
    }
  }
};

constexpr std::size_t kDenseLimit = std::size_t{1} << 24;

}  // namespace

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Box ba(a.terms_), bb(b.terms_);
  const std::size_t z_lo = ba.z_lo + bb.z_lo;
  const std::size_t t_lo = ba.t_lo + bb.t_lo;
  const std::size_t z_len = ba.z_hi + bb.z_hi - z_lo + 1;
  const std::size_t t_len = ba.t_hi + bb.t_hi - t_lo + 1;
  const std::size_t pairs = a.terms_.size() * b.terms_.size();

  BiPoly out;
  if (z_len * t_len <= std::min(kDenseLimit, 8 * pairs + 256)) {
    std::vector<BigInt> acc(z_len * t_len);
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) {
        std::size_t idx = (x.mono.z + y.mono.z - z_lo) * t_len + (x.mono.t + y.mono.t - t_lo);
        mpz_addmul(acc[idx].get_mpz_t(), x.coeff.get_mpz_t(), y.coeff.get_mpz_t());
      }
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (acc[i] == 0) continue;
      Monomial m{static_cast<unsigned>(z_lo + i / t_len), static_cast<unsigned>(t_lo + i % t_len)};
      out.terms_.push_back({m, std::move(acc[i])});
    }
    return out;
  }
  std::vector<BiPoly::Term> products;
  products.reserve(pairs);
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_)
      products.push_back({{x.mono.z + y.mono.z, x.mono.t + y.mono.t}, x.coeff * y.coeff});
  return BiPoly::from_terms(std::move(products));
}

BiPoly divexact(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (b.term_count() == 1 && b.terms().front().mono == Monomial{0, 0}) {
    const BigInt& d = b.terms().front().coeff;
    for (const auto& term : a.terms())
      if (!mpz_divisible_p(term.coeff.get_mpz_t(), d.get_mpz_t()))
        throw std::domain_error("inexact polynomial division");
    return a.divexact(d);
  }

  const auto& lead = b.terms().back();  // lex-largest: highest z, then highest t
  const int az = a.degree_z(), at = a.degree_t();
  const int bz = b.degree_z(), bt = b.degree_t();
  if (az < bz || at < bt) throw std::domain_error("inexact polynomial division");
  const int qz_max = az - bz;
  const int qt_max = at - bt;

  // Dense remainder over the box [0, az] x [0, at]; exactness keeps every
  // update inside it.
  const std::size_t t_len = static_cast<std::size_t>(at) + 1;
  if ((static_cast<std::size_t>(az) + 1) * t_len > kDenseLimit)
    throw std::length_error("polynomial too large for dense division");
  std::vector<BigInt> rem((static_cast<std::size_t>(az) + 1) * t_len);
  for (const auto& term : a.terms()) rem[term.mono.z * t_len + term.mono.t] = term.coeff;

  std::vector<BiPoly::Term> quotient;
  BigInt q;
  for (int z = az; z >= static_cast<int>(lead.mono.z); --z) {
    for (int t = at; t >= 0; --t) {
      BigInt& c = rem[z * t_len + t];
      if (c == 0) continue;
      const int qz = z - static_cast<int>(lead.mono.z);
      const int qt = t - static_cast<int>(lead.mono.t);
      if (qt < 0 || qt > qt_max || qz > qz_max ||
          !mpz_divisible_p(c.get_mpz_t(), lead.coeff.get_mpz_t()))
        throw std::domain_error("inexact polynomial division");
      mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), lead.coeff.get_mpz_t());
      for (const auto& bterm : b.terms()) {
        std::size_t idx = (qz + bterm.mono.z) * t_len + (qt + bterm.mono.t);
        mpz_submul(rem[idx].get_mpz_t(), q.get_mpz_t(), bterm.coeff.get_mpz_t());
      }
      quotient.push_back({{static_cast<unsigned>(qz), static_cast<unsigned>(qt)}, q});
    }
  }
  for (int z = 0; z < static_cast<int>(lead.mono.z); ++z)
    for (std::size_t t = 0; t < t_len; ++t)
      if (rem[z * t_len + t] != 0) throw std::domain_error("inexact polynomial division");
  std::reverse(quotient.begin(), quotient.end());
  return BiPoly::from_terms(std::move(quotient));
}

BiPoly poly_arith(const BiPoly& a, const BiPoly& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
  }
  throw std::invalid_argument("unknown ArithOp");
}

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> order;
  order.reserve(terms_.size());
  for (const auto& term : terms_) order.push_back(&term);
  std::sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
    if (a->mono.degree() != b->mono.degree()) return a->mono.degree() < b->mono.degree();
    return a->mono.z > b->mono.z;
  });
  std::ostringstream out;
  bool first = true;
  for (const Term* term : order) {
    render_term(out, term->coeff, term->mono, first);
    first = false;
  }
  return out.str();
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  std::size_t pos() const { return pos_; }

  unsigned parse_exponent() {
    BigInt e = parse_integer();
    if (!e.fits_uint_p()) fail("exponent out of range");
    return static_cast<unsigned>(e.get_ui());
  }

  BigInt parse_integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  // term := factor ('*' factor)*, factor := INT | z[^INT] | t[^INT]
  BiPoly::Term parse_term() {
    BiPoly::Term term{{0, 0}, 1};
    do {
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        term.coeff *= parse_integer();
      } else if (c == 'z' || c == 't') {
        ++pos_;
        unsigned power = 1;
        if (accept('^')) power = parse_exponent();
        (c == 'z' ? term.mono.z : term.mono.t) += power;
      } else {
        fail("expected factor");
      }
    } while (accept('*'));
    return term;
  }

  // poly := [+-] term ([+-] term)*
  BiPoly parse_poly() {
    std::vector<BiPoly::Term> terms;
    bool negative = false;
    if (accept('-')) negative = true;
    else accept('+');
    for (;;) {
      BiPoly::Term term = parse_term();
      if (negative) term.coeff = -term.coeff;
      terms.push_back(std::move(term));
      if (accept('+')) negative = false;
      else if (accept('-')) negative = true;
      else break;
    }
    return BiPoly::from_terms(std::move(terms));
  }

  // group := '(' poly ')' | poly
  BiPoly parse_group() {
    if (accept('(')) {
      BiPoly p = parse_poly();
      expect(')');
      return p;
    }
    return parse_poly();
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly BiPoly::parse(std::string_view text) {
  Parser p(text);
  BiPoly out = p.parse_poly();
  if (!p.at_end()) p.fail("trailing input");
  return out;
}

// ---------------------------------------------------------------- RatFun

RatFun::RatFun(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DegenerateDenominator("denominator is the zero polynomial");
  if (den_.constant_term() == 0)
    throw DegenerateDenominator("denominator has no constant term: " + den_.str());
  BigInt g = den_.content();
  BigInt gn = num_.content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), gn.get_mpz_t());
  if (den_.constant_term() < 0) g = -g;
  if (g != 1) {
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
  }
}

RatFun RatFun::parse(std::string_view text) {
  Parser p(text);
  BiPoly num = p.parse_group();
  BiPoly den = 1;
  if (p.accept('/')) den = p.parse_group();
  if (!p.at_end()) p.fail("trailing input");
  return RatFun(std::move(num), std::move(den));
}

std::string RatFun::str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

bool ratfun_eq(const RatFun& a, const RatFun& b) { return a.num() * b.den() == b.num() * a.den(); }

RatFun substitute_t(const RatFun& r, const BigInt& value) {
  BiPoly den = r.den().substitute_t(value);
  if (den.is_zero())
    throw DegenerateDenominator("denominator vanishes at t = " + value.get_str());
  return RatFun(r.num().substitute_t(value), std::move(den));
}

}  // namespace tilings
