#pragma once

// Bivariate generating functions T_n(s, z, t) as the head element of
// (I - M(z,t))^{-1}, computed by fraction-free elimination.

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tilings/engine.hpp"
#include "tilings/poly.hpp"

namespace tilings {

/// Entry (r, c) is the sum over edges c -> r of multiplicity * z * t^k.
struct SymbolicTransferMatrix {
  std::size_t dim = 0;
  std::map<std::pair<std::size_t, std::size_t>, BiPoly> entries;

  BiPoly entry(std::size_t row, std::size_t col) const;
};

class GfCapExceeded : public std::runtime_error {
 public:
  GfCapExceeded(std::size_t dim, std::size_t cap);
  std::size_t dim() const { return dim_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t dim_;
  std::size_t cap_;
};

class EliminationDegenerate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SymbolicTransferMatrix build_matrix(const TransferGraph& g);

/// Solves (I - M) x = e0 by Bareiss elimination over Z[z,t] and returns x0,
/// normalized. Throws GfCapExceeded when mat.dim > dim_cap.
RatFun generating_function(const SymbolicTransferMatrix& mat, std::size_t dim_cap = kDefaultGfCap);

/// Coefficients of z^0 .. z^z_order of the power series of r, each a
/// polynomial in t. The z^0 part of r.den() must be exactly 1.
std::vector<PolyT> series_expand(const RatFun& r, unsigned z_order);

enum class CasStyle { maple_like };

/// Script text with one `eq_i := xi = ...;` line per state, a solve
/// statement and a print of the normalized x0.
std::string emit_cas_script(const SymbolicTransferMatrix& mat,
                            CasStyle style = CasStyle::maple_like);

/// Reads the equations of an emitted script back into a matrix. Throws
/// ParseError on malformed input or when the right-hand side is not e0.
SymbolicTransferMatrix parse_cas_script(std::string_view script);

}  // namespace tilings
