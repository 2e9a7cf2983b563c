#pragma once

// Normal form of a Constructible as a quotient of polynomials over
// square-root symbols, and the exact sign procedure on that form.
//
// A symbol is either the square root of a prime (these are linearly
// independent over Q, so a polynomial using only prime symbols is zero iff it
// has no terms) or a generic square root whose radicand is a polynomial in
// symbols registered before it. Generic symbols are eliminated by value, never
// assumed independent.

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include <gmpxx.h>

#include "euclid/number/constructible.hpp"
#include "interval.hpp"

namespace euclid::number::detail {

using SymbolId = std::uint32_t;
using Monomial = std::vector<SymbolId>;  // strictly increasing

class Poly {
 public:
  Poly() = default;
  explicit Poly(const mpq_class& c) {
    if (sgn(c) != 0) terms_.emplace(Monomial{}, c);
  }
  static Poly symbol(SymbolId s, const mpq_class& coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  mpq_class constant() const;  // coefficient of the empty monomial

  const std::map<Monomial, mpq_class>& terms() const { return terms_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const mpq_class& c) const;
  Poly operator-() const { return scaled(-1); }

  /// Largest generic symbol occurring, if any.
  std::optional<SymbolId> top_generic() const;
  /// Splits into (a, b) with *this == a + b * s; s must not occur in a or b.
  std::pair<Poly, Poly> split(SymbolId s) const;

  friend bool operator<(const Poly& a, const Poly& b) { return a.terms_ < b.terms_; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Monomial& m, const mpq_class& c);
  std::map<Monomial, mpq_class> terms_;
};

struct Fraction {
  Poly num;
  Poly den{mpq_class(1)};
};

Fraction normalize(Fraction f);
Fraction add(const Fraction& a, const Fraction& b);
Fraction sub(const Fraction& a, const Fraction& b);
Fraction mul(const Fraction& a, const Fraction& b);
Fraction div(const Fraction& a, const Fraction& b);
/// Square root of a fraction of non-negative value.
Fraction sqrt(const Fraction& a);

/// Exact sign of a polynomial's value.
Sign poly_sign(const Poly& p);

/// Numeric enclosure of a polynomial's value.
Interval evaluate(const Poly& p, mpfr_prec_t prec);

/// Number of registered symbols (diagnostics only).
std::size_t symbol_count();

}  // namespace euclid::number::detail
