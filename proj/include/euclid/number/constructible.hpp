#pragma once

/**
 * @file constructible.hpp
 * @brief Exact straightedge-and-compass numbers.
 *
 * A Constructible is an immutable expression DAG whose leaves are rationals
 * and whose interior nodes are the four field operations and the square root
 * of a non-negative operand. Values are shared, never mutated, and safe to
 * pass between threads.
 *
 * Sign determination is exact. It first refines MPFR interval enclosures of
 * the expression; when the enclosure still straddles zero it converts the
 * expression to a normal form over square-root symbols and eliminates the
 * radicals one at a time (isolate, compare signs, square), ending in the
 * multiquadratic field over square roots of primes where a zero is
 * syntactically visible.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace euclid {

using Rational = mpq_class;

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
inline Sign operator*(Sign a, Sign b) { return static_cast<Sign>(to_int(a) * to_int(b)); }

namespace number::detail {
struct Node;
}

class Constructible {
 public:
  Constructible();  // zero
  Constructible(int v);  // NOLINT(google-explicit-constructor)
  Constructible(long v);  // NOLINT(google-explicit-constructor)
  Constructible(long long v);  // NOLINT(google-explicit-constructor)
  Constructible(const Rational& q);  // NOLINT(google-explicit-constructor)

  /// num/den; throws DivisionByZero when den == 0.
  static Constructible ratio(long long num, long long den);

  /// Parses "3", "-3/4" (a rational literal only).
  static Constructible parse_rational(std::string_view text);

  Constructible operator-() const;
  friend Constructible operator+(const Constructible& a, const Constructible& b);
  friend Constructible operator-(const Constructible& a, const Constructible& b);
  friend Constructible operator*(const Constructible& a, const Constructible& b);
  /// Throws DivisionByZero when b is exactly zero.
  friend Constructible operator/(const Constructible& a, const Constructible& b);

  Constructible& operator+=(const Constructible& b) { return *this = *this + b; }
  Constructible& operator-=(const Constructible& b) { return *this = *this - b; }
  Constructible& operator*=(const Constructible& b) { return *this = *this * b; }
  Constructible& operator/=(const Constructible& b) { return *this = *this / b; }

  /// Exact trichotomy.
  Sign sign() const;
  bool is_zero() const { return sign() == Sign::Zero; }
  bool is_positive() const { return sign() == Sign::Positive; }
  bool is_negative() const { return sign() == Sign::Negative; }

  /// Structural equality is value equality: sign(a - b) == 0.
  friend bool operator==(const Constructible& a, const Constructible& b);
  friend std::strong_ordering operator<=>(const Constructible& a, const Constructible& b);

  bool is_rational() const;
  /// The exact rational value when the node is a rational leaf.
  std::optional<Rational> as_rational() const;

  /// Decimal approximation with error below 10^-digits. Rendering only.
  std::string approx(int digits) const;
  double to_double() const;

  /// Maximum nesting of square roots in the expression.
  int radical_depth() const;

  /// Canonical prefix form: tokens `+ - * / sqrt` and rational literals.
  std::string serialize() const;
  /// Inverse of serialize(); also accepts the aliases − × ÷ √.
  static Constructible deserialize(std::string_view text);

  /// Number of nodes the expression would occupy written out as a tree,
  /// saturating at `cap`.
  std::uint64_t tree_size(std::uint64_t cap = UINT64_MAX) const;

  const number::detail::Node* node() const { return node_.get(); }

 private:
  explicit Constructible(std::shared_ptr<const number::detail::Node> n) : node_(std::move(n)) {}
  friend Constructible sqrt_nonneg(const Constructible& a);
  friend struct ConstructibleAccess;

  std::shared_ptr<const number::detail::Node> node_;
};

/// Non-negative square root. Throws NegativeRadicand for a < 0.
Constructible sqrt_nonneg(const Constructible& a);

Constructible abs(const Constructible& a);
Constructible square(const Constructible& a);

std::ostream& operator<<(std::ostream& os, const Constructible& c);
std::ostream& operator<<(std::ostream& os, Sign s);

}  // namespace euclid
