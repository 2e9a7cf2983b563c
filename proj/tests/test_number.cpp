#include <doctest.h>

#include <random>

#include "euclid/error.hpp"
#include "euclid/number/constructible.hpp"

using euclid::Constructible;
using euclid::Sign;
using euclid::sqrt_nonneg;

namespace {

Constructible q(long n, long d = 1) { return Constructible::ratio(n, d); }
Constructible root(long n, long d = 1) { return sqrt_nonneg(q(n, d)); }

Constructible random_rational(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 65) - 32;
  long den = static_cast<long>(rng() % 16) + 1;
  return q(num, den);
}

}  // namespace

TEST_CASE("rational arithmetic folds") {
  CHECK((q(1, 2) + q(1, 3)).serialize() == "5/6");
  CHECK((root(2) + 0).serialize() == root(2).serialize());
  CHECK((root(3) - root(3)).sign() == Sign::Zero);
}

TEST_CASE("sqrt(2) + sqrt(8) equals sqrt(18)") {
  // (sqrt2 + sqrt8)^2 = 2 + 8 + 2*sqrt16 = 18 by expansion.
  Constructible s = root(2) + root(8);
  CHECK((s - root(18)).sign() == Sign::Zero);
  CHECK((s * s - 18).sign() == Sign::Zero);
  CHECK((root(2) + root(8) - root(18)).sign() == Sign::Zero);
}

TEST_CASE("multiplication and division identities") {
  CHECK(root(2) * root(2) == q(2));
  CHECK(((q(1) / root(2)) - root(2) / 2).sign() == Sign::Zero);
  CHECK_THROWS_AS(q(1) / (root(2) - root(2)), euclid::DivisionByZero);
  CHECK_THROWS_AS(q(1) / (root(2) * root(2) - 2), euclid::DivisionByZero);
}

TEST_CASE("sqrt_nonneg") {
  CHECK(sqrt_nonneg(q(0)).serialize() == "0");
  CHECK(sqrt_nonneg(q(9, 4)).serialize() == "3/2");
  CHECK((root(2) * root(2) - 2).sign() == Sign::Zero);
  CHECK_THROWS_AS(sqrt_nonneg(q(-1)), euclid::NegativeRadicand);
  CHECK_THROWS_AS(sqrt_nonneg(root(2) - 2), euclid::NegativeRadicand);
  // Nested radicand that is a perfect square in the field: 3 + 2 sqrt2 = (1 + sqrt2)^2.
  CHECK((sqrt_nonneg(3 + 2 * root(2)) - 1 - root(2)).sign() == Sign::Zero);
}

TEST_CASE("sign") {
  // 2 > 49/25 and 2 < 9/4.
  CHECK((root(2) - q(7, 5)).sign() == Sign::Positive);
  CHECK((root(2) - q(3, 2)).sign() == Sign::Negative);
  Constructible s = root(2) + root(8);
  CHECK((s * s - 18).sign() == Sign::Zero);
  CHECK(q(-3, 4).sign() == Sign::Negative);
}

TEST_CASE("sign of values that agree with a root beyond 512 bits") {
  // sqrt(N^2 + 1) - N is about 1/(2N); with N = 10^200 the interval filter fails
  // at 512 bits unless refined, so the symbolic route must decide.
  mpz_class n;
  mpz_ui_pow_ui(n.get_mpz_t(), 10, 200);
  Constructible big{mpq_class(n)};
  Constructible r = sqrt_nonneg(big * big + 1);
  Constructible tiny = r - big;
  CHECK(tiny.sign() == Sign::Positive);
  CHECK((tiny - q(1, 2) / big).sign() == Sign::Negative);
}

TEST_CASE("approx") {
  CHECK(q(1, 3).approx(4) == "0.3333");
  CHECK(root(2).approx(4) == "1.4142");
  CHECK(q(0).approx(2) == "0.00");
  CHECK((-root(2)).approx(3) == "-1.414");
  CHECK(q(2, 3).approx(2) == "0.67");
  CHECK((root(2) - root(2)).approx(3) == "0.000");
  CHECK(q(-1, 1000).approx(2) == "0.00");
}

TEST_CASE("serialization round-trips exactly") {
  Constructible x = (root(2) + q(1, 3)) / (root(5) - 1) - sqrt_nonneg(root(3) + 7);
  std::string text = x.serialize();
  Constructible y = Constructible::deserialize(text);
  CHECK(y.serialize() == text);
  CHECK(x == y);
  CHECK(Constructible::deserialize("(√ 2)").serialize() == "(sqrt 2)");
  CHECK(Constructible::deserialize("(− 1 (× 2 (÷ 1 3)))").serialize() == "(- 1 (* 2 (/ 1 3)))");
  CHECK(Constructible::deserialize("-3/4").serialize() == "-3/4");
  CHECK_THROWS_AS(Constructible::deserialize("(+ 1"), euclid::ParseError);
  CHECK_THROWS_AS(Constructible::deserialize("(sqrt -1)"), euclid::NegativeRadicand);
}

TEST_CASE("field properties on random rationals and radicals") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Constructible a = random_rational(rng) + sqrt_nonneg(abs(random_rational(rng)));
    Constructible b = random_rational(rng) * sqrt_nonneg(abs(random_rational(rng)));
    Constructible c = random_rational(rng) - sqrt_nonneg(abs(random_rational(rng)) + 1);
    CHECK(((a + b) + c - (a + (b + c))).sign() == Sign::Zero);
    CHECK((a * (b + c) - (a * b + a * c)).sign() == Sign::Zero);
    CHECK((a + b - (b + a)).sign() == Sign::Zero);
    Constructible x = abs(a * b + c);
    Constructible r = sqrt_nonneg(x);
    CHECK((r * r - x).sign() == Sign::Zero);
    if (!b.is_zero()) CHECK(((a / b) * b - a).sign() == Sign::Zero);
  }
}

TEST_CASE("ordering is a total order consistent with approximations") {
  CHECK(root(2) < root(3));
  CHECK(root(8) == 2 * root(2));
  CHECK(-root(2) < q(-1));
  CHECK(root(2).to_double() == doctest::Approx(1.41421356));
}
