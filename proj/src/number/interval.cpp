#include "interval.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iterator>
#include <limits>

namespace euclid::number::detail {

Interval Interval::of(const mpq_class& q, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi.get(), q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::unbounded(mpfr_prec_t prec) {
  Interval r(prec);
  r.bounded = false;
  mpfr_set_inf(r.lo.get(), -1);
  mpfr_set_inf(r.hi.get(), 1);
  return r;
}

bool Interval::contains_zero() const {
  if (!bounded) return true;
  return mpfr_sgn(lo.get()) <= 0 && mpfr_sgn(hi.get()) >= 0;
}

bool Interval::decides() const {
  if (!bounded) return false;
  if (mpfr_sgn(lo.get()) > 0 || mpfr_sgn(hi.get()) < 0) return true;
  return mpfr_zero_p(lo.get()) && mpfr_zero_p(hi.get());
}

Sign Interval::sign() const {
  if (!bounded) return Sign::Zero;
  if (mpfr_sgn(lo.get()) > 0) return Sign::Positive;
  if (mpfr_sgn(hi.get()) < 0) return Sign::Negative;
  return Sign::Zero;
}

Interval add(const Interval& a, const Interval& b, mpfr_prec_t prec) {
  if (!a.bounded || !b.bounded) return Interval::unbounded(prec);
  Interval r(prec);
  mpfr_add(r.lo.get(), a.lo.get(), b.lo.get(), MPFR_RNDD);
  mpfr_add(r.hi.get(), a.hi.get(), b.hi.get(), MPFR_RNDU);
  return r;
}

Interval sub(const Interval& a, const Interval& b, mpfr_prec_t prec) {
  if (!a.bounded || !b.bounded) return Interval::unbounded(prec);
  Interval r(prec);
  mpfr_sub(r.lo.get(), a.lo.get(), b.hi.get(), MPFR_RNDD);
  mpfr_sub(r.hi.get(), a.hi.get(), b.lo.get(), MPFR_RNDU);
  return r;
}

namespace {

// Sets lo/hi to the min/max over the four endpoint combinations of op.
template <typename Op>
void corners(Interval& r, const Interval& a, const Interval& b, Op op) {
  const std::array<mpfr_srcptr, 2> xs{a.lo.get(), a.hi.get()};
  const std::array<mpfr_srcptr, 2> ys{b.lo.get(), b.hi.get()};
  BigFloat t(mpfr_get_prec(r.lo.get()));
  bool first = true;
  for (auto x : xs) {
    for (auto y : ys) {
      op(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), r.lo.get())) mpfr_set(r.lo.get(), t.get(), MPFR_RNDD);
      op(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), r.hi.get())) mpfr_set(r.hi.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
}

}  // namespace

Interval mul(const Interval& a, const Interval& b, mpfr_prec_t prec) {
  if (!a.bounded || !b.bounded) return Interval::unbounded(prec);
  Interval r(prec);
  corners(r, a, b, mpfr_mul);
  return r;
}

Interval div(const Interval& a, const Interval& b, mpfr_prec_t prec) {
  if (!a.bounded || !b.bounded || b.contains_zero()) return Interval::unbounded(prec);
  Interval r(prec);
  corners(r, a, b, mpfr_div);
  return r;
}

Interval sqrt(const Interval& a, mpfr_prec_t prec) {
  if (!a.bounded) return Interval::unbounded(prec);
  Interval r(prec);
  // The operand is known to be non-negative; clamp the enclosure.
  if (mpfr_sgn(a.lo.get()) <= 0) {
    mpfr_set_zero(r.lo.get(), 1);
  } else {
    mpfr_sqrt(r.lo.get(), a.lo.get(), MPFR_RNDD);
  }
  if (mpfr_sgn(a.hi.get()) <= 0) {
    mpfr_set_zero(r.hi.get(), 1);
  } else {
    mpfr_sqrt(r.hi.get(), a.hi.get(), MPFR_RNDU);
  }
  return r;
}

// ---------------------------------------------------------------- doubles

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

QuickInterval widened(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) return QuickInterval::whole();
  return {std::nextafter(lo, -kInf), std::nextafter(hi, kInf)};
}

}  // namespace

QuickInterval QuickInterval::of(const mpq_class& q) {
  if (sgn(q) == 0) return {0, 0};
  double d = q.get_d();
  return widened(d, d);
}

QuickInterval QuickInterval::whole() { return {-kInf, kInf}; }

std::optional<Sign> QuickInterval::sign() const {
  if (lo > 0) return Sign::Positive;
  if (hi < 0) return Sign::Negative;
  if (lo == 0 && hi == 0) return Sign::Zero;
  return std::nullopt;
}

QuickInterval add(const QuickInterval& a, const QuickInterval& b) { return widened(a.lo + b.lo, a.hi + b.hi); }

QuickInterval sub(const QuickInterval& a, const QuickInterval& b) { return widened(a.lo - b.hi, a.hi - b.lo); }

QuickInterval mul(const QuickInterval& a, const QuickInterval& b) {
  if (!std::isfinite(a.lo) || !std::isfinite(a.hi) || !std::isfinite(b.lo) || !std::isfinite(b.hi)) {
    return QuickInterval::whole();
  }
  double p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return widened(*std::min_element(std::begin(p), std::end(p)), *std::max_element(std::begin(p), std::end(p)));
}

QuickInterval div(const QuickInterval& a, const QuickInterval& b) {
  if (b.lo <= 0 && b.hi >= 0) return QuickInterval::whole();
  return mul(a, widened(1 / b.hi, 1 / b.lo));
}

QuickInterval sqrt(const QuickInterval& a) {
  if (!std::isfinite(a.hi)) return {0, kInf};
  double lo = a.lo > 0 ? std::max(0.0, std::nextafter(std::sqrt(a.lo), -kInf)) : 0.0;
  double hi = a.hi > 0 ? std::nextafter(std::sqrt(a.hi), kInf) : 0.0;
  return {lo, hi};
}

}  // namespace euclid::number::detail
