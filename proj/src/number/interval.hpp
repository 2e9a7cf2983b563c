#pragma once

// Outward-rounded MPFR interval arithmetic used as the numeric filter for
// sign decisions.

#include <mpfr.h>

#include <optional>

#include <gmpxx.h>

#include "euclid/number/constructible.hpp"

namespace euclid::number::detail {

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

/// Closed interval [lo, hi] containing the true value, or the whole line.
struct Interval {
  BigFloat lo;
  BigFloat hi;
  bool bounded = true;

  explicit Interval(mpfr_prec_t prec = 64) : lo(prec), hi(prec) {}

  static Interval of(const mpq_class& q, mpfr_prec_t prec);
  static Interval unbounded(mpfr_prec_t prec);

  /// Zero when the interval does not decide the sign (unless it is {0}).
  bool decides() const;
  Sign sign() const;
  bool contains_zero() const;
};

/// Double-precision enclosure, widened by one ulp per operation. The first,
/// cheapest filter; infinite endpoints mean nothing is known.
struct QuickInterval {
  double lo = 0;
  double hi = 0;

  static QuickInterval of(const mpq_class& q);
  static QuickInterval whole();
  /// Sign when the enclosure excludes zero, or when it is exactly {0}.
  std::optional<Sign> sign() const;
};

QuickInterval add(const QuickInterval& a, const QuickInterval& b);
QuickInterval sub(const QuickInterval& a, const QuickInterval& b);
QuickInterval mul(const QuickInterval& a, const QuickInterval& b);
QuickInterval div(const QuickInterval& a, const QuickInterval& b);
QuickInterval sqrt(const QuickInterval& a);

Interval add(const Interval& a, const Interval& b, mpfr_prec_t prec);
Interval sub(const Interval& a, const Interval& b, mpfr_prec_t prec);
Interval mul(const Interval& a, const Interval& b, mpfr_prec_t prec);
Interval div(const Interval& a, const Interval& b, mpfr_prec_t prec);
Interval sqrt(const Interval& a, mpfr_prec_t prec);

}  // namespace euclid::number::detail
