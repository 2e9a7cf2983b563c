#include "radical_form.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <stdexcept>

namespace euclid::number::detail {

namespace {

constexpr SymbolId kGenericBit = 0x80000000u;

bool is_generic(SymbolId s) { return (s & kGenericBit) != 0; }

struct Symbol {
  mpz_class prime;  // prime symbols
  Poly radicand;    // generic symbols
  mutable std::mutex mu;
  mutable Interval cache;
  mutable mpfr_prec_t cache_prec = 0;
  QuickInterval quick;  // set at registration
};

QuickInterval quick_evaluate(const Poly& p);

class SymbolTable {
 public:
  static SymbolTable& instance() {
    static SymbolTable table;
    return table;
  }

  SymbolId prime(const mpz_class& p) {
    std::lock_guard lock(mu_);
    auto it = primes_.find(p);
    if (it != primes_.end()) return it->second;
    auto id = static_cast<SymbolId>(prime_syms_.size());
    Symbol& sym = prime_syms_.emplace_back();
    sym.prime = p;
    sym.quick = sqrt(QuickInterval::of(mpq_class(p)));
    primes_.emplace(p, id);
    return id;
  }

  SymbolId generic(const Poly& radicand) {
    std::lock_guard lock(mu_);
    auto it = generics_.find(radicand);
    if (it != generics_.end()) return it->second;
    auto id = static_cast<SymbolId>(generic_syms_.size()) | kGenericBit;
    Symbol& sym = generic_syms_.emplace_back();
    sym.radicand = radicand;
    sym.quick = sqrt(quick_evaluate_locked(radicand));
    generics_.emplace(radicand, id);
    return id;
  }

  const Symbol& get(SymbolId s) {
    std::lock_guard lock(mu_);
    return is_generic(s) ? generic_syms_[s & ~kGenericBit] : prime_syms_[s];
  }

  QuickInterval quick(SymbolId s) {
    std::lock_guard lock(mu_);
    return quick_locked(s);
  }

  std::size_t size() {
    std::lock_guard lock(mu_);
    return prime_syms_.size() + generic_syms_.size();
  }

 private:
  QuickInterval quick_locked(SymbolId s) const {
    return is_generic(s) ? generic_syms_[s & ~kGenericBit].quick : prime_syms_[s].quick;
  }

  QuickInterval quick_evaluate_locked(const Poly& p) const {
    QuickInterval total = QuickInterval::of(mpq_class(0));
    for (const auto& [m, c] : p.terms()) {
      QuickInterval term = QuickInterval::of(c);
      for (SymbolId s : m) term = mul(term, quick_locked(s));
      total = add(total, term);
    }
    return total;
  }

  std::mutex mu_;
  std::deque<Symbol> prime_syms_;
  std::deque<Symbol> generic_syms_;
  std::map<mpz_class, SymbolId> primes_;
  std::map<Poly, SymbolId> generics_;
};

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long kLimit = 256;
    std::vector<bool> composite(kLimit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

Poly sqrt_rational_uncached(const mpq_class& c);

// sqrt(c) for a rational c > 0 as a polynomial: (f/b) * prod sqrt(p) [* generic].
Poly sqrt_rational(const mpq_class& c) {
  static std::mutex mu;
  static std::map<mpq_class, Poly> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(c); it != memo.end()) return it->second;
  }
  Poly p = sqrt_rational_uncached(c);
  std::lock_guard lock(mu);
  memo.emplace(c, p);
  return p;
}

Poly sqrt_rational_uncached(const mpq_class& c) {
  mpz_class n = c.get_num() * c.get_den();
  mpz_class f = 1;
  Monomial mono;
  for (unsigned long p : small_primes()) {
    if (n == 1) break;
    if (mpz_cmp_ui(n.get_mpz_t(), p * p) < 0) break;  // n is now 1 or prime
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) == 0) continue;
    unsigned count = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++count;
    }
    for (unsigned k = 0; k < count / 2; ++k) f *= p;
    if (count % 2 == 1) mono.push_back(SymbolTable::instance().prime(mpz_class(p)));
  }
  std::optional<SymbolId> extra;
  if (n != 1) {
    if (mpz_perfect_square_p(n.get_mpz_t()) != 0) {
      mpz_class r;
      mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
      f *= r;
    } else if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
      mono.push_back(SymbolTable::instance().prime(n));
    } else {
      extra = SymbolTable::instance().generic(Poly(mpq_class(n)));
    }
  }
  std::sort(mono.begin(), mono.end());
  if (extra) mono.push_back(*extra);  // generic ids sort after primes
  mpq_class coeff(f, c.get_den());
  coeff.canonicalize();
  Poly out;
  out = Poly(coeff);
  if (!mono.empty()) {
    Poly m = Poly::symbol(mono.front(), coeff);
    for (std::size_t i = 1; i < mono.size(); ++i) m = m * Poly::symbol(mono[i]);
    out = m;
  }
  return out;
}

QuickInterval quick_evaluate(const Poly& p) {
  QuickInterval total = QuickInterval::of(mpq_class(0));
  for (const auto& [m, c] : p.terms()) {
    QuickInterval term = QuickInterval::of(c);
    for (SymbolId s : m) term = mul(term, SymbolTable::instance().quick(s));
    total = add(total, term);
  }
  return total;
}

Interval symbol_interval(SymbolId s, mpfr_prec_t prec) {
  const Symbol& sym = SymbolTable::instance().get(s);
  std::lock_guard lock(sym.mu);
  if (sym.cache_prec < prec) {
    Interval radicand = is_generic(s) ? evaluate(sym.radicand, prec) : Interval::of(mpq_class(sym.prime), prec);
    sym.cache = sqrt(radicand, prec);
    sym.cache_prec = prec;
  }
  return sym.cache;
}

}  // namespace

// ---------------------------------------------------------------- Poly

Poly Poly::symbol(SymbolId s, const mpq_class& coeff) {
  Poly p;
  if (sgn(coeff) != 0) p.terms_.emplace(Monomial{s}, coeff);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

mpq_class Poly::constant() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void Poly::add_term(const Monomial& m, const mpq_class& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::scaled(const mpq_class& c) const {
  Poly r;
  if (sgn(c) == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, v * c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  std::vector<SymbolId> generic_squares;
  Monomial merged;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      merged.clear();
      generic_squares.clear();
      mpq_class coeff = ca * cb;
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < ma.size() || j < mb.size()) {
        if (j == mb.size() || (i < ma.size() && ma[i] < mb[j])) {
          merged.push_back(ma[i++]);
        } else if (i == ma.size() || mb[j] < ma[i]) {
          merged.push_back(mb[j++]);
        } else {
          SymbolId s = ma[i];
          if (is_generic(s)) {
            generic_squares.push_back(s);
          } else {
            coeff *= mpq_class(SymbolTable::instance().get(s).prime);
          }
          ++i;
          ++j;
        }
      }
      if (generic_squares.empty()) {
        r.add_term(merged, coeff);
      } else {
        Poly term;
        term.terms_.emplace(merged, coeff);
        for (SymbolId s : generic_squares) term = term * SymbolTable::instance().get(s).radicand;
        for (const auto& [m, c] : term.terms_) r.add_term(m, c);
      }
    }
  }
  return r;
}

std::optional<SymbolId> Poly::top_generic() const {
  std::optional<SymbolId> top;
  for (const auto& [m, c] : terms_) {
    if (!m.empty() && is_generic(m.back()) && (!top || m.back() > *top)) top = m.back();
  }
  return top;
}

std::pair<Poly, Poly> Poly::split(SymbolId s) const {
  Poly a;
  Poly b;
  for (const auto& [m, c] : terms_) {
    auto it = std::find(m.begin(), m.end(), s);
    if (it == m.end()) {
      a.terms_.emplace(m, c);
    } else {
      Monomial rest(m.begin(), it);
      rest.insert(rest.end(), it + 1, m.end());
      b.terms_.emplace(std::move(rest), c);
    }
  }
  return {std::move(a), std::move(b)};
}

// ---------------------------------------------------------------- Fraction

Fraction normalize(Fraction f) {
  if (f.num.is_zero()) return Fraction{Poly(), Poly(mpq_class(1))};
  // Rationalize: with den = a + b*s for the largest symbol s, multiply by the
  // conjugate a - b*s, which removes s and introduces only smaller symbols.
  while (!f.den.is_constant()) {
    SymbolId top = 0;
    for (const auto& [m, c] : f.den.terms()) {
      if (!m.empty()) top = std::max(top, m.back());
    }
    auto [a, b] = f.den.split(top);
    Poly conj = a - b * Poly::symbol(top);
    if (poly_sign(conj) == Sign::Zero) {
      // a == b*s, so den == 2a
      f.den = a.scaled(2);
      continue;
    }
    f.num = f.num * conj;
    f.den = f.den * conj;
    if (f.num.is_zero()) return Fraction{Poly(), Poly(mpq_class(1))};
  }
  if (f.den.is_constant()) {
    mpq_class d = f.den.constant();
    if (d != 1) f.num = f.num.scaled(1 / d);
    f.den = Poly(mpq_class(1));
  }
  return f;
}

Fraction add(const Fraction& a, const Fraction& b) {
  if (a.den == b.den) return normalize({a.num + b.num, a.den});
  return normalize({a.num * b.den + b.num * a.den, a.den * b.den});
}

Fraction sub(const Fraction& a, const Fraction& b) {
  if (a.den == b.den) return normalize({a.num - b.num, a.den});
  return normalize({a.num * b.den - b.num * a.den, a.den * b.den});
}

Fraction mul(const Fraction& a, const Fraction& b) {
  return normalize({a.num * b.num, a.den * b.den});
}

Fraction div(const Fraction& a, const Fraction& b) {
  return normalize({a.num * b.den, a.den * b.num});
}

Fraction sqrt(const Fraction& a) {
  // sqrt(n/d) = sqrt(n*d) / |d|
  Poly r = a.num * a.den;
  if (r.is_zero()) return Fraction{};
  Poly den = a.den;
  if (poly_sign(den) == Sign::Negative) den = -den;
  if (r.is_constant()) return normalize({sqrt_rational(r.constant()), den});
  // Pull out the rational content so that radicands differing by a rational
  // square factor share a symbol.
  mpq_class lead = abs(std::prev(r.terms().end())->second);
  Poly unit = r.scaled(1 / lead);
  SymbolId t = SymbolTable::instance().generic(unit);
  return normalize({sqrt_rational(lead) * Poly::symbol(t), den});
}

// ---------------------------------------------------------------- sign

Interval evaluate(const Poly& p, mpfr_prec_t prec) {
  Interval total = Interval::of(mpq_class(0), prec);
  for (const auto& [m, c] : p.terms()) {
    Interval term = Interval::of(c, prec);
    for (SymbolId s : m) term = mul(term, symbol_interval(s, prec), prec);
    total = add(total, term, prec);
  }
  return total;
}

Sign poly_sign(const Poly& p) {
  if (p.is_zero()) return Sign::Zero;
  if (p.is_constant()) return static_cast<Sign>(sgn(p.constant()));

  std::optional<SymbolId> top = p.top_generic();
  if (!top) {
    // Non-empty combination of independent prime roots: nonzero, so the
    // enclosure eventually excludes zero.
    for (mpfr_prec_t prec = 64; prec <= (1 << 22); prec *= 2) {
      Interval iv = evaluate(p, prec);
      if (iv.decides()) return iv.sign();
    }
    throw std::logic_error("poly_sign: precision exhausted on a nonzero multiquadratic value");
  }

  QuickInterval q = quick_evaluate(p);
  if (auto s = q.sign()) return *s;
  if (q.hi - q.lo >= 1e-9) {
    for (mpfr_prec_t prec : {128, 512}) {
      Interval iv = evaluate(p, prec);
      if (iv.decides()) return iv.sign();
    }
  }

  // p = a + b*s with s = sqrt(r) > 0.
  auto [a, b] = p.split(*top);
  Sign sb = poly_sign(b);
  if (sb == Sign::Zero) return poly_sign(a);
  Sign sa = poly_sign(a);
  if (sa == Sign::Zero || sa == sb) return sa == Sign::Zero ? sb : sa;
  const Poly& r = SymbolTable::instance().get(*top).radicand;
  Sign d = poly_sign(a * a - b * b * r);
  if (d == Sign::Zero) return Sign::Zero;
  return d == Sign::Positive ? sa : sb;
}

std::size_t symbol_count() { return SymbolTable::instance().size(); }

}  // namespace euclid::number::detail
