#include "euclid/number/constructible.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "euclid/error.hpp"
#include "node.hpp"

namespace euclid {

namespace number::detail {

NodePtr make_rational(const mpq_class& q) {
  auto n = std::make_shared<Node>();
  n->op = Op::Rational;
  n->value = q;
  n->quick = QuickInterval::of(q);
  n->sign_cache.store(sgn(q));
  return n;
}

NodePtr make_node(Op op, NodePtr lhs, NodePtr rhs) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->radical_depth = std::max(lhs->radical_depth, rhs ? rhs->radical_depth : 0);
  if (op == Op::Sqrt) n->radical_depth = lhs->radical_depth + 1;
  switch (op) {
    case Op::Add: n->quick = add(lhs->quick, rhs->quick); break;
    case Op::Sub: n->quick = sub(lhs->quick, rhs->quick); break;
    case Op::Mul: n->quick = mul(lhs->quick, rhs->quick); break;
    case Op::Div: n->quick = div(lhs->quick, rhs->quick); break;
    case Op::Sqrt: n->quick = sqrt(lhs->quick); break;
    case Op::Rational: break;
  }
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

Interval node_interval(const Node& n, mpfr_prec_t prec) {
  if (n.op == Op::Rational) return Interval::of(n.value, prec);
  std::lock_guard lock(n.interval_mu);
  if (n.interval_prec >= prec) return *n.interval;
  Interval a = node_interval(*n.lhs, prec);
  switch (n.op) {
    case Op::Add: n.interval = add(a, node_interval(*n.rhs, prec), prec); break;
    case Op::Sub: n.interval = sub(a, node_interval(*n.rhs, prec), prec); break;
    case Op::Mul: n.interval = mul(a, node_interval(*n.rhs, prec), prec); break;
    case Op::Div: n.interval = div(a, node_interval(*n.rhs, prec), prec); break;
    case Op::Sqrt: n.interval = sqrt(a, prec); break;
    case Op::Rational: break;
  }
  n.interval_prec = prec;
  return *n.interval;
}

const Fraction& node_form(const Node& n) {
  std::call_once(n.form_once, [&n] {
    Fraction f;
    switch (n.op) {
      case Op::Rational: f = normalize({Poly(n.value), Poly(mpq_class(1))}); break;
      case Op::Add: f = add(node_form(*n.lhs), node_form(*n.rhs)); break;
      case Op::Sub: f = sub(node_form(*n.lhs), node_form(*n.rhs)); break;
      case Op::Mul: f = mul(node_form(*n.lhs), node_form(*n.rhs)); break;
      case Op::Div: f = div(node_form(*n.lhs), node_form(*n.rhs)); break;
      case Op::Sqrt: f = sqrt(node_form(*n.lhs)); break;
    }
    n.form = std::make_shared<const Fraction>(std::move(f));
  });
  return *n.form;
}

Sign node_sign(const Node& n) {
  if (n.op == Op::Rational) return static_cast<Sign>(sgn(n.value));
  int cached = n.sign_cache.load(std::memory_order_acquire);
  if (cached != 2) return static_cast<Sign>(cached);
  Sign s = Sign::Zero;
  bool decided = false;
  if (auto q = n.quick.sign(); q && *q != Sign::Zero) {
    n.sign_cache.store(to_int(*q), std::memory_order_release);
    return *q;
  }
  // A tight double enclosure around zero almost always means an exact zero,
  // which no interval can decide; go to the exact form directly.
  bool tight = n.quick.hi - n.quick.lo < 1e-9;
  for (mpfr_prec_t prec : {128, 512}) {
    if (tight) break;
    Interval iv = node_interval(n, prec);
    if (iv.decides()) {
      s = iv.sign();
      decided = true;
      break;
    }
  }
  if (!decided) {
    const Fraction& f = node_form(n);
    s = poly_sign(f.num) * poly_sign(f.den);
  }
  n.sign_cache.store(to_int(s), std::memory_order_release);
  return s;
}

}  // namespace number::detail

using number::detail::make_node;
using number::detail::make_rational;
using number::detail::Node;
using number::detail::NodePtr;
using number::detail::Op;

namespace {

const NodePtr& zero_node() {
  static const NodePtr z = make_rational(mpq_class(0));
  return z;
}

const Node* rational_leaf(const Constructible& c) {
  const Node* n = c.node();
  return n->op == Op::Rational ? n : nullptr;
}

mpq_class parse_rational_text(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational literal");
  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '-' || s[i] == '+') {
    negative = s[i] == '-';
    ++i;
  }
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  std::size_t int_end = digits(i);
  if (int_end == i) throw ParseError("malformed rational literal '" + s + "'");
  mpq_class q;
  if (int_end == s.size()) {
    q = mpq_class(mpz_class(s.substr(i, int_end - i)));
  } else if (s[int_end] == '/') {
    std::size_t den_end = digits(int_end + 1);
    if (den_end == int_end + 1 || den_end != s.size()) throw ParseError("malformed rational literal '" + s + "'");
    mpz_class den(s.substr(int_end + 1));
    if (den == 0) throw DivisionByZero("rational literal '" + s + "' has a zero denominator");
    q = mpq_class(mpz_class(s.substr(i, int_end - i)), den);
    q.canonicalize();
  } else if (s[int_end] == '.') {
    std::size_t frac_end = digits(int_end + 1);
    if (frac_end == int_end + 1 || frac_end != s.size()) throw ParseError("malformed rational literal '" + s + "'");
    std::string frac = s.substr(int_end + 1);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    q = mpq_class(mpz_class(s.substr(i, int_end - i) + frac), scale);
    q.canonicalize();
  } else {
    throw ParseError("malformed rational literal '" + s + "'");
  }
  return negative ? mpq_class(-q) : q;
}

}  // namespace

Constructible::Constructible() : node_(zero_node()) {}
Constructible::Constructible(int v) : node_(v == 0 ? zero_node() : make_rational(mpq_class(v))) {}
Constructible::Constructible(long v) : node_(v == 0 ? zero_node() : make_rational(mpq_class(v))) {}
Constructible::Constructible(long long v) : node_(make_rational(mpq_class(static_cast<long>(v)))) {}
Constructible::Constructible(const Rational& q) : node_(make_rational(q)) {}

Constructible Constructible::ratio(long long num, long long den) {
  if (den == 0) throw DivisionByZero("ratio with zero denominator");
  mpq_class q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return Constructible(q);
}

Constructible Constructible::parse_rational(std::string_view text) {
  return Constructible(parse_rational_text(text));
}

Constructible Constructible::operator-() const {
  if (const Node* n = rational_leaf(*this)) return Constructible(mpq_class(-n->value));
  return Constructible(make_node(Op::Mul, make_rational(mpq_class(-1)), node_));
}

Constructible operator+(const Constructible& a, const Constructible& b) {
  const Node* x = rational_leaf(a);
  const Node* y = rational_leaf(b);
  if (x && y) return Constructible(mpq_class(x->value + y->value));
  if (x && sgn(x->value) == 0) return b;
  if (y && sgn(y->value) == 0) return a;
  return Constructible(make_node(Op::Add, a.node_, b.node_));
}

Constructible operator-(const Constructible& a, const Constructible& b) {
  const Node* x = rational_leaf(a);
  const Node* y = rational_leaf(b);
  if (x && y) return Constructible(mpq_class(x->value - y->value));
  if (y && sgn(y->value) == 0) return a;
  if (x && sgn(x->value) == 0) return -b;
  if (a.node_ == b.node_) return Constructible();
  return Constructible(make_node(Op::Sub, a.node_, b.node_));
}

Constructible operator*(const Constructible& a, const Constructible& b) {
  const Node* x = rational_leaf(a);
  const Node* y = rational_leaf(b);
  if (x && y) return Constructible(mpq_class(x->value * y->value));
  if ((x && sgn(x->value) == 0) || (y && sgn(y->value) == 0)) return Constructible();
  if (x && x->value == 1) return b;
  if (y && y->value == 1) return a;
  // sqrt(u) * sqrt(u) = u
  if (a.node_ == b.node_ && a.node_->op == Op::Sqrt) return Constructible(a.node_->lhs);
  return Constructible(make_node(Op::Mul, a.node_, b.node_));
}

Constructible operator/(const Constructible& a, const Constructible& b) {
  if (b.is_zero()) throw DivisionByZero("division by an exact zero");
  const Node* x = rational_leaf(a);
  const Node* y = rational_leaf(b);
  if (x && y) return Constructible(mpq_class(x->value / y->value));
  if (x && sgn(x->value) == 0) return Constructible();
  if (y && y->value == 1) return a;
  if (a.node_ == b.node_) return Constructible(1);
  return Constructible(make_node(Op::Div, a.node_, b.node_));
}

Sign Constructible::sign() const { return number::detail::node_sign(*node_); }

bool operator==(const Constructible& a, const Constructible& b) {
  if (a.node_ == b.node_) return true;
  return (a - b).is_zero();
}

std::strong_ordering operator<=>(const Constructible& a, const Constructible& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  switch ((a - b).sign()) {
    case Sign::Negative: return std::strong_ordering::less;
    case Sign::Zero: return std::strong_ordering::equal;
    case Sign::Positive: return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool Constructible::is_rational() const { return node_->op == Op::Rational; }

std::optional<Rational> Constructible::as_rational() const {
  if (node_->op != Op::Rational) return std::nullopt;
  return node_->value;
}

int Constructible::radical_depth() const { return node_->radical_depth; }

std::string Constructible::approx(int digits) const {
  if (digits < 1) digits = 1;
  mpq_class value;
  if (node_->op == Op::Rational) {
    value = node_->value;
  } else {
    // Required width of the enclosure: 10^-(digits+2).
    mpq_class tolerance(1);
    for (int i = 0; i < digits + 2; ++i) tolerance /= 10;
    mpfr_prec_t prec = std::max<mpfr_prec_t>(64, 4 * digits + 32);
    for (;; prec *= 2) {
      auto iv = number::detail::node_interval(*node_, prec);
      if (!iv.bounded) continue;
      mpq_class lo;
      mpq_class hi;
      mpfr_get_q(lo.get_mpq_t(), iv.lo.get());
      mpfr_get_q(hi.get_mpq_t(), iv.hi.get());
      if (hi - lo < tolerance) {
        value = (lo + hi) / 2;
        break;
      }
    }
  }
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpq_class scaled = value * scale;
  // Round half away from zero.
  mpq_class magnitude = abs(scaled) + mpq_class(1, 2);
  mpz_class n;
  mpz_fdiv_q(n.get_mpz_t(), magnitude.get_num_mpz_t(), magnitude.get_den_mpz_t());
  std::string text = n.get_str();
  if (text.size() <= static_cast<std::size_t>(digits)) text.insert(0, digits + 1 - text.size(), '0');
  text.insert(text.size() - digits, ".");
  if (sgn(scaled) < 0 && n != 0) text.insert(0, "-");
  return text;
}

double Constructible::to_double() const {
  if (node_->op == Op::Rational) return node_->value.get_d();
  for (mpfr_prec_t prec = 64;; prec *= 2) {
    auto iv = number::detail::node_interval(*node_, prec);
    if (!iv.bounded) continue;
    number::detail::BigFloat mid(prec + 1);
    mpfr_add(mid.get(), iv.lo.get(), iv.hi.get(), MPFR_RNDN);
    mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
    return mpfr_get_d(mid.get(), MPFR_RNDN);
  }
}

// ------------------------------------------------------------ serialization

namespace {

void write_node(std::string& out, const Node& n) {
  switch (n.op) {
    case Op::Rational: out += n.value.get_str(); return;
    case Op::Sqrt:
      out += "(sqrt ";
      write_node(out, *n.lhs);
      out += ')';
      return;
    default: break;
  }
  out += '(';
  out += n.op == Op::Add ? '+' : n.op == Op::Sub ? '-' : n.op == Op::Mul ? '*' : '/';
  out += ' ';
  write_node(out, *n.lhs);
  out += ' ';
  write_node(out, *n.rhs);
  out += ')';
}

class ExprReader {
 public:
  explicit ExprReader(std::string_view text) : text_(text) {}

  NodePtr read_all() {
    NodePtr n = read();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(std::string_view tok) {
    if (text_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  std::optional<Op> read_op() {
    if (eat("sqrt") || eat("√")) return Op::Sqrt;
    if (eat("−")) return Op::Sub;
    if (eat("×")) return Op::Mul;
    if (eat("÷")) return Op::Div;
    if (pos_ < text_.size()) {
      char c = text_[pos_];
      bool sign_char = c == '+' || c == '-';
      bool followed_by_digit = pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]));
      if (sign_char && followed_by_digit) return std::nullopt;
      if (c == '+' || c == '-' || c == '*' || c == '/') {
        ++pos_;
        return c == '+' ? Op::Add : c == '-' ? Op::Sub : c == '*' ? Op::Mul : Op::Div;
      }
    }
    return std::nullopt;
  }

  NodePtr read() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    if (text_[pos_] == '(') {
      ++pos_;
      skip_space();
      auto op = read_op();
      if (!op) fail("expected operator");
      NodePtr lhs = read();
      NodePtr rhs;
      if (*op != Op::Sqrt) rhs = read();
      skip_space();
      if (!eat(")")) fail("expected ')'");
      if (*op == Op::Sqrt && number::detail::node_sign(*lhs) == Sign::Negative) {
        throw NegativeRadicand("sqrt of a negative value in serialized expression");
      }
      if (*op == Op::Div && number::detail::node_sign(*rhs) == Sign::Zero) {
        throw DivisionByZero("division by zero in serialized expression");
      }
      return make_node(*op, std::move(lhs), std::move(rhs));
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != ')' &&
           text_[pos_] != '(') {
      ++pos_;
    }
    std::string_view tok = text_.substr(start, pos_ - start);
    // Accept the Unicode minus in literals as well.
    std::string lit(tok);
    if (lit.rfind("−", 0) == 0) lit = "-" + lit.substr(3);
    return make_rational(parse_rational_text(lit));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Constructible::serialize() const {
  std::string out;
  write_node(out, *node_);
  return out;
}

Constructible Constructible::deserialize(std::string_view text) {
  return Constructible(ExprReader(text).read_all());
}

std::uint64_t Constructible::tree_size(std::uint64_t cap) const {
  std::unordered_map<const Node*, std::uint64_t> memo;
  auto size_of = [&](auto&& self, const Node& n) -> std::uint64_t {
    if (n.op == Op::Rational) return 1;
    auto it = memo.find(&n);
    if (it != memo.end()) return it->second;
    std::uint64_t total = 1 + self(self, *n.lhs);
    if (n.rhs) total += self(self, *n.rhs);
    total = std::min(total, cap);
    memo.emplace(&n, total);
    return total;
  };
  return std::min(size_of(size_of, *node_), cap);
}

// ------------------------------------------------------------ free functions

Constructible sqrt_nonneg(const Constructible& a) {
  Sign s = a.sign();
  if (s == Sign::Negative) throw NegativeRadicand("square root of a negative value");
  if (s == Sign::Zero) return Constructible();
  if (const Node* n = rational_leaf(a)) {
    const mpq_class& q = n->value;
    if (mpz_perfect_square_p(q.get_num_mpz_t()) != 0 && mpz_perfect_square_p(q.get_den_mpz_t()) != 0) {
      mpz_class num;
      mpz_class den;
      mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
      mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
      return Constructible(mpq_class(num, den));
    }
  }
  return Constructible(make_node(Op::Sqrt, a.node_));
}

Constructible abs(const Constructible& a) { return a.is_negative() ? -a : a; }

Constructible square(const Constructible& a) { return a * a; }

std::ostream& operator<<(std::ostream& os, const Constructible& c) { return os << c.serialize(); }

std::ostream& operator<<(std::ostream& os, Sign s) {
  switch (s) {
    case Sign::Negative: return os << '-';
    case Sign::Zero: return os << '0';
    case Sign::Positive: return os << '+';
  }
  return os;
}

}  // namespace euclid
