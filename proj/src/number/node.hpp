#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>

#include <gmpxx.h>

#include "euclid/number/constructible.hpp"
#include "interval.hpp"
#include "radical_form.hpp"

namespace euclid::number::detail {

enum class Op : std::uint8_t { Rational, Add, Sub, Mul, Div, Sqrt };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  Op op = Op::Rational;
  mpq_class value;  // Op::Rational only
  NodePtr lhs;
  NodePtr rhs;      // null for Sqrt and Rational
  int radical_depth = 0;
  QuickInterval quick;

  // Memoization; invisible to callers.
  mutable std::mutex interval_mu;
  mutable std::optional<Interval> interval;  // engaged once interval_prec > 0
  mutable mpfr_prec_t interval_prec = 0;
  mutable std::once_flag form_once;
  mutable std::shared_ptr<const Fraction> form;
  mutable std::atomic<int> sign_cache{2};  // 2 = not yet known
};

NodePtr make_rational(const mpq_class& q);
NodePtr make_node(Op op, NodePtr lhs, NodePtr rhs = nullptr);

Interval node_interval(const Node& n, mpfr_prec_t prec);
const Fraction& node_form(const Node& n);
Sign node_sign(const Node& n);

}  // namespace euclid::number::detail

namespace euclid {

/// Internal bridge between Constructible and its node representation.
struct ConstructibleAccess {
  static Constructible wrap(number::detail::NodePtr n) { return Constructible(std::move(n)); }
  static const number::detail::NodePtr& ptr(const Constructible& c) { return c.node_; }
};

}  // namespace euclid
