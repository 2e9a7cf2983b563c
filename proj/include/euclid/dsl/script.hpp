#pragma once

/**
 * @file script.hpp
 * @brief The `.euc` construction-script language.
 *
 * A script is a linear list of statements, one per line, with `#` comments:
 *
 *     point A = (0, 0)
 *     point B = (1, 0)
 *     circle BCD = circle(A, B)
 *     circle ACE = circle(B, A)
 *     point C = intersect(BCD, ACE) side upper
 *     assert seg_eq(join(C, A), join(C, B), join(A, B))
 *
 * parse() never throws: syntax errors become diagnostics and parsing resumes
 * at the next line. check() reports definition, arity and type errors.
 * interpret() runs a checked script; the same text always yields the same
 * objects and a byte-identical serialized trace.
 *
 * Spans are 1-based (line, byte column) and always lie within the source:
 * a diagnostic at the end of a line points one past its last character.
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "euclid/elements/catalog.hpp"

namespace euclid::dsl {

using elements::Object;
using elements::ObjType;

struct Span {
  int line = 1;
  int column = 1;
  int length = 1;
};

enum class Severity { Error, Warning };

struct Diagnostic {
  Span span;
  Severity severity = Severity::Error;
  std::string message;
  std::string note;  // may be empty
};

/// "file:line:col: error: message" plus an indented note line when present.
std::string format(const Diagnostic& d, std::string_view file = "<script>");

/// Coordinate expression: integers, + - * /, unary minus and sqrt.
struct Num {
  enum class Op { Int, Neg, Add, Sub, Mul, Div, Sqrt };
  Op op = Op::Int;
  std::string digits;     // Op::Int
  std::vector<Num> args;  // one or two operands

  friend bool operator==(const Num&, const Num&) = default;
};

struct Expr {
  enum class Kind { Ref, Field, Literal, Call, Prop };
  Kind kind = Kind::Ref;
  Span span;
  std::string name;   // Ref: identifier; Field: result name; Call: function; Prop: proposition id
  std::string field;  // Field
  Num x, y;           // Literal
  std::vector<Expr> args;
  std::vector<std::string> arg_names;  // parallel to args; empty string when positional
  std::string side;                    // Prop: "left", "right", "upper", "lower" or empty

  /// Structural equality, ignoring spans.
  bool same(const Expr& o) const;
};

struct Selector {
  enum class Kind { None, First, Second, Upper, Lower, LeftOf, RightOf, SameSide, OppositeSide };
  Kind kind = Kind::None;
  Span span;
  std::vector<Expr> args;
};

struct Statement {
  enum class Kind { Declaration, Assertion };
  Kind kind = Kind::Declaration;
  Span span;
  // Declaration
  std::string type;  // an object type name or "result"
  std::string name;
  Span name_span;
  Expr value;
  Selector selector;
  // Assertion
  std::string predicate;
  std::vector<Expr> args;

  bool same(const Statement& o) const;
};

struct Script {
  std::vector<Statement> statements;
  bool same(const Script& o) const;
};

struct ParseResult {
  Script script;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return diagnostics.empty(); }
};

ParseResult parse(std::string_view text);

std::vector<Diagnostic> check(const Script& s);

/// Canonical text; parse(print(s)) is structurally equal to s.
std::string print(const Script& s);
std::string print(const Expr& e);
/// "side upper", "same_side(l, P)", ...; empty for no selector.
std::string print(const Selector& s);

struct AssertionOutcome {
  Span span;
  std::string text;
  bool pass = false;
  std::string detail;
};

struct Run {
  std::vector<std::pair<std::string, Object>> objects;  // declarations, in order
  std::vector<std::pair<std::string, elements::PropositionResult>> results;
  elements::Trace trace;
  std::vector<AssertionOutcome> assertions;
  /// Set when a statement raised; execution stops there.
  std::optional<Diagnostic> failure;
  std::string failure_kind;  // e.g. "NoSuchIntersection"

  bool ok() const;
  /// Looks up a declared object; nullptr when absent.
  const Object* find(const std::string& name) const;
  /// Assertion lines "<text> | PASS|FAIL | <detail>" and the failure, if any.
  std::string report() const;
};

/// Runs a script that passed check(); refuses (sets failure) otherwise.
Run interpret(const Script& s);

/// parse + check + interpret. Syntax and check errors are returned in
/// `diagnostics` and leave the Run empty.
Run run_text(std::string_view text, std::vector<Diagnostic>& diagnostics);

/// Reads an instance description: object declarations, one per line. Objects
/// referred to by later declarations are building blocks; the others are
/// returned in order. Throws ParseError with the formatted diagnostics.
elements::Bundle read_instance(std::string_view text);

}  // namespace euclid::dsl
