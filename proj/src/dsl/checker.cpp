// Static checks: single definition, definition before use, arity and types.

#include <map>
#include <optional>

#include "euclid/dsl/script.hpp"
#include "euclid/error.hpp"
#include "primitives.hpp"

namespace euclid::dsl {

using elements::find_signature;
using elements::Signature;

namespace {

/// "point", ..., "figure", or "result".
using TypeName = std::string;

struct Binding {
  TypeName type;
  const Signature* prop = nullptr;
  int line = 0;
};

class Checker {
 public:
  explicit Checker(const Script& s) : script_(s) {
    for (const auto& st : s.statements) {
      if (st.kind == Statement::Kind::Declaration && !later_.count(st.name)) later_[st.name] = st.span.line;
    }
  }

  std::vector<Diagnostic> run() {
    for (const auto& st : script_.statements) {
      if (st.kind == Statement::Kind::Declaration) declaration(st);
      else assertion(st);
    }
    return std::move(diags_);
  }

 private:
  void error(const Span& sp, std::string msg, std::string note = {}) {
    diags_.push_back({sp, Severity::Error, std::move(msg), std::move(note)});
  }

  void declaration(const Statement& st) {
    std::optional<TypeName> t;
    if (st.value.kind == Expr::Kind::Prop) {
      if (st.type != "result") error(st.value.span, "a proposition yields a result, not a " + st.type);
      t = prop(st.value);
    } else {
      if (st.type == "result") error(st.value.span, "a result must be the value of a proposition");
      t = infer(st.value, st.type);
    }
    if (st.selector.kind != Selector::Kind::None) selector(st);
    if (t && *t != st.type && st.type != "result") {
      error(st.value.span, "'" + st.name + "' is declared " + st.type + " but the value is a " + *t);
    }
    if (auto it = env_.find(st.name); it != env_.end()) {
      error(st.name_span, "'" + st.name + "' is already defined",
            "first defined at line " + std::to_string(it->second.line));
      return;
    }
    Binding b{st.type, nullptr, st.span.line};
    if (st.value.kind == Expr::Kind::Prop) {
      try {
        b.prop = find_signature(st.value.name);
      } catch (const StrategyInapplicable&) {
        // already reported
      }
    }
    env_[st.name] = b;
  }

  void selector(const Statement& st) {
    const Selector& s = st.selector;
    if (st.value.kind != Expr::Kind::Call || st.value.name != "intersect") {
      error(s.span, "selectors apply only to intersect");
      return;
    }
    switch (s.kind) {
      case Selector::Kind::LeftOf:
      case Selector::Kind::RightOf:
        expect_line_like(s.args[0]);
        break;
      case Selector::Kind::SameSide:
      case Selector::Kind::OppositeSide:
        expect_line_like(s.args[0]);
        expect(s.args[1], "point");
        break;
      default: break;
    }
  }

  void assertion(const Statement& st) {
    const Predicate* p = find_predicate(st.predicate);
    if (!p) {
      error(st.span, "unknown assertion '" + st.predicate + "'",
            "known: seg_eq, angle_eq, area_eq, parallel, right_angle, collinear");
      return;
    }
    std::size_t n = st.args.size();
    if (n < p->min_args || (p->max_args && n > p->max_args)) {
      error(st.span, st.predicate + " takes " + arity_text(p->min_args, p->max_args) + ", got " + std::to_string(n));
    }
    for (const auto& a : st.args) {
      if (p->line_like) expect_line_like(a);
      else expect(a, p->type);
    }
  }

  void expect(const Expr& e, const TypeName& want) {
    auto t = infer(e, want);
    if (t && *t != want) error(e.span, "expected a " + want + ", found a " + *t);
  }

  void expect_line_like(const Expr& e) {
    auto t = infer(e, "line");
    if (t && *t != "line" && *t != "segment" && *t != "ray") error(e.span, "expected a line, segment or ray, found a " + *t);
  }

  std::optional<TypeName> lookup(const Expr& e) {
    auto it = env_.find(e.name);
    if (it != env_.end()) return it->second.type;
    std::string note;
    if (auto l = later_.find(e.name); l != later_.end()) note = "defined later, at line " + std::to_string(l->second);
    error(e.span, "use of undefined '" + e.name + "'", note);
    return std::nullopt;
  }

  /// Type of e, or nullopt when an error was already reported. `hint` is the
  /// type the context expects; it types the lettered points of results.
  std::optional<TypeName> infer(const Expr& e, const TypeName& hint) {
    switch (e.kind) {
      case Expr::Kind::Literal: return TypeName("point");
      case Expr::Kind::Ref: return lookup(e);
      case Expr::Kind::Field: {
        auto t = lookup(e);
        if (!t) return std::nullopt;
        if (*t != "result") {
          error(e.span, "'" + e.name + "' is a " + *t + " and has no outputs");
          return std::nullopt;
        }
        const Signature* sig = env_[e.name].prop;
        if (!sig) return std::nullopt;
        for (const auto& [n, ty] : sig->outputs) {
          if (n == e.field) return TypeName(elements::to_string(ty));
        }
        if (hint == "point") return TypeName("point");  // a lettered point, resolved when run
        error(e.span, sig->id + " has no output '" + e.field + "'");
        return std::nullopt;
      }
      case Expr::Kind::Prop:
        error(e.span, "propositions may only be the value of a result declaration");
        return std::nullopt;
      case Expr::Kind::Call: return call(e);
    }
    return std::nullopt;
  }

  std::optional<TypeName> call(const Expr& e) {
    const Primitive* p = find_primitive(e.name);
    if (!p) {
      error(e.span, "unknown function '" + e.name + "'",
            "known: join, line, extend, circle, intersect, angle, polygon; propositions are written I.<n>");
      return std::nullopt;
    }
    std::size_t n = e.args.size();
    if (n < p->min_args || (p->max_args && n > p->max_args)) {
      error(e.span, e.name + " takes " + arity_text(p->min_args, p->max_args) + ", got " + std::to_string(n));
      return p->result;
    }
    for (const auto& a : e.args) {
      if (p->name == std::string_view("intersect")) {
        auto t = infer(a, "line");
        if (t && *t != "line" && *t != "segment" && *t != "ray" && *t != "circle") {
          error(a.span, "intersect takes lines, segments, rays or circles, not a " + *t);
        }
      } else {
        expect(a, "point");
      }
    }
    return p->result;
  }

  std::optional<TypeName> prop(const Expr& e) {
    const Signature* sig = nullptr;
    try {
      sig = find_signature(e.name);
    } catch (const StrategyInapplicable& x) {
      error(e.span, x.what());
      return std::nullopt;
    }
    if (!sig) {
      error(e.span, "unknown proposition " + e.name);
      return std::nullopt;
    }
    if (!e.side.empty() && !sig->takes_side) error(e.span, sig->id + " takes no side");
    if (sig->theorem) {
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (e.arg_names[i].empty()) error(e.args[i].span, "theorem arguments are named, e.g. " + elements::theorem_schema(sig->id));
        infer(e.args[i], "");
      }
      return TypeName("result");
    }
    if (e.args.size() != sig->params.size()) {
      error(e.span, sig->id + " takes " + std::to_string(sig->params.size()) + " arguments, got " +
                        std::to_string(e.args.size()));
      return TypeName("result");
    }
    for (std::size_t i = 0; i < e.args.size(); ++i) {
      if (!e.arg_names[i].empty()) error(e.args[i].span, "construction arguments are positional");
      expect(e.args[i], elements::to_string(sig->params[i]));
    }
    return TypeName("result");
  }

  static std::string arity_text(std::size_t lo, std::size_t hi) {
    if (hi == lo) return std::to_string(lo) + (lo == 1 ? " argument" : " arguments");
    if (!hi) return "at least " + std::to_string(lo) + " arguments";
    return std::to_string(lo) + " to " + std::to_string(hi) + " arguments";
  }

  const Script& script_;
  std::map<std::string, Binding> env_;
  std::map<std::string, int> later_;
  std::vector<Diagnostic> diags_;
};

}  // namespace

std::vector<Diagnostic> check(const Script& s) { return Checker(s).run(); }

}  // namespace euclid::dsl
