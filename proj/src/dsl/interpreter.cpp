// Interpretation of checked scripts.

#include <functional>
#include <map>
#include <memory>
#include <set>

#include "euclid/dsl/script.hpp"
#include "euclid/error.hpp"
#include "primitives.hpp"

namespace euclid::dsl {

using elements::PropositionResult;
using elements::Step;
using elements::StepKind;
using geom::Angle;
using geom::Circle;
using geom::Figure;
using geom::Line;
using geom::Point;
using geom::Ray;
using geom::Segment;
using geom::Side;

namespace {

struct Failed {
  Span span;
  std::string kind;
  std::string message;
};

Constructible eval(const Num& n) {
  switch (n.op) {
    case Num::Op::Int: return Constructible::parse_rational(n.digits);
    case Num::Op::Neg: return -eval(n.args[0]);
    case Num::Op::Add: return eval(n.args[0]) + eval(n.args[1]);
    case Num::Op::Sub: return eval(n.args[0]) - eval(n.args[1]);
    case Num::Op::Mul: return eval(n.args[0]) * eval(n.args[1]);
    case Num::Op::Div: return eval(n.args[0]) / eval(n.args[1]);
    case Num::Op::Sqrt: return sqrt_nonneg(eval(n.args[0]));
  }
  return {};
}

/// The carrier line of a line, segment or ray (directed from its first point).
Line carrier(const Object& o) {
  if (const auto* l = std::get_if<Line>(&o)) return *l;
  if (const auto* s = std::get_if<Segment>(&o)) return Line(s->a(), s->b());
  return std::get<Ray>(o).line();
}

/// Whether p, known to be on the carrier of o, lies on o itself.
bool on_part(const Object& o, const Point& p) {
  if (const auto* s = std::get_if<Segment>(&o)) return !geom::dot(p - s->a(), p - s->b()).is_positive();
  if (const auto* r = std::get_if<Ray>(&o)) return r->contains(p);
  return true;
}

std::vector<Point> meet(const Object& a, const Object& b) {
  const auto* ca = std::get_if<Circle>(&a);
  const auto* cb = std::get_if<Circle>(&b);
  std::vector<Point> pts;
  if (ca && cb) return geom::intersect_circles(*ca, *cb);
  if (ca || cb) {
    const Object& l = ca ? b : a;
    for (const Point& p : geom::intersect_line_circle(carrier(l), ca ? *ca : *cb)) {
      if (on_part(l, p)) pts.push_back(p);
    }
    return pts;
  }
  geom::LineMeet m = geom::intersect_lines(carrier(a), carrier(b));
  if (m.kind == geom::LineMeet::Kind::Coincident) throw Coincident("the straight lines coincide");
  if (m.kind == geom::LineMeet::Kind::Point && on_part(a, *m.point) && on_part(b, *m.point)) pts.push_back(*m.point);
  return pts;
}

class Interpreter {
 public:
  Run run(const Script& s) {
    for (const auto& st : s.statements) {
      try {
        if (st.kind == Statement::Kind::Declaration) declaration(st);
        else assertion(st);
      } catch (const Failed& f) {
        fail(f.span, f.kind, f.message);
        break;
      } catch (const Error& e) {
        fail(st.span, e.kind(), e.what());
        break;
      } catch (const std::exception& e) {
        fail(st.span, "Error", e.what());
        break;
      }
    }
    return std::move(run_);
  }

 private:
  struct Slot {
    bool result = false;
    std::size_t index = 0;
  };

  void fail(const Span& sp, const std::string& kind, const std::string& msg) {
    run_.failure = Diagnostic{sp, Severity::Error, msg, {}};
    run_.failure_kind = kind;
  }

  void step(StepKind k, const std::string& label, const std::string& note, std::optional<Object> o) {
    Step s;
    s.kind = k;
    s.label = label;
    s.note = note;
    if (o) s.radical_depth = elements::radical_depth(*o);
    s.object = std::move(o);
    run_.trace.add(std::move(s));
  }

  void declaration(const Statement& st) {
    if (st.value.kind == Expr::Kind::Prop) {
      PropositionResult r = prop(st.value);
      Step s;
      s.kind = StepKind::Sub;
      s.label = st.name;
      s.note = r.id;
      s.sub = std::make_shared<elements::Trace>(r.trace);
      run_.trace.add(std::move(s));
      // Theorem conclusions are reported like assertions; construction
      // postconditions have already passed.
      if (elements::find_signature(st.value.name)->theorem) {
        for (const auto& c : r.verification) run_.assertions.push_back({st.span, r.id + ": " + c.text, c.pass, c.residual});
      }
      env_[st.name] = {true, run_.results.size()};
      run_.results.emplace_back(st.name, std::move(r));
      return;
    }
    Object o = value(st.value, st.name, &st.selector);
    env_[st.name] = {false, run_.objects.size()};
    run_.objects.emplace_back(st.name, std::move(o));
  }

  PropositionResult prop(const Expr& e) {
    elements::Bundle args;
    for (std::size_t i = 0; i < e.args.size(); ++i) args.emplace_back(e.arg_names[i], value(e.args[i], print(e.args[i]), nullptr));
    std::optional<Side> side;
    if (!e.side.empty()) side = (e.side == "left" || e.side == "upper") ? Side::Left : Side::Right;
    try {
      return elements::invoke(e.name, args, side);
    } catch (const Error& x) {
      throw Failed{e.span, x.kind(), x.what()};
    }
  }

  const Object& object(const Expr& e) {
    const Slot& s = env_.at(e.name);
    return run_.objects[s.index].second;
  }

  Object value(const Expr& e, const std::string& label, const Selector* sel) {
    try {
      switch (e.kind) {
        case Expr::Kind::Literal: return Point(eval(e.x), eval(e.y));
        case Expr::Kind::Ref: return object(e);
        case Expr::Kind::Field: return field(e);
        case Expr::Kind::Call: return call(e, label, sel);
        case Expr::Kind::Prop: break;
      }
    } catch (const Error& x) {
      throw Failed{e.span, x.kind(), x.what()};
    }
    throw Failed{e.span, "Error", "a proposition cannot be used here"};
  }

  Object field(const Expr& e) {
    const PropositionResult& r = run_.results[env_.at(e.name).index].second;
    if (r.has(e.field)) return r.get(e.field);
    for (auto it = r.labels.rbegin(); it != r.labels.rend(); ++it) {
      if (it->first == e.field) return it->second;
    }
    throw Error("UnknownOutput", r.id + " has no output or lettered point '" + e.field + "'");
  }

  Point point_arg(const Expr& e) { return std::get<Point>(value(e, print(e), nullptr)); }

  Object call(const Expr& e, const std::string& label, const Selector* sel) {
    const std::string& f = e.name;
    if (f == "join") {
      Segment s = geom::join_segment(point_arg(e.args[0]), point_arg(e.args[1]));
      step(StepKind::Join, label, "Postulate 1", s);
      return s;
    }
    if (f == "line") {
      Line l = geom::join(point_arg(e.args[0]), point_arg(e.args[1]));
      step(StepKind::Join, label, "Postulate 1", l);
      return l;
    }
    if (f == "extend") {
      Ray r = geom::extend(Segment(point_arg(e.args[0]), point_arg(e.args[1])), geom::End::B);
      step(StepKind::Extend, label, "Postulate 2", r);
      return r;
    }
    if (f == "circle") {
      Circle c = geom::circle(point_arg(e.args[0]), point_arg(e.args[1]));
      step(StepKind::Circle, label, "Postulate 3", c);
      return c;
    }
    if (f == "angle") return Angle(point_arg(e.args[0]), point_arg(e.args[1]), point_arg(e.args[2]));
    if (f == "polygon") {
      std::vector<Point> v;
      for (const auto& a : e.args) v.push_back(point_arg(a));
      return Figure(std::move(v));
    }
    Object a = value(e.args[0], print(e.args[0]), nullptr);
    Object b = value(e.args[1], print(e.args[1]), nullptr);
    std::vector<Point> pts = meet(a, b);
    static const Selector none;
    const Selector& s = sel ? *sel : none;
    std::size_t i = select(pts, s, e);
    step(StepKind::Pick, label,
         selector_text(s) + " (" + std::to_string(i + 1) + " of " + std::to_string(pts.size()) + ")", pts[i]);
    return pts[i];
  }

  static std::string selector_text(const Selector& s) {
    std::string t = print(s);
    return t.empty() ? "first" : t;
  }

  std::size_t select(const std::vector<Point>& pts, const Selector& s, const Expr& call) {
    auto none = [&](const std::string& why) -> Failed {
      return Failed{s.kind == Selector::Kind::None ? call.span : s.span, "NoSuchIntersection", why};
    };
    if (pts.empty()) throw none(print(call) + ": the objects do not meet");
    switch (s.kind) {
      case Selector::Kind::None:
      case Selector::Kind::First: return 0;
      case Selector::Kind::Second:
        if (pts.size() < 2) throw none(print(call) + ": there is no second intersection");
        return 1;
      case Selector::Kind::Upper:
      case Selector::Kind::Lower: {
        if (pts.size() == 1) return 0;
        if (pts[0].y == pts[1].y) throw none(print(call) + ": the intersections are level; use left_of or same_side");
        bool second_higher = pts[1].y > pts[0].y;
        return (s.kind == Selector::Kind::Upper) == second_higher ? 1 : 0;
      }
      case Selector::Kind::LeftOf:
      case Selector::Kind::RightOf: {
        Line l = carrier(value(s.args[0], print(s.args[0]), nullptr));
        Side want = s.kind == Selector::Kind::LeftOf ? Side::Left : Side::Right;
        for (std::size_t i = 0; i < pts.size(); ++i) {
          if (l.side_of(pts[i]) == want) return i;
        }
        throw none(print(call) + ": no intersection on that side");
      }
      case Selector::Kind::SameSide:
      case Selector::Kind::OppositeSide: {
        Line l = carrier(value(s.args[0], print(s.args[0]), nullptr));
        Point ref = std::get<Point>(value(s.args[1], print(s.args[1]), nullptr));
        auto side = l.side_of(ref);
        if (!side) throw Failed{s.span, "DegenerateInput", print(s.args[1]) + " lies on the line"};
        Side want = s.kind == Selector::Kind::SameSide ? *side : geom::opposite(*side);
        for (std::size_t i = 0; i < pts.size(); ++i) {
          if (l.side_of(pts[i]) == want) return i;
        }
        throw none(print(call) + ": no intersection on that side");
      }
    }
    return 0;
  }

  void assertion(const Statement& st) {
    std::vector<Object> v;
    for (const auto& a : st.args) v.push_back(value(a, print(a), nullptr));
    std::string text = st.predicate + "(";
    for (std::size_t i = 0; i < st.args.size(); ++i) text += (i ? ", " : "") + print(st.args[i]);
    text += ")";
    bool pass = true;
    std::string detail = "0";
    const std::string& p = st.predicate;
    if (p == "seg_eq" || p == "area_eq") {
      auto measure = [&](const Object& o) {
        return p == "seg_eq" ? std::get<Segment>(o).length2() : geom::content(std::get<Figure>(o));
      };
      Constructible first = measure(v[0]);
      for (std::size_t i = 1; i < v.size() && pass; ++i) {
        Constructible r = measure(v[i]) - first;
        if (!r.is_zero()) {
          pass = false;
          detail = elements::residual_text(r);
        }
      }
    } else if (p == "angle_eq") {
      for (std::size_t i = 1; i < v.size(); ++i) pass = pass && geom::angle_eq(std::get<Angle>(v[0]), std::get<Angle>(v[i]));
    } else if (p == "parallel") {
      pass = geom::parallel(carrier(v[0]), carrier(v[1]));
    } else if (p == "right_angle") {
      pass = geom::is_right(std::get<Angle>(v[0]));
    } else if (p == "collinear") {
      const Point& a = std::get<Point>(v[0]);
      const Point& b = std::get<Point>(v[1]);
      for (std::size_t i = 2; i < v.size(); ++i) pass = pass && geom::collinear(a, b, std::get<Point>(v[i]));
    }
    if (!pass && detail == "0") detail = "false";
    run_.assertions.push_back({st.span, text, pass, detail});
  }

  Run run_;
  std::map<std::string, Slot> env_;
};

}  // namespace

bool Run::ok() const {
  if (failure) return false;
  for (const auto& a : assertions) {
    if (!a.pass) return false;
  }
  return true;
}

const Object* Run::find(const std::string& name) const {
  for (const auto& [k, v] : objects) {
    if (k == name) return &v;
  }
  return nullptr;
}

std::string Run::report() const {
  std::string out;
  for (const auto& a : assertions) {
    out += "line " + std::to_string(a.span.line) + ": " + a.text + " | " + (a.pass ? "PASS" : "FAIL") + " | " + a.detail +
           "\n";
  }
  if (failure) out += format(*failure) + " [" + failure_kind + "]\n";
  return out;
}

Run interpret(const Script& s) {
  std::vector<Diagnostic> d = check(s);
  if (!d.empty()) {
    Run r;
    r.failure = d.front();
    r.failure_kind = "CheckFailed";
    return r;
  }
  return Interpreter().run(s);
}

Run run_text(std::string_view text, std::vector<Diagnostic>& diagnostics) {
  ParseResult p = parse(text);
  diagnostics = p.diagnostics;
  if (!p.ok()) return {};
  diagnostics = check(p.script);
  if (!diagnostics.empty()) return {};
  return Interpreter().run(p.script);
}

elements::Bundle read_instance(std::string_view text) {
  std::vector<Diagnostic> d;
  ParseResult p = parse(text);
  d = p.diagnostics;
  if (d.empty()) d = check(p.script);
  for (const auto& st : p.script.statements) {
    if (st.kind != Statement::Kind::Declaration || st.type == "result") {
      d.push_back({st.span, Severity::Error, "instance files contain object declarations only", {}});
    }
  }
  auto fail = [&] {
    std::string msg;
    for (const auto& x : d) msg += format(x, "<instance>") + "\n";
    throw ParseError(msg);
  };
  if (!d.empty()) fail();
  Run r = Interpreter().run(p.script);
  if (r.failure) {
    d.push_back(*r.failure);
    fail();
  }
  std::set<std::string> used;
  std::function<void(const Expr&)> refs = [&](const Expr& e) {
    if (e.kind == Expr::Kind::Ref || e.kind == Expr::Kind::Field) used.insert(e.name);
    for (const auto& a : e.args) refs(a);
  };
  for (const auto& st : p.script.statements) {
    refs(st.value);
    for (const auto& a : st.selector.args) refs(a);
  }
  elements::Bundle out;
  for (auto& o : r.objects) {
    if (!used.count(o.first)) out.push_back(std::move(o));
  }
  return out;
}

}  // namespace euclid::dsl
