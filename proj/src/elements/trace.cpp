#include "euclid/elements/trace.hpp"

#include <algorithm>
#include <stdexcept>

namespace euclid::elements {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

int depth(const Point& p) { return std::max(p.x.radical_depth(), p.y.radical_depth()); }

std::string pt(const Point& p) { return geom::approx_string(p, 6); }

}  // namespace

const char* type_name(const Object& o) {
  return std::visit(Overloaded{[](const Point&) { return "point"; }, [](const Segment&) { return "segment"; },
                               [](const Line&) { return "line"; }, [](const Ray&) { return "ray"; },
                               [](const Circle&) { return "circle"; }, [](const Angle&) { return "angle"; },
                               [](const Figure&) { return "figure"; }},
                    o);
}

int radical_depth(const Object& o) {
  return std::visit(
      Overloaded{[](const Point& p) { return depth(p); },
                 [](const Segment& s) { return std::max(depth(s.a()), depth(s.b())); },
                 [](const Line& l) { return std::max(depth(l.p()), depth(l.q())); },
                 [](const Ray& r) { return std::max(depth(r.origin()), depth(r.through())); },
                 [](const Circle& c) { return std::max(depth(c.center()), c.radius2().radical_depth()); },
                 [](const Angle& a) { return std::max({depth(a.vertex()), depth(a.arm1()), depth(a.arm2())}); },
                 [](const Figure& f) {
                   int d = 0;
                   for (const auto& p : f.vertices()) d = std::max(d, depth(p));
                   return d;
                 }},
      o);
}

std::string describe(const Object& o) {
  return std::visit(
      Overloaded{[](const Point& p) { return "point " + pt(p); },
                 [](const Segment& s) { return "segment " + pt(s.a()) + " " + pt(s.b()); },
                 [](const Line& l) { return "line " + pt(l.p()) + " " + pt(l.q()); },
                 [](const Ray& r) { return "ray " + pt(r.origin()) + " " + pt(r.through()); },
                 [](const Circle& c) { return "circle " + pt(c.center()) + " r2=" + c.radius2().approx(6); },
                 [](const Angle& a) { return "angle " + pt(a.vertex()) + " " + pt(a.arm1()) + " " + pt(a.arm2()); },
                 [](const Figure& f) {
                   std::string s = "figure";
                   for (const auto& p : f.vertices()) s += " " + pt(p);
                   return s;
                 }},
      o);
}

const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::Join: return "join";
    case StepKind::Extend: return "extend";
    case StepKind::Circle: return "circle";
    case StepKind::Pick: return "pick";
    case StepKind::Superpose: return "superpose";
    case StepKind::Sub: return "sub";
  }
  return "?";
}

void Trace::add(Step s) {
  if (s.object) s.radical_depth = radical_depth(*s.object);
  steps_.push_back(std::move(s));
}

Counts Trace::direct() const {
  Counts c;
  for (const auto& s : steps_) {
    switch (s.kind) {
      case StepKind::Join: ++c.joins; break;
      case StepKind::Extend: ++c.extends; break;
      case StepKind::Circle: ++c.circles; break;
      case StepKind::Pick: ++c.picks; break;
      case StepKind::Superpose: ++c.superpositions; break;
      case StepKind::Sub: ++c.subconstructions; break;
    }
    if (s.object) ++c.objects;
    c.max_radical_depth = std::max(c.max_radical_depth, s.radical_depth);
  }
  return c;
}

Counts Trace::total() const {
  Counts c = direct();
  for (const auto& s : steps_) {
    if (s.kind != StepKind::Sub || !s.sub) continue;
    Counts n = s.sub->total();
    c.joins += n.joins;
    c.extends += n.extends;
    c.circles += n.circles;
    c.picks += n.picks;
    c.superpositions += n.superpositions;
    c.subconstructions += n.subconstructions;
    c.objects += n.objects;
    c.max_radical_depth = std::max(c.max_radical_depth, n.max_radical_depth);
  }
  return c;
}

void Trace::serialize_into(std::string& out, int indent) const {
  for (const auto& s : steps_) {
    out.append(static_cast<std::size_t>(indent) * 2, ' ');
    out += to_string(s.kind);
    out += ' ';
    out += s.label;
    if (!s.note.empty()) out += " [" + s.note + "]";
    if (s.object) out += " : " + describe(*s.object);
    out += '\n';
    if (s.sub) s.sub->serialize_into(out, indent + 1);
  }
}

std::string Trace::serialize() const {
  std::string out;
  serialize_into(out, 0);
  return out;
}

bool PropositionResult::has(const std::string& name) const {
  return std::any_of(objects.begin(), objects.end(), [&](const auto& kv) { return kv.first == name; });
}

const Object& PropositionResult::get(const std::string& name) const {
  for (const auto& [k, v] : objects) {
    if (k == name) return v;
  }
  throw std::out_of_range(id + " has no output named '" + name + "'");
}

namespace {

template <class T>
const T& typed(const PropositionResult& r, const std::string& name) {
  const Object& o = r.get(name);
  if (const T* v = std::get_if<T>(&o)) return *v;
  throw std::out_of_range(r.id + " output '" + name + "' is a " + type_name(o));
}

}  // namespace

const Point& PropositionResult::point(const std::string& name) const { return typed<Point>(*this, name); }
const Figure& PropositionResult::figure(const std::string& name) const { return typed<Figure>(*this, name); }
const Line& PropositionResult::line(const std::string& name) const { return typed<Line>(*this, name); }
const Angle& PropositionResult::angle(const std::string& name) const { return typed<Angle>(*this, name); }
const Ray& PropositionResult::ray(const std::string& name) const { return typed<Ray>(*this, name); }
const Segment& PropositionResult::segment(const std::string& name) const { return typed<Segment>(*this, name); }

std::string PropositionResult::report() const {
  std::string out;
  for (const auto& c : verification) {
    out += c.text + " | " + (c.pass ? "PASS" : "FAIL") + " | " + c.residual + "\n";
  }
  return out;
}

std::string residual_text(const Constructible& r) {
  if (r.is_zero()) return "0";
  if (r.tree_size(65) <= 64) return r.serialize();
  return "~" + r.approx(12);
}

}  // namespace euclid::elements
