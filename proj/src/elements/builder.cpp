#include "builder.hpp"

namespace euclid::elements::detail {

using geom::dot;
using geom::norm2;

void Builder::given(const std::string& name, Object o) { result_.givens.emplace_back(name, std::move(o)); }

Point Builder::letter(const std::string& name, const Point& p) {
  result_.labels.emplace_back(name, p);
  return p;
}

void Builder::add(StepKind kind, const std::string& label, const std::string& note, std::optional<Object> o) {
  Step s;
  s.kind = kind;
  s.label = label;
  s.note = note;
  s.object = std::move(o);
  result_.trace.add(std::move(s));
}

Segment Builder::join(const std::string& name, const Point& a, const Point& b) {
  Segment s = geom::join_segment(a, b);
  add(StepKind::Join, name, "Postulate 1", s);
  return s;
}

Line Builder::join_line(const std::string& name, const Point& a, const Point& b) {
  Line l = geom::join(a, b);
  add(StepKind::Join, name, "Postulate 1", l);
  return l;
}

Ray Builder::produce(const std::string& name, const Point& from, const Point& through) {
  Ray r = geom::extend(Segment(from, through), End::B);
  add(StepKind::Extend, name, "Postulate 2", r);
  return r;
}

Circle Builder::circle(const std::string& name, const Point& center, const Point& through) {
  Circle c = geom::circle(center, through);
  add(StepKind::Circle, name, "Postulate 3", c);
  return c;
}

Circle Builder::carried_circle(const std::string& name, const Point& center, const Constructible& radius2,
                               const std::string& carried_from) {
  Circle c = Circle::with_radius2(center, radius2);
  add(StepKind::Circle, name, "Postulate 3, distance " + carried_from, c);
  return c;
}

Point Builder::pick(const std::string& name, const std::vector<Point>& candidates, const std::string& selector,
                    const std::function<bool(const Point&)>& accept) {
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (accept(candidates[i])) {
      add(StepKind::Pick, name, selector + " (" + std::to_string(i + 1) + " of " + std::to_string(candidates.size()) + ")",
          candidates[i]);
      letter(name, candidates[i]);
      return candidates[i];
    }
  }
  throw NoSuchIntersection(result_.id + ": no intersection point " + name + " satisfies '" + selector + "'");
}

Point Builder::pick_index(const std::string& name, const std::vector<Point>& candidates, std::size_t index) {
  static const char* const kOrdinal[] = {"first", "second"};
  std::string selector = index < 2 ? kOrdinal[index] : std::to_string(index + 1);
  if (index >= candidates.size()) {
    throw NoSuchIntersection(result_.id + ": no " + selector + " intersection for " + name);
  }
  add(StepKind::Pick, name, selector + " (" + std::to_string(index + 1) + " of " + std::to_string(candidates.size()) + ")",
      candidates[index]);
  letter(name, candidates[index]);
  return candidates[index];
}

Point Builder::pick_side(const std::string& name, const std::vector<Point>& candidates, const Line& l, Side side) {
  return pick(name, candidates, std::string("side ") + geom::to_string(side),
              [&](const Point& p) { return l.side_of(p) == side; });
}

Point Builder::pick_on_ray(const std::string& name, const std::vector<Point>& candidates, const Ray& r) {
  return pick(name, candidates, "on ray",
              [&](const Point& p) { return !geom::dot(r.direction(), p - r.origin()).is_negative(); });
}

Point Builder::meet(const std::string& name, const Line& l1, const Line& l2) {
  geom::LineMeet m = geom::intersect_lines(l1, l2);
  if (m.kind != geom::LineMeet::Kind::Point) {
    throw NoSuchIntersection(result_.id + ": the lines meeting at " + name + " do not meet");
  }
  add(StepKind::Pick, name, "lines meet", *m.point);
  letter(name, *m.point);
  return *m.point;
}

Isometry Builder::superpose(const std::string& name, const Segment& from, const Segment& to, Side side) {
  Isometry m = geom::superpose(from, to, side);
  add(StepKind::Superpose, name, std::string("applied, side ") + geom::to_string(side), to);
  return m;
}

const PropositionResult& Builder::sub(PropositionResult r) {
  auto trace = std::make_shared<Trace>(r.trace);
  Step s;
  s.kind = StepKind::Sub;
  s.label = r.id;
  s.note = r.id.substr(0, r.id.find('.', 2));
  s.sub = trace;
  result_.trace.add(std::move(s));
  subs_.push_back(std::move(r));
  return subs_.back();
}

Point Builder::cut(const std::string& name, const Ray& r, const Constructible& length2, const std::string& carried_from) {
  Builder inner("I.3");
  Circle c = inner.carried_circle("circle " + name, r.origin(), length2, carried_from);
  Point hit = inner.pick_on_ray(name, geom::intersect_line_circle(r.line(), c), r);
  Point p = settle(name, hit, along(r, length2));
  PropositionResult done = inner.finish();
  Step s;
  s.kind = StepKind::Sub;
  s.label = name;
  s.note = "I.3";
  s.sub = std::make_shared<Trace>(std::move(done.trace));
  result_.trace.add(std::move(s));
  letter(name, p);
  return p;
}

Point Builder::settle(const std::string& name, const Point& constructed, const Point& closed) {
  if (!(constructed == closed)) {
    throw PostconditionFailed(result_.id + ": constructed point " + name + " " + geom::approx_string(constructed) +
                              " differs from its closed form " + geom::approx_string(closed));
  }
  for (auto& [k, v] : result_.labels) {
    if (k == name) v = closed;
  }
  return closed;
}

void Builder::check_zero(const std::string& text, const Constructible& residual) {
  bool ok = residual.is_zero();
  result_.verification.push_back({text, ok, residual_text(residual)});
  if (!ok) throw PostconditionFailed(result_.id + ": " + text + " (residual " + residual_text(residual) + ")");
}

void Builder::check_positive(const std::string& text, const Constructible& value) {
  bool ok = value.is_positive();
  result_.verification.push_back({text, ok, residual_text(value)});
  if (!ok) throw PostconditionFailed(result_.id + ": " + text + " (value " + residual_text(value) + ")");
}

void Builder::check(const std::string& text, bool ok, const std::string& detail) {
  result_.verification.push_back({text, ok, detail});
  if (!ok) throw PostconditionFailed(result_.id + ": " + text);
}

void Builder::record(const std::string& text, bool ok, const std::string& detail) {
  result_.verification.push_back({text, ok, detail});
}

void Builder::output(const std::string& name, Object o) { result_.objects.emplace_back(name, std::move(o)); }

Constructible half() { return Constructible::ratio(1, 2); }

Constructible ratio_of(const Constructible& num2, const Constructible& den2) { return sqrt_nonneg(num2 / den2); }

Point along(const Ray& r, const Constructible& length2) {
  return r.origin() + ratio_of(length2, norm2(r.direction())) * r.direction();
}

Vec rotated_like(const Vec& u, const Angle& model, Side side) {
  Constructible c = dot(model.u(), model.v());
  Constructible s = abs(geom::cross(model.u(), model.v()));
  if (side == Side::Right) s = -s;
  return c * u + s * geom::perp(u);
}

Side side_of(const Line& l, const Point& p) {
  auto s = l.side_of(p);
  if (!s) throw PreconditionViolated("point " + geom::approx_string(p) + " lies on the line");
  return *s;
}

}  // namespace euclid::elements::detail
