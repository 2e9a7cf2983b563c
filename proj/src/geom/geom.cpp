#include "euclid/geom/geom.hpp"

#include <algorithm>

#include "euclid/error.hpp"

namespace euclid::geom {

const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }

Constructible dot(const Vec& u, const Vec& v) { return u.x * v.x + u.y * v.y; }
Constructible cross(const Vec& u, const Vec& v) { return u.x * v.y - u.y * v.x; }
Constructible norm2(const Vec& u) { return dot(u, u); }
Vec perp(const Vec& u) { return {-u.y, u.x}; }
Constructible dist2(const Point& a, const Point& b) { return norm2(b - a); }
Point midpoint(const Point& a, const Point& b) {
  Constructible half = Constructible::ratio(1, 2);
  return {half * (a.x + b.x), half * (a.y + b.y)};
}
Point lerp(const Point& a, const Point& b, const Constructible& t) { return a + t * (b - a); }

bool point_less(const Point& a, const Point& b) {
  Sign sx = (a.x - b.x).sign();
  if (sx != Sign::Zero) return sx == Sign::Negative;
  return (a.y - b.y).is_negative();
}

Sign orientation(const Point& a, const Point& b, const Point& c) { return cross(b - a, c - a).sign(); }

std::string to_string(const Point& p) { return "(" + p.x.serialize() + ", " + p.y.serialize() + ")"; }

std::string approx_string(const Point& p, int digits) {
  return "(" + p.x.approx(digits) + ", " + p.y.approx(digits) + ")";
}

// ---------------------------------------------------------------- types

Segment::Segment(Point a, Point b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ == b_) throw DegenerateInput("segment endpoints coincide at " + approx_string(a_));
}

Line::Line(Point p, Point q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ == q_) throw DegenerateInput("line through a single point " + approx_string(p_));
}

bool Line::incident(const Point& x) const { return orientation(p_, q_, x) == Sign::Zero; }

std::optional<Side> Line::side_of(const Point& x) const {
  switch (orientation(p_, q_, x)) {
    case Sign::Positive: return Side::Left;
    case Sign::Negative: return Side::Right;
    case Sign::Zero: break;
  }
  return std::nullopt;
}

Ray::Ray(Point origin, Point through) : origin_(std::move(origin)), through_(std::move(through)) {
  if (origin_ == through_) throw DegenerateInput("ray with coincident origin and through point " + approx_string(origin_));
}

bool Ray::contains(const Point& x) const {
  Vec w = x - origin_;
  return cross(direction(), w).is_zero() && !dot(direction(), w).is_negative();
}

Circle::Circle(Point center, Point through) : center_(std::move(center)), through_(std::move(through)) {
  if (center_ == through_) throw DegenerateInput("circle of zero radius at " + approx_string(center_));
  radius2_ = dist2(center_, through_);
}

Circle Circle::with_radius2(Point center, Constructible radius2) {
  if (!radius2.is_positive()) throw DegenerateInput("circle radius must be positive");
  Circle c;
  c.through_ = Point(center.x + sqrt_nonneg(radius2), center.y);
  c.center_ = std::move(center);
  c.radius2_ = std::move(radius2);
  return c;
}

Angle::Angle(Point vertex, Point arm1, Point arm2)
    : vertex_(std::move(vertex)), arm1_(std::move(arm1)), arm2_(std::move(arm2)) {
  if (arm1_ == vertex_ || arm2_ == vertex_) throw DegenerateInput("angle arm point coincides with its vertex");
  if (orientation(vertex_, arm1_, arm2_) == Sign::Zero) {
    throw DegenerateInput("angle arms lie in a straight line");
  }
}

Figure::Figure(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) throw DegenerateInput("a figure needs at least three vertices");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] == vertices_[(i + 1) % vertices_.size()]) {
      throw DegenerateInput("consecutive figure vertices coincide at " + approx_string(vertices_[i]));
    }
  }
}

// ---------------------------------------------------------------- postulates

Line join(const Point& p, const Point& q) { return Line(p, q); }
Segment join_segment(const Point& p, const Point& q) { return Segment(p, q); }

Ray extend(const Segment& s, End beyond) {
  return beyond == End::B ? Ray(s.a(), s.b()) : Ray(s.b(), s.a());
}

Circle circle(const Point& center, const Point& distance_to) { return Circle(center, distance_to); }

// ---------------------------------------------------------------- intersections

LineMeet intersect_lines(const Line& l1, const Line& l2) {
  Vec d1 = l1.direction();
  Vec d2 = l2.direction();
  Constructible denom = cross(d1, d2);
  if (denom.is_zero()) {
    if (l1.incident(l2.p())) return {LineMeet::Kind::Coincident, std::nullopt};
    return {LineMeet::Kind::NoIntersection, std::nullopt};
  }
  Constructible t = cross(l2.p() - l1.p(), d2) / denom;
  return {LineMeet::Kind::Point, l1.p() + t * d1};
}

namespace {

void canonical_order(std::vector<Point>& pts) {
  if (pts.size() == 2 && point_less(pts[1], pts[0])) std::swap(pts[0], pts[1]);
}

}  // namespace

std::vector<Point> intersect_line_circle(const Line& l, const Circle& c) {
  Vec v = l.direction();
  Vec w = l.p() - c.center();
  Constructible vv = norm2(v);
  Constructible vw = dot(v, w);
  Constructible disc = vw * vw - vv * (norm2(w) - c.radius2());
  switch (disc.sign()) {
    case Sign::Negative: return {};
    case Sign::Zero: return {l.p() + (-vw / vv) * v};
    case Sign::Positive: break;
  }
  Constructible root = sqrt_nonneg(disc);
  std::vector<Point> pts{l.p() + ((-vw - root) / vv) * v, l.p() + ((-vw + root) / vv) * v};
  canonical_order(pts);
  return pts;
}

std::vector<Point> intersect_circles(const Circle& c1, const Circle& c2) {
  Vec d = c2.center() - c1.center();
  Constructible dd = norm2(d);
  if (dd.is_zero()) {
    if (c1.radius2() == c2.radius2()) throw Coincident("the two circles are identical");
    return {};
  }
  // Foot of the common chord: c1 + a d; half-chord: sqrt(h2) |d|.
  Constructible a = (dd + c1.radius2() - c2.radius2()) / (2 * dd);
  Constructible h2 = c1.radius2() / dd - a * a;
  Point foot = c1.center() + a * d;
  switch (h2.sign()) {
    case Sign::Negative: return {};
    case Sign::Zero: return {foot};
    case Sign::Positive: break;
  }
  Vec off = sqrt_nonneg(h2) * perp(d);
  std::vector<Point> pts{foot - off, foot + off};
  canonical_order(pts);
  return pts;
}

// ---------------------------------------------------------------- predicates

bool segment_eq(const Segment& s1, const Segment& s2) { return s1.length2() == s2.length2(); }

namespace {

// cos(a1) vs cos(a2): returns sign(cos a1 - cos a2) without radicals.
Sign compare_cos(const Angle& a1, const Angle& a2) {
  Constructible d1 = dot(a1.u(), a1.v());
  Constructible d2 = dot(a2.u(), a2.v());
  Sign s1 = d1.sign();
  Sign s2 = d2.sign();
  if (s1 != s2) return to_int(s1) > to_int(s2) ? Sign::Positive : Sign::Negative;
  if (s1 == Sign::Zero) return Sign::Zero;
  Constructible n1 = norm2(a1.u()) * norm2(a1.v());
  Constructible n2 = norm2(a2.u()) * norm2(a2.v());
  // |cos a1| vs |cos a2| through squares, then restore the common sign.
  Sign mag = (d1 * d1 * n2 - d2 * d2 * n1).sign();
  return s1 == Sign::Positive ? mag : -mag;
}

bool segments_meet(const Point& a, const Point& b, const Point& c, const Point& d) {
  int o1 = to_int(orientation(a, b, c));
  int o2 = to_int(orientation(a, b, d));
  int o3 = to_int(orientation(c, d, a));
  int o4 = to_int(orientation(c, d, b));
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  auto on_closed = [](const Point& p, const Point& q, const Point& x) {
    return orientation(p, q, x) == Sign::Zero && !dot(x - p, q - x).is_negative();
  };
  return on_closed(a, b, c) || on_closed(a, b, d) || on_closed(c, d, a) || on_closed(c, d, b);
}

}  // namespace

bool angle_eq(const Angle& a1, const Angle& a2) { return compare_cos(a1, a2) == Sign::Zero; }

bool angle_less(const Angle& a1, const Angle& a2) { return compare_cos(a1, a2) == Sign::Positive; }

bool is_right(const Angle& a) { return dot(a.u(), a.v()).is_zero(); }

bool parallel(const Line& l1, const Line& l2) { return cross(l1.direction(), l2.direction()).is_zero(); }

bool coincident(const Line& l1, const Line& l2) { return parallel(l1, l2) && l1.incident(l2.p()); }

bool collinear(const Point& a, const Point& b, const Point& c) { return orientation(a, b, c) == Sign::Zero; }

bool strictly_between(const Point& a, const Point& b, const Point& x) {
  return collinear(a, b, x) && dot(x - a, b - x).is_positive();
}

Constructible signed_area(const Figure& f) {
  const auto& v = f.vertices();
  Constructible twice;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& p = v[i];
    const Point& q = v[(i + 1) % v.size()];
    twice += p.x * q.y - q.x * p.y;
  }
  return Constructible::ratio(1, 2) * twice;
}

Constructible content(const Figure& f) { return abs(signed_area(f)); }

bool is_simple(const Figure& f) {
  const auto& v = f.vertices();
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    const Point& c = v[(i + 2) % n];
    // Adjacent edges may only share their common vertex.
    if (collinear(a, b, c) && dot(a - b, c - b).is_positive()) return false;
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the closing edge
      if (segments_meet(a, b, v[j], v[(j + 1) % n])) return false;
    }
  }
  return true;
}

AngleMeasure AngleMeasure::of(const Angle& a) {
  Constructible len = sqrt_nonneg(norm2(a.u()) * norm2(a.v()));
  return {dot(a.u(), a.v()) / len, abs(cross(a.u(), a.v())) / len};
}

AngleMeasure AngleMeasure::two_right() { return {Constructible(-1), Constructible(0)}; }

AngleMeasure operator+(const AngleMeasure& a, const AngleMeasure& b) {
  return {a.c * b.c - a.s * b.s, a.s * b.c + a.c * b.s};
}

// ---------------------------------------------------------------- motions

Isometry Isometry::rotation(Constructible c, Constructible s) {
  if (!(c * c + s * s - 1).is_zero()) throw DegenerateInput("rotation entries must satisfy c^2 + s^2 = 1");
  Isometry m;
  m.c = std::move(c);
  m.s = std::move(s);
  return m;
}

Isometry Isometry::translation(const Vec& t) {
  Isometry m;
  m.tx = t.x;
  m.ty = t.y;
  return m;
}

bool Isometry::is_identity() const {
  return !reflect && c == Constructible(1) && s.is_zero() && tx.is_zero() && ty.is_zero();
}

namespace {

Point rotate(const Constructible& c, const Constructible& s, const Point& p) {
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

}  // namespace

Point apply_isometry(const Isometry& m, const Point& p) {
  Point q = m.reflect ? Point(p.x, -p.y) : p;
  return rotate(m.c, m.s, q) + Point(m.tx, m.ty);
}

Isometry compose(const Isometry& outer, const Isometry& inner) {
  // outer(inner(p)) = R2 s2(R1 s1(p) + t1) + t2 = R2 s2(R1) s2 s1(p) + R2 s2(t1) + t2.
  Isometry m;
  Constructible s1 = outer.reflect ? -inner.s : inner.s;
  m.c = outer.c * inner.c - outer.s * s1;
  m.s = outer.s * inner.c + outer.c * s1;
  Point t1 = outer.reflect ? Point(inner.tx, -inner.ty) : Point(inner.tx, inner.ty);
  Point t = rotate(outer.c, outer.s, t1) + Point(outer.tx, outer.ty);
  m.tx = t.x;
  m.ty = t.y;
  m.reflect = outer.reflect != inner.reflect;
  return m;
}

Isometry superpose(const Segment& from, const Segment& to, Side side) {
  if (!segment_eq(from, to)) throw SuperpositionMismatch("segments of unequal length cannot be superposed");
  Vec u = from.b() - from.a();
  Vec v = to.b() - to.a();
  Constructible uu = norm2(u);
  Isometry m;
  if (side == Side::Left) {
    // c + i s = v conj(u) / |u|^2
    m.c = (v.x * u.x + v.y * u.y) / uu;
    m.s = (v.y * u.x - v.x * u.y) / uu;
  } else {
    // c + i s = v u / |u|^2, applied after conjugation
    m.reflect = true;
    m.c = (v.x * u.x - v.y * u.y) / uu;
    m.s = (v.x * u.y + v.y * u.x) / uu;
  }
  Point moved = apply_isometry(m, from.a());
  m.tx = to.a().x - moved.x;
  m.ty = to.a().y - moved.y;
  return m;
}

Point point_reflect(const Point& p, const Point& through) { return 2 * through - p; }

}  // namespace euclid::geom
