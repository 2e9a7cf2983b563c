#pragma once

// Plane geometry over Constructible coordinates: primitives, the three
// postulate operations, intersections, exact predicates and rigid motions.
//
// Every predicate is decided by exact signs. Lengths are compared through
// their squares and angles through dot/cross products so that no radical is
// introduced where a rational comparison suffices.

#include <optional>
#include <string>
#include <vector>

#include "euclid/number/constructible.hpp"

namespace euclid::geom {

using euclid::Constructible;

/// Half-plane relative to a directed line: Left is counter-clockwise
/// ("upper" for a ray pointing along +x).
enum class Side { Left, Right };

inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }
const char* to_string(Side s);

struct Point {
  Constructible x;
  Constructible y;

  Point() = default;
  Point(Constructible x_, Constructible y_) : x(std::move(x_)), y(std::move(y_)) {}

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(const Constructible& k, const Point& p) { return {k * p.x, k * p.y}; }
  Point operator-() const { return {-x, -y}; }
};

/// Vectors share the Point representation.
using Vec = Point;

Constructible dot(const Vec& u, const Vec& v);
Constructible cross(const Vec& u, const Vec& v);
Constructible norm2(const Vec& u);
/// Quarter turn counter-clockwise: (x, y) -> (-y, x).
Vec perp(const Vec& u);
Constructible dist2(const Point& a, const Point& b);
Point midpoint(const Point& a, const Point& b);
/// a + t (b - a)
Point lerp(const Point& a, const Point& b, const Constructible& t);

/// Lexicographic (x, y) order; the canonical order of intersection results.
bool point_less(const Point& a, const Point& b);
/// Sign of cross(b - a, c - a): positive when c is left of a->b.
Sign orientation(const Point& a, const Point& b, const Point& c);

std::string to_string(const Point& p);
std::string approx_string(const Point& p, int digits = 6);

class Segment {
 public:
  /// Throws DegenerateInput when a == b.
  Segment(Point a, Point b);
  const Point& a() const { return a_; }
  const Point& b() const { return b_; }
  Constructible length2() const { return dist2(a_, b_); }
  Constructible length() const { return sqrt_nonneg(length2()); }
  Segment reversed() const { return Segment(b_, a_, Unchecked{}); }

 private:
  struct Unchecked {};
  Segment(Point a, Point b, Unchecked) : a_(std::move(a)), b_(std::move(b)) {}
  Point a_;
  Point b_;
};

class Line {
 public:
  /// Throws DegenerateInput when p == q.
  Line(Point p, Point q);
  const Point& p() const { return p_; }
  const Point& q() const { return q_; }
  Vec direction() const { return q_ - p_; }
  bool incident(const Point& x) const;
  /// Left when x lies counter-clockwise of p->q; nullopt when on the line.
  std::optional<Side> side_of(const Point& x) const;

 private:
  Point p_;
  Point q_;
};

class Ray {
 public:
  /// Throws DegenerateInput when origin == through.
  Ray(Point origin, Point through);
  const Point& origin() const { return origin_; }
  const Point& through() const { return through_; }
  Vec direction() const { return through_ - origin_; }
  Line line() const { return Line(origin_, through_); }
  /// On the closed ray.
  bool contains(const Point& x) const;

 private:
  Point origin_;
  Point through_;
};

class Circle {
 public:
  /// Circle through `through`; throws DegenerateInput when it is the centre.
  Circle(Point center, Point through);
  /// Circle of given squared radius (> 0).
  static Circle with_radius2(Point center, Constructible radius2);
  const Point& center() const { return center_; }
  const Constructible& radius2() const { return radius2_; }
  Constructible radius() const { return sqrt_nonneg(radius2_); }
  /// A point on the circle (the defining point, or the eastmost point).
  const Point& through() const { return through_; }
  bool on(const Point& x) const { return dist2(center_, x) == radius2_; }

 private:
  Circle() = default;
  Point center_;
  Point through_;
  Constructible radius2_;
};

/// Undirected proper angle at `vertex` between rays towards arm1 and arm2.
class Angle {
 public:
  /// Throws DegenerateInput when an arm point equals the vertex or the three
  /// points are collinear (zero and straight angles are not angles).
  Angle(Point vertex, Point arm1, Point arm2);
  const Point& vertex() const { return vertex_; }
  const Point& arm1() const { return arm1_; }
  const Point& arm2() const { return arm2_; }
  Vec u() const { return arm1_ - vertex_; }
  Vec v() const { return arm2_ - vertex_; }

 private:
  Point vertex_;
  Point arm1_;
  Point arm2_;
};

class Figure {
 public:
  /// At least three vertices, consecutive vertices distinct.
  explicit Figure(std::vector<Point> vertices);
  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point& operator[](std::size_t i) const { return vertices_[i % vertices_.size()]; }

 private:
  std::vector<Point> vertices_;
};

// ---------------------------------------------------------------- postulates

Line join(const Point& p, const Point& q);
Segment join_segment(const Point& p, const Point& q);

enum class End { A, B };
/// Produces s beyond the selected endpoint; the ray starts at the other one.
Ray extend(const Segment& s, End beyond);

Circle circle(const Point& center, const Point& distance_to);

// ---------------------------------------------------------------- intersections

struct LineMeet {
  enum class Kind { Point, NoIntersection, Coincident } kind;
  std::optional<Point> point;
};

LineMeet intersect_lines(const Line& l1, const Line& l2);
/// 0-2 points in canonical order.
std::vector<Point> intersect_line_circle(const Line& l, const Circle& c);
/// 0-2 points in canonical order; throws Coincident for identical circles.
std::vector<Point> intersect_circles(const Circle& c1, const Circle& c2);

// ---------------------------------------------------------------- predicates

bool segment_eq(const Segment& s1, const Segment& s2);
bool angle_eq(const Angle& a1, const Angle& a2);
/// Strict comparison of angular magnitudes: a1 < a2.
bool angle_less(const Angle& a1, const Angle& a2);
bool is_right(const Angle& a);
bool parallel(const Line& l1, const Line& l2);
bool coincident(const Line& l1, const Line& l2);
bool collinear(const Point& a, const Point& b, const Point& c);
/// Strictly between a and b on segment ab.
bool strictly_between(const Point& a, const Point& b, const Point& x);
Constructible signed_area(const Figure& f);
Constructible content(const Figure& f);
/// No two non-adjacent edges meet and adjacent edges meet only at their shared vertex.
bool is_simple(const Figure& f);

/// Angular magnitude as the unit vector (cos, sin) with sin >= 0 for proper
/// angles; sums of magnitudes compose by complex multiplication.
struct AngleMeasure {
  Constructible c;
  Constructible s;
  static AngleMeasure of(const Angle& a);
  static AngleMeasure two_right();
  friend AngleMeasure operator+(const AngleMeasure& a, const AngleMeasure& b);
  friend bool operator==(const AngleMeasure& a, const AngleMeasure& b) { return a.c == b.c && a.s == b.s; }
};

// ---------------------------------------------------------------- motions

/// p -> R sigma(p) + t, R = c + i s with c^2 + s^2 = 1, sigma = conjugation
/// when `reflect` is set.
struct Isometry {
  Constructible c{1};
  Constructible s{0};
  Constructible tx{0};
  Constructible ty{0};
  bool reflect = false;

  static Isometry identity() { return {}; }
  static Isometry rotation(Constructible c, Constructible s);
  static Isometry translation(const Vec& t);
  bool is_identity() const;
};

Point apply_isometry(const Isometry& m, const Point& p);
/// outer after inner.
Isometry compose(const Isometry& outer, const Isometry& inner);

/// The motion taking from.a -> to.a and from.b -> to.b. Points left of `from`
/// land on `side` of `to` (Left: direct motion, Right: with reflection).
/// Throws SuperpositionMismatch when the segments are unequal.
Isometry superpose(const Segment& from, const Segment& to, Side side = Side::Left);

Point point_reflect(const Point& p, const Point& through);

}  // namespace euclid::geom
