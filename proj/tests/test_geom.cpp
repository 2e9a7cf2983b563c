#include <doctest.h>

#include <random>

#include "euclid/error.hpp"
#include "euclid/geom/geom.hpp"

using namespace euclid;
using namespace euclid::geom;

namespace {

Constructible q(long n, long d = 1) { return Constructible::ratio(n, d); }
Point P(long x, long y) { return {q(x), q(y)}; }

Constructible rnd(std::mt19937_64& rng) {
  return q(static_cast<long>(rng() % 129) - 64, static_cast<long>(rng() % 8) + 1);
}
Point rnd_point(std::mt19937_64& rng) { return {rnd(rng), rnd(rng)}; }

}  // namespace

TEST_CASE("join and incidence") {
  CHECK(join(P(0, 0), P(1, 0)).incident(P(5, 0)));
  CHECK_THROWS_AS(join(P(0, 0), P(0, 0)), DegenerateInput);
  // det[(2,3)-(1,1), (3,5)-(1,1)] = 1*4 - 2*2 = 0
  CHECK(join(P(1, 1), P(2, 3)).incident(P(3, 5)));
  CHECK_FALSE(join(P(1, 1), P(2, 3)).incident(P(3, 4)));
}

TEST_CASE("extend") {
  Segment s(P(0, 0), P(1, 0));
  CHECK(extend(s, End::B).contains(P(2, 0)));
  CHECK_FALSE(extend(s, End::B).contains(P(-1, 0)));
  CHECK(extend(s, End::A).contains(P(-1, 0)));
  CHECK(extend(Segment(P(0, 0), P(1, 1)), End::B).contains(P(3, 3)));
}

TEST_CASE("circle") {
  CHECK(circle(P(0, 0), P(1, 0)).radius() == q(1));
  CHECK(circle(P(0, 0), P(1, 1)).radius2() == q(2));
  CHECK_THROWS_AS(circle(P(0, 0), P(0, 0)), DegenerateInput);
}

TEST_CASE("intersect_lines") {
  auto m = intersect_lines(join(P(0, 0), P(1, 0)), join(P(0, 0), P(0, 1)));
  REQUIRE(m.kind == LineMeet::Kind::Point);
  CHECK(*m.point == P(0, 0));
  CHECK(intersect_lines(join(P(0, 0), P(1, 0)), join(P(0, 1), P(1, 1))).kind == LineMeet::Kind::NoIntersection);
  CHECK(intersect_lines(join(P(0, 0), P(1, 0)), join(P(3, 0), P(7, 0))).kind == LineMeet::Kind::Coincident);
  // x = y and y = 2 - 2x: x = 2/3.
  auto k = intersect_lines(join(P(0, 0), P(1, 1)), join(P(0, 2), P(1, 0)));
  CHECK(*k.point == Point(q(2, 3), q(2, 3)));
}

TEST_CASE("intersect_line_circle") {
  Circle unit = circle(P(0, 0), P(1, 0));
  auto two = intersect_line_circle(join(P(0, 0), P(1, 0)), unit);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == P(-1, 0));
  CHECK(two[1] == P(1, 0));
  auto one = intersect_line_circle(join(P(0, 1), P(1, 1)), unit);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == P(0, 1));
  CHECK(intersect_line_circle(join(P(0, 2), P(1, 2)), unit).empty());
}

TEST_CASE("intersect_circles") {
  // Radical line x = 1/2, then y^2 = 1 - 1/4.
  auto pts = intersect_circles(circle(P(0, 0), P(1, 0)), circle(P(1, 0), P(2, 0)));
  REQUIRE(pts.size() == 2);
  Constructible h = sqrt_nonneg(q(3, 4));
  CHECK(pts[0] == Point(q(1, 2), -h));
  CHECK(pts[1] == Point(q(1, 2), h));
  auto touch = intersect_circles(circle(P(0, 0), P(1, 0)), circle(P(2, 0), P(3, 0)));
  REQUIRE(touch.size() == 1);
  CHECK(touch[0] == P(1, 0));
  CHECK(intersect_circles(circle(P(0, 0), P(1, 0)), circle(P(3, 0), P(4, 0))).empty());
  CHECK_THROWS_AS(intersect_circles(circle(P(0, 0), P(1, 0)), circle(P(0, 0), P(0, 1))), Coincident);
  CHECK(intersect_circles(circle(P(0, 0), P(1, 0)), circle(P(0, 0), P(0, 2))).empty());
}

TEST_CASE("segment_eq") {
  CHECK(segment_eq(Segment(P(0, 0), P(1, 0)), Segment(P(5, 5), P(5, 6))));
  CHECK(segment_eq(Segment(P(0, 0), P(1, 1)), Segment(P(0, 0), Point(sqrt_nonneg(q(2)), q(0)))));
  CHECK_FALSE(segment_eq(Segment(P(0, 0), P(1, 0)), Segment(P(0, 0), P(2, 0))));
}

TEST_CASE("angles") {
  Angle right1(P(0, 0), P(1, 0), P(0, 1));
  Angle right2(P(0, 0), P(1, 1), P(-1, 1));
  Angle half_right(P(0, 0), P(1, 0), P(1, 1));
  CHECK(angle_eq(right1, right2));
  CHECK_FALSE(angle_eq(right1, half_right));
  CHECK(is_right(right1));
  CHECK_FALSE(is_right(half_right));
  CHECK_THROWS_AS(Angle(P(0, 0), P(1, 0), P(2, 0)), DegenerateInput);
  Point apex(q(1, 2), sqrt_nonneg(q(3, 4)));
  CHECK(angle_eq(Angle(P(0, 0), P(1, 0), apex), Angle(P(1, 0), apex, P(0, 0))));
  CHECK(angle_less(half_right, right1));
  CHECK(angle_less(right1, Angle(P(0, 0), P(1, 0), P(-1, 1))));
  CHECK_FALSE(angle_less(right1, right2));
}

TEST_CASE("parallel") {
  CHECK(parallel(join(P(0, 0), P(1, 0)), join(P(0, 1), P(1, 1))));
  CHECK_FALSE(parallel(join(P(0, 0), P(1, 0)), join(P(0, 0), P(0, 1))));
  CHECK(parallel(join(P(0, 0), P(1, 1)), join(P(0, 1), P(1, 2))));
}

TEST_CASE("signed_area") {
  CHECK(signed_area(Figure({P(0, 0), P(4, 0), P(0, 3)})) == q(6));
  CHECK(signed_area(Figure({P(0, 0), P(3, 0), P(0, 4)})) == q(6));
  CHECK(signed_area(Figure({P(0, 0), P(5, 0), P(0, 2)})) == q(5));
  CHECK(signed_area(Figure({P(0, 0), P(0, 1), P(1, 1), P(1, 0)})) == q(-1));
}

TEST_CASE("is_simple") {
  CHECK(is_simple(Figure({P(0, 0), P(2, 0), P(2, 2), P(0, 2)})));
  CHECK_FALSE(is_simple(Figure({P(0, 0), P(2, 2), P(2, 0), P(0, 2)})));
  CHECK(is_simple(Figure({P(0, 0), P(4, 0), P(4, 4), P(2, 1), P(0, 4)})));
  CHECK_FALSE(is_simple(Figure({P(0, 0), P(2, 0), P(1, 0)})));
}

TEST_CASE("superpose and isometries") {
  Isometry quarter = superpose(Segment(P(0, 0), P(1, 0)), Segment(P(0, 0), P(0, 1)));
  CHECK(quarter.c == q(0));
  CHECK(quarter.s == q(1));
  CHECK(apply_isometry(quarter, P(1, 0)) == P(0, 1));
  CHECK(superpose(Segment(P(2, 3), P(5, 7)), Segment(P(2, 3), P(5, 7))).is_identity());
  Isometry half = compose(quarter, quarter);
  CHECK(apply_isometry(half, P(1, 0)) == P(-1, 0));
  CHECK(apply_isometry(half, P(3, 2)) == P(-3, -2));

  Segment from(P(0, 0), P(2, 0));
  Segment to(P(1, 1), P(1, 3));
  for (Side side : {Side::Left, Side::Right}) {
    Isometry m = superpose(from, to, side);
    CHECK(apply_isometry(m, from.a()) == to.a());
    CHECK(apply_isometry(m, from.b()) == to.b());
    Point image = apply_isometry(m, P(1, 1));
    CHECK(join(to.a(), to.b()).side_of(image) == side);
    std::vector<Point> pts{P(0, 0), P(2, 0), P(1, 1), P(-3, 5), P(7, -2)};
    for (const auto& a : pts) {
      for (const auto& b : pts) CHECK(dist2(a, b) == dist2(apply_isometry(m, a), apply_isometry(m, b)));
    }
  }
  CHECK_THROWS_AS(superpose(Segment(P(0, 0), P(1, 0)), Segment(P(0, 0), P(2, 0))), SuperpositionMismatch);
}

TEST_CASE("point_reflect") {
  CHECK(point_reflect(P(0, 1), P(0, 0)) == P(0, -1));
  CHECK(point_reflect(P(4, 4), P(4, 4)) == P(4, 4));
  CHECK(point_reflect(P(2, 3), P(1, 1)) == P(0, -1));
}

TEST_CASE("random properties") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    Point a = rnd_point(rng), b = rnd_point(rng), c = rnd_point(rng), d = rnd_point(rng);
    if (a == b || c == d) continue;
    Line l1(a, b), l2(c, d);
    auto m = intersect_lines(l1, l2);
    if (parallel(l1, l2)) {
      CHECK(m.kind != LineMeet::Kind::Point);
    } else {
      CHECK(l1.incident(*m.point));
      CHECK(l2.incident(*m.point));
    }
    if (a == c) continue;
    Circle c1(a, b), c2(c, d);
    if (c1.center() == c2.center()) continue;
    for (const auto& p : intersect_circles(c1, c2)) {
      CHECK(c1.on(p));
      CHECK(c2.on(p));
    }
    for (const auto& p : intersect_line_circle(l2, c1)) {
      CHECK(c1.on(p));
      CHECK(l2.incident(p));
    }
    // Area invariance under a motion taking ab to an equal segment with radical coordinates.
    if (collinear(a, b, c)) continue;
    Figure tri({a, b, c});
    Constructible len = sqrt_nonneg(dist2(a, b));
    Isometry mv = superpose(Segment(a, b), Segment(d, d + Point(len, q(0))), i % 2 ? Side::Left : Side::Right);
    Figure moved({apply_isometry(mv, a), apply_isometry(mv, b), apply_isometry(mv, c)});
    CHECK(content(tri) == content(moved));
    CHECK(signed_area(Figure({c, b, a})) == -signed_area(tri));
    Angle x(a, b, c), y(b, c, a), z(c, a, b);
    CHECK(angle_eq(x, x));
    if (angle_eq(x, y) && angle_eq(y, z)) CHECK(angle_eq(x, z));
    // Angle sum of a triangle is two right angles.
    CHECK(AngleMeasure::of(x) + AngleMeasure::of(y) + AngleMeasure::of(z) == AngleMeasure::two_right());
  }
}
