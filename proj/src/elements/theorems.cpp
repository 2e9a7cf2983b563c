// Theorem validators: the conclusions of the Book I theorems evaluated
// exactly on concrete figures.

#include <algorithm>

#include "builder.hpp"
#include "euclid/elements/propositions.hpp"

namespace euclid::elements {

using namespace detail;
using geom::AngleMeasure;
using geom::content;
using geom::dist2;

namespace {

struct Context {
  std::string id;
  const Bundle& bundle;

  [[noreturn]] void fail(const std::string& what) const { throw HypothesisNotSatisfied(id + ": " + what); }

  void require(bool ok, const std::string& what) const {
    if (!ok) fail(what);
  }

  template <class T>
  T get(const std::string& name) const {
    for (const auto& [k, v] : bundle) {
      if (k != name) continue;
      if (const T* x = std::get_if<T>(&v)) return *x;
      fail("'" + name + "' is a " + type_name(v));
    }
    fail("missing '" + name + "'");
  }

  Figure triangle(const std::string& name) const {
    Figure f = get<Figure>(name);
    require(f.size() == 3 && !geom::collinear(f[0], f[1], f[2]), "'" + name + "' is not a triangle");
    return f;
  }

  Figure parallelogram(const std::string& name) const {
    Figure f = get<Figure>(name);
    require(f.size() == 4 && f[0] + f[2] == f[1] + f[3] && !geom::collinear(f[0], f[1], f[2]),
            "'" + name + "' is not a parallelogram");
    return f;
  }
};

void zero(Builder& b, const std::string& text, const Constructible& r) { b.record(text, r.is_zero(), residual_text(r)); }

void angles_equal(Builder& b, const std::string& text, const Angle& x, const Angle& y) {
  b.record(text, geom::angle_eq(x, y));
}

bool two_right(const Angle& x, const Angle& y) {
  return AngleMeasure::of(x) + AngleMeasure::of(y) == AngleMeasure::two_right();
}

bool same_side(const Line& l, const Point& p, const Point& q) {
  auto a = l.side_of(p);
  auto b = l.side_of(q);
  return a && b && *a == *b;
}

bool opposite_sides(const Line& l, const Point& p, const Point& q) {
  auto a = l.side_of(p);
  auto b = l.side_of(q);
  return a && b && *a != *b;
}

/// Applies ABC to DEF with B on E and BC on EF, on the side of D.
void superpose_triangles(Builder& b, const Figure& abc, const Figure& def) {
  Side from = side_of(Line(abc[1], abc[2]), abc[0]);
  Side to = side_of(Line(def[1], def[2]), def[0]);
  Side s = from == Side::Left ? to : geom::opposite(to);
  Isometry m = b.superpose("ABC on DEF", Segment(abc[1], abc[2]), Segment(def[1], def[2]), s);
  b.record("A falls on D", geom::apply_isometry(m, abc[0]) == def[0]);
}

void i4(Builder& b, const Context& c) {
  Figure t1 = c.triangle("t1");
  Figure t2 = c.triangle("t2");
  const Point &A = t1[0], &B = t1[1], &C = t1[2], &D = t2[0], &E = t2[1], &F = t2[2];
  c.require(dist2(A, B) == dist2(D, E) && dist2(A, C) == dist2(D, F), "AB, AC are not equal to DE, DF");
  c.require(geom::angle_eq(Angle(A, B, C), Angle(D, E, F)), "angle BAC is not equal to angle EDF");
  zero(b, "base BC = base EF", dist2(B, C) - dist2(E, F));
  zero(b, "triangle ABC = triangle DEF", content(t1) - content(t2));
  angles_equal(b, "angle ABC = angle DEF", Angle(B, A, C), Angle(E, D, F));
  angles_equal(b, "angle ACB = angle DFE", Angle(C, A, B), Angle(F, D, E));
  Side from = side_of(Line(A, B), C);
  Side to = side_of(Line(D, E), F);
  Isometry m = b.superpose("ABC on DEF", Segment(A, B), Segment(D, E), from == Side::Left ? to : geom::opposite(to));
  b.record("C falls on F", geom::apply_isometry(m, C) == F);
}

void i7(Builder& b, const Context& c) {
  Segment base = c.get<Segment>("base");
  Point C = c.get<Point>("C");
  Point D = c.get<Point>("D");
  Line ab(base.a(), base.b());
  c.require(same_side(ab, C, D), "C and D are not on the same side of AB");
  c.require(dist2(base.a(), C) == dist2(base.a(), D) && dist2(base.b(), C) == dist2(base.b(), D),
            "AC, CB are not equal to AD, DB respectively");
  b.record("C and D are the same point", C == D);
}

void i8(Builder& b, const Context& c) {
  Figure t1 = c.triangle("t1");
  Figure t2 = c.triangle("t2");
  const Point &A = t1[0], &B = t1[1], &C = t1[2], &D = t2[0], &E = t2[1], &F = t2[2];
  c.require(dist2(A, B) == dist2(D, E) && dist2(A, C) == dist2(D, F) && dist2(B, C) == dist2(E, F),
            "the sides are not equal respectively");
  angles_equal(b, "angle BAC = angle EDF", Angle(A, B, C), Angle(D, E, F));
  angles_equal(b, "angle ABC = angle DEF", Angle(B, A, C), Angle(E, D, F));
  angles_equal(b, "angle ACB = angle DFE", Angle(C, A, B), Angle(F, D, E));
  superpose_triangles(b, t1, t2);
}

void i13(Builder& b, const Context& c) {
  Point A = c.get<Point>("A"), B = c.get<Point>("B"), C = c.get<Point>("C"), D = c.get<Point>("D");
  c.require(geom::strictly_between(C, D, B), "B is not between C and D");
  c.require(!geom::collinear(C, D, A), "AB does not stand on CD");
  b.record("angles CBA, ABD equal two right angles", two_right(Angle(B, C, A), Angle(B, A, D)));
  if (geom::angle_eq(Angle(B, C, A), Angle(B, A, D))) b.record("equal, hence right", geom::is_right(Angle(B, C, A)));
}

void i14(Builder& b, const Context& c) {
  Point A = c.get<Point>("A"), B = c.get<Point>("B"), C = c.get<Point>("C"), D = c.get<Point>("D");
  c.require(opposite_sides(Line(A, B), C, D), "C and D are not on different sides of AB");
  c.require(two_right(Angle(B, A, C), Angle(B, A, D)), "angles ABC, ABD are not equal to two right angles");
  b.record("CB, BD are in a straight line", geom::collinear(C, B, D) && geom::strictly_between(C, D, B));
}

void i15(Builder& b, const Context& c) {
  Point A = c.get<Point>("A"), B = c.get<Point>("B"), C = c.get<Point>("C"), D = c.get<Point>("D"),
        E = c.get<Point>("E");
  c.require(geom::strictly_between(A, B, E) && geom::strictly_between(C, D, E), "AB and CD do not cut at E");
  c.require(!geom::collinear(A, B, C), "AB and CD are the same line");
  angles_equal(b, "angle AEC = angle DEB", Angle(E, A, C), Angle(E, D, B));
  angles_equal(b, "angle CEB = angle AED", Angle(E, C, B), Angle(E, A, D));
}

void i16(Builder& b, const Context& c) {
  Figure t = c.triangle("t");
  const Point &A = t[0], &B = t[1], &C = t[2];
  Point D = C + (C - B);
  Angle exterior(C, A, D);
  b.record("exterior angle ACD > interior angle CBA", geom::angle_less(Angle(B, C, A), exterior));
  b.record("exterior angle ACD > interior angle BAC", geom::angle_less(Angle(A, B, C), exterior));
}

void i20(Builder& b, const Context& c) {
  Figure t = c.triangle("t");
  Constructible ab = sqrt_nonneg(dist2(t[0], t[1]));
  Constructible bc = sqrt_nonneg(dist2(t[1], t[2]));
  Constructible ca = sqrt_nonneg(dist2(t[2], t[0]));
  b.record("BA + AC > BC", ab + ca > bc, residual_text(ab + ca - bc));
  b.record("AB + BC > AC", ab + bc > ca, residual_text(ab + bc - ca));
  b.record("BC + CA > AB", bc + ca > ab, residual_text(bc + ca - ab));
}

void i26(Builder& b, const Context& c) {
  Figure t1 = c.triangle("t1");
  Figure t2 = c.triangle("t2");
  const Point &A = t1[0], &B = t1[1], &C = t1[2], &D = t2[0], &E = t2[1], &F = t2[2];
  c.require(geom::angle_eq(Angle(B, A, C), Angle(E, D, F)) && geom::angle_eq(Angle(C, A, B), Angle(F, D, E)),
            "angles ABC, BCA are not equal to DEF, EFD");
  c.require(dist2(B, C) == dist2(E, F) || dist2(A, B) == dist2(D, E), "neither BC = EF nor AB = DE");
  zero(b, "AB = DE", dist2(A, B) - dist2(D, E));
  zero(b, "AC = DF", dist2(A, C) - dist2(D, F));
  zero(b, "BC = EF", dist2(B, C) - dist2(E, F));
  angles_equal(b, "angle BAC = angle EDF", Angle(A, B, C), Angle(D, E, F));
}

struct Transversal {
  Point A, B, C, D, E, F;
};

Transversal transversal(const Context& c) {
  Transversal t{c.get<Point>("A"), c.get<Point>("B"), c.get<Point>("C"),
                c.get<Point>("D"), c.get<Point>("E"), c.get<Point>("F")};
  c.require(!(t.A == t.B) && !(t.C == t.D) && !(t.E == t.F), "coincident points");
  c.require(Line(t.A, t.B).incident(t.E) && Line(t.C, t.D).incident(t.F), "E is not on AB or F is not on CD");
  c.require(!(t.A == t.E) && !(t.B == t.E) && !(t.C == t.F) && !(t.D == t.F), "E or F coincides with an end");
  c.require(!Line(t.E, t.F).incident(t.A) && !Line(t.E, t.F).incident(t.D), "EF does not cross AB and CD");
  return t;
}

void i27(Builder& b, const Context& c) {
  Transversal t = transversal(c);
  c.require(opposite_sides(Line(t.E, t.F), t.A, t.D), "A and D are not on different sides of EF");
  c.require(geom::angle_eq(Angle(t.E, t.A, t.F), Angle(t.F, t.E, t.D)), "alternate angles AEF, EFD are not equal");
  b.record("AB is parallel to CD", geom::parallel(Line(t.A, t.B), Line(t.C, t.D)));
}

void i28(Builder& b, const Context& c) {
  Transversal t = transversal(c);
  c.require(same_side(Line(t.E, t.F), t.B, t.D), "B and D are not on the same side of EF");
  Point G = t.E + (t.E - t.F);
  bool exterior = geom::angle_eq(Angle(t.E, G, t.B), Angle(t.F, t.E, t.D));
  bool interior = two_right(Angle(t.E, t.B, t.F), Angle(t.F, t.E, t.D));
  c.require(exterior || interior, "neither GEB = EFD nor BEF, EFD equal to two right angles");
  b.record("AB is parallel to CD", geom::parallel(Line(t.A, t.B), Line(t.C, t.D)));
}

void i29(Builder& b, const Context& c) {
  Transversal t = transversal(c);
  c.require(geom::parallel(Line(t.A, t.B), Line(t.C, t.D)), "AB is not parallel to CD");
  c.require(opposite_sides(Line(t.E, t.F), t.A, t.D), "A and D are not on different sides of EF");
  Point G = t.E + (t.E - t.F);
  angles_equal(b, "alternate angles AEF = EFD", Angle(t.E, t.A, t.F), Angle(t.F, t.E, t.D));
  angles_equal(b, "exterior angle GEB = interior EFD", Angle(t.E, G, t.B), Angle(t.F, t.E, t.D));
  b.record("interior angles BEF, EFD equal two right angles", two_right(Angle(t.E, t.B, t.F), Angle(t.F, t.E, t.D)));
}

void i30(Builder& b, const Context& c) {
  Line l1 = c.get<Line>("l1"), l2 = c.get<Line>("l2"), l3 = c.get<Line>("l3");
  c.require(geom::parallel(l1, l3) && !geom::coincident(l1, l3), "l1 is not parallel to l3");
  c.require(geom::parallel(l2, l3) && !geom::coincident(l2, l3), "l2 is not parallel to l3");
  b.record("l1 is parallel to l2", geom::parallel(l1, l2));
}

void i32(Builder& b, const Context& c) {
  Figure t = c.triangle("t");
  const Point &A = t[0], &B = t[1], &C = t[2];
  Point D = C + (C - B);
  AngleMeasure sum = AngleMeasure::of(Angle(A, B, C)) + AngleMeasure::of(Angle(B, C, A)) + AngleMeasure::of(Angle(C, A, B));
  b.record("the three interior angles equal two right angles", sum == AngleMeasure::two_right());
  b.record("exterior ACD equals CAB and ABC together",
           AngleMeasure::of(Angle(C, A, D)) == AngleMeasure::of(Angle(A, B, C)) + AngleMeasure::of(Angle(B, C, A)));
}

void i33(Builder& b, const Context& c) {
  Point A = c.get<Point>("A"), B = c.get<Point>("B"), C = c.get<Point>("C"), D = c.get<Point>("D");
  c.require(!(A == B) && !(C == D) && !geom::collinear(A, B, C), "AB, CD are not two distinct lines");
  c.require(geom::parallel(Line(A, B), Line(C, D)) && dist2(A, B) == dist2(C, D), "AB, CD are not equal and parallel");
  c.require(same_side(Line(A, C), B, D), "AC, BD do not join them towards the same parts");
  zero(b, "AC = BD", dist2(A, C) - dist2(B, D));
  b.record("AC is parallel to BD", geom::parallel(Line(A, C), Line(B, D)));
}

void i34(Builder& b, const Context& c) {
  Figure p = c.parallelogram("pg");
  const Point &A = p[0], &B = p[1], &C = p[2], &D = p[3];
  zero(b, "AB = CD", dist2(A, B) - dist2(C, D));
  zero(b, "BC = DA", dist2(B, C) - dist2(D, A));
  angles_equal(b, "angle DAB = angle BCD", Angle(A, D, B), Angle(C, B, D));
  angles_equal(b, "angle ABC = angle CDA", Angle(B, A, C), Angle(D, C, A));
  zero(b, "the diameter AC bisects the area", content(Figure({A, B, C})) - content(Figure({A, C, D})));
}

void same_parallels(const Context& c, const Point& a, const Point& b, const std::vector<Point>& tops) {
  Line base(a, b);
  for (const Point& t : tops) c.require(!base.incident(t), "a vertex lies on the base line");
  Line top(tops[0], tops[0] + (b - a));
  for (const Point& t : tops) c.require(top.incident(t), "the figures are not in the same parallels");
}

void i35(Builder& b, const Context& c) {
  Figure p1 = c.parallelogram("p1");
  Figure p2 = c.parallelogram("p2");
  c.require(p1[0] == p2[0] && p1[1] == p2[1], "the parallelograms are not on the same base");
  same_parallels(c, p1[0], p1[1], {p1[2], p1[3], p2[2], p2[3]});
  zero(b, "the parallelograms are equal", content(p1) - content(p2));
}

void i36(Builder& b, const Context& c) {
  Figure p1 = c.parallelogram("p1");
  Figure p2 = c.parallelogram("p2");
  c.require(dist2(p1[0], p1[1]) == dist2(p2[0], p2[1]), "the bases are not equal");
  c.require(Line(p1[0], p1[1]).incident(p2[0]) && Line(p1[0], p1[1]).incident(p2[1]), "the bases are not in one line");
  same_parallels(c, p1[0], p1[1], {p1[2], p1[3], p2[2], p2[3]});
  zero(b, "the parallelograms are equal", content(p1) - content(p2));
}

void i37(Builder& b, const Context& c) {
  Figure t1 = c.triangle("t1");
  Figure t2 = c.triangle("t2");
  c.require(t1[0] == t2[0] && t1[1] == t2[1], "the triangles are not on the same base");
  same_parallels(c, t1[0], t1[1], {t1[2], t2[2]});
  zero(b, "the triangles are equal", content(t1) - content(t2));
}

void i38(Builder& b, const Context& c) {
  Figure t1 = c.triangle("t1");
  Figure t2 = c.triangle("t2");
  c.require(dist2(t1[0], t1[1]) == dist2(t2[0], t2[1]), "the bases are not equal");
  c.require(Line(t1[0], t1[1]).incident(t2[0]) && Line(t1[0], t1[1]).incident(t2[1]), "the bases are not in one line");
  same_parallels(c, t1[0], t1[1], {t1[2], t2[2]});
  zero(b, "the triangles are equal", content(t1) - content(t2));
}

void i41(Builder& b, const Context& c) {
  Figure p = c.parallelogram("pg");
  Figure t = c.triangle("t");
  c.require(p[0] == t[0] && p[1] == t[1], "the parallelogram and triangle are not on the same base");
  same_parallels(c, p[0], p[1], {p[2], p[3], t[2]});
  zero(b, "the parallelogram is double of the triangle", content(p) - Constructible(2) * content(t));
}

void i43(Builder& b, const Context& c) {
  Figure p = c.parallelogram("pg");
  Point k = c.get<Point>("K");
  c.require(geom::strictly_between(p[0], p[2], k), "K is not inside the diameter AC");
  auto [c1, c2] = p43_complements(p, k);
  zero(b, "the complements are equal", content(c1) - content(c2));
}

struct Theorem {
  const char* id;
  const char* schema;
  void (*run)(Builder&, const Context&);
};

const std::vector<Theorem>& catalog() {
  static const std::vector<Theorem> t{
      {"I.4", "t1: triangle ABC, t2: triangle DEF", i4},
      {"I.7", "base: segment AB, C: point, D: point", i7},
      {"I.8", "t1: triangle ABC, t2: triangle DEF", i8},
      {"I.13", "A, B, C, D: points (AB stands on CD at B)", i13},
      {"I.14", "A, B, C, D: points (BC, BD at B on AB)", i14},
      {"I.15", "A, B, C, D, E: points (AB, CD cut at E)", i15},
      {"I.16", "t: triangle ABC (BC produced)", i16},
      {"I.20", "t: triangle ABC", i20},
      {"I.26", "t1: triangle ABC, t2: triangle DEF", i26},
      {"I.27", "A, B, C, D, E, F: points (EF falls on AB, CD)", i27},
      {"I.28", "A, B, C, D, E, F: points (EF falls on AB, CD)", i28},
      {"I.29", "A, B, C, D, E, F: points (EF falls on AB, CD)", i29},
      {"I.30", "l1, l2, l3: lines", i30},
      {"I.32", "t: triangle ABC (BC produced)", i32},
      {"I.33", "A, B, C, D: points (AB, CD joined by AC, BD)", i33},
      {"I.34", "pg: parallelogram ABCD", i34},
      {"I.35", "p1, p2: parallelograms on one base", i35},
      {"I.36", "p1, p2: parallelograms on equal bases", i36},
      {"I.37", "t1, t2: triangles on one base", i37},
      {"I.38", "t1, t2: triangles on equal bases", i38},
      {"I.41", "pg: parallelogram, t: triangle on its base", i41},
      {"I.43", "pg: parallelogram ABCD, K: point on AC", i43},
  };
  return t;
}

const Theorem& find(std::string_view id) {
  for (const auto& t : catalog()) {
    if (id == t.id) return t;
  }
  throw UnknownProposition("no theorem validator for " + std::string(id));
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& t : catalog()) v.emplace_back(t.id);
    return v;
  }();
  return ids;
}

std::string theorem_schema(std::string_view id) { return find(id).schema; }

PropositionResult check_theorem(std::string_view id, const Bundle& bundle) {
  const Theorem& t = find(id);
  Builder b(t.id);
  for (const auto& [k, v] : bundle) b.given(k, v);
  t.run(b, Context{t.id, bundle});
  return b.finish();
}

}  // namespace euclid::elements
