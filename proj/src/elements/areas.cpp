// Application of areas: I.42, I.43, I.44, I.45, I.46.

#include <array>

#include "builder.hpp"
#include "euclid/elements/propositions.hpp"
#include "internal.hpp"

namespace euclid::elements {

using namespace detail;
using geom::content;
using geom::cross;
using geom::dist2;
using geom::dot;
using geom::midpoint;
using geom::norm2;
using geom::perp;

namespace {

void require_triangle(const char* id, const Figure& t) {
  if (t.size() != 3) throw DegenerateInput(std::string(id) + ": the given figure is not a triangle");
  if (geom::collinear(t[0], t[1], t[2])) throw DegenerateInput(std::string(id) + ": the given triangle is degenerate");
}

bool is_parallelogram(const Figure& f) { return f.size() == 4 && f[0] + f[2] == f[1] + f[3]; }

/// F of I.42: the arm of the angle d at E (towards A) meets the parallel
/// through A to EC.
Point p42_corner(const Point& E, const Point& C, const Point& A, const Angle& d) {
  Vec base = C - E;
  Vec r = rotated_like(base, d, side_of(Line(E, C), A));
  return E + (cross(base, A - E) / cross(base, r)) * r;
}

/// The parallelogram {P, Q, Q + w, P + w} of content `area` on PQ whose
/// angle at P equals d, turned towards `side` of P->Q.
Figure applied(const Point& P, const Point& Q, const Constructible& area, const Angle& d, Side side) {
  Vec u = Q - P;
  Vec r = rotated_like(u, d, side);
  Vec w = (area / (norm2(u) * abs(cross(d.u(), d.v())))) * r;
  return Figure({P, Q, Q + w, P + w});
}

void check_parallelogram(Builder& b, const std::string& label, const Figure& f) {
  b.check(label + " has opposite sides equal and parallel", is_parallelogram(f));
}

std::string p42_id(I42Strategy s) { return s == I42Strategy::Euclid ? "I.42" : "I.42." + name(s); }

std::string p44_id(I44Strategy s) {
  switch (s) {
    case I44Strategy::EuclidSuperposition: return "I.44";
    case I44Strategy::Alnayrizi: return "I.44.alnayrizi";
    case I44Strategy::RobertOfChester: return "I.44.chester";
    case I44Strategy::Campanus: return "I.44.campanus";
    case I44Strategy::TinemueEqualCase: return "I.44.tinemue";
  }
  return "I.44";
}

}  // namespace

// ---------------------------------------------------------------- I.42

PropositionResult p42_parallelogram(const Figure& t, const Angle& d, I42Strategy strategy) {
  require_triangle("I.42", t);
  Builder b(p42_id(strategy));
  b.given("triangle", t);
  b.given("angle", d);
  Point A = b.letter("A", t[0]);
  Point B = b.letter("B", t[1]);
  Point C = b.letter(strategy == I42Strategy::Euclid ? "C" : "G", t[2]);
  const PropositionResult& half = b.sub(p10_bisect_segment(Segment(B, C)));
  Point E = b.letter("E", half.point("midpoint"));
  b.join("AE", A, E);
  Side towards_a = side_of(Line(E, C), A);
  const PropositionResult& angle = b.sub(p23_copy_angle(Ray(E, C), d, towards_a));
  Line ef(E, angle.point("X"));
  Point F;
  Point G;
  if (strategy == I42Strategy::Euclid) {
    Line ag = b.sub(p31_parallel(A, Line(E, C))).line("line");
    Line cg = b.sub(p31_parallel(C, ef)).line("line");
    F = b.settle("F", b.meet("F", ef, ag), p42_corner(E, C, A, d));
    G = b.settle("G", b.meet("G", ag, cg), F + (C - E));
  } else {
    // Both parallels by I.23: corresponding angles at G, alternate angles at A.
    b.produce("EG", E, C);
    Point beyond = C + (C - E);
    Line gh(C, b.sub(p23_copy_angle(Ray(C, beyond), Angle(E, angle.point("X"), C), towards_a)).point("X"));
    Side alternate = geom::opposite(side_of(Line(A, E), B));
    Line azh(A, b.sub(p23_copy_angle(Ray(A, E), Angle(E, B, A), alternate)).point("X"));
    F = b.settle("Z", b.meet("Z", ef, azh), p42_corner(E, C, A, d));
    G = b.settle("H", b.meet("H", gh, azh), F + (C - E));
  }
  Figure pg({F, E, C, G});
  check_parallelogram(b, "FECG", pg);
  b.check_zero("FECG equals the triangle", content(pg) - content(t));
  b.check("angle CEF equals the given angle", geom::angle_eq(Angle(E, C, F), d));
  b.output("parallelogram", pg);
  return b.finish();
}

PropositionResult p42_on_ray(const Figure& t, const Angle& d, const Ray& base, Side side, I42Strategy strategy) {
  require_triangle("I.42", t);
  Builder b(p42_id(strategy));
  b.given("triangle", t);
  b.given("angle", d);
  b.given("ray", base);
  Point O = b.letter("E", base.origin());
  Vec g = base.direction();
  Constructible a2 = dist2(t[1], t[2]);
  b.produce("EB", base.through(), O);
  Point B = b.cut("B", Ray(O, O - g), a2 / Constructible(4), "half BC");
  const PropositionResult& placed =
      b.sub(triangle_on_ray("I.22", dist2(t[0], t[1]), a2, dist2(t[0], t[2]), Ray(B, O), side));
  Point A = b.letter("A", placed.point("K"));
  Point C = b.letter("C", placed.point("G"));
  const PropositionResult& inner = b.sub(p42_parallelogram(Figure({A, B, C}), d, strategy));
  Figure pg = inner.figure("parallelogram");
  check_parallelogram(b, "result", pg);
  b.check("one side starts at the ray's origin", pg[1] == O);
  b.check("that side lies along the ray", base.contains(pg[2]));
  b.check(std::string("figure on the ") + geom::to_string(side) + " of the ray", side_of(base.line(), pg[0]) == side);
  b.check_zero("content equals the triangle", content(pg) - content(t));
  b.check("angle equals the given angle", geom::angle_eq(Angle(pg[1], pg[2], pg[0]), d));
  b.metric("placed", 1);
  b.output("parallelogram", pg);
  return b.finish();
}

// ---------------------------------------------------------------- I.43

std::pair<Figure, Figure> p43_complements(const Figure& pg, const Point& k) {
  if (!is_parallelogram(pg) || geom::collinear(pg[0], pg[1], pg[2])) {
    throw PreconditionViolated("I.43: the figure is not a parallelogram");
  }
  const Point& A = pg[0];
  const Point& B = pg[1];
  const Point& C = pg[2];
  const Point& D = pg[3];
  if (!geom::strictly_between(A, C, k)) throw PreconditionViolated("I.43: K is not inside the diameter AC");
  Constructible t = dot(k - A, C - A) / norm2(C - A);
  Point E = A + t * (B - A);
  Point F = B + t * (C - B);
  Point G = D + t * (C - D);
  Point H = A + t * (D - A);
  return {Figure({E, B, F, k}), Figure({H, k, G, D})};
}

PropositionResult p43_result(const Figure& pg, const Point& k) {
  auto [ebfk, hkgd] = p43_complements(pg, k);
  Builder b("I.43");
  b.given("ABCD", pg);
  b.given("K", k);
  Point A = b.letter("A", pg[0]);
  Point B = b.letter("B", pg[1]);
  Point C = b.letter("C", pg[2]);
  Point D = b.letter("D", pg[3]);
  Point K = b.letter("K", k);
  b.join("AC", A, C);
  Line hf = b.sub(p31_parallel(K, Line(A, B))).line("line");
  Line eg = b.sub(p31_parallel(K, Line(A, D))).line("line");
  Point E = b.settle("E", b.meet("E", eg, Line(A, B)), ebfk[0]);
  Point F = b.settle("F", b.meet("F", hf, Line(B, C)), ebfk[2]);
  Point G = b.settle("G", b.meet("G", eg, Line(D, C)), hkgd[2]);
  Point H = b.settle("H", b.meet("H", hf, Line(A, D)), hkgd[0]);
  Figure eh({A, E, K, H});
  Figure fg({K, F, C, G});
  b.check_zero("complement EBFK equals complement HKGD", content(ebfk) - content(hkgd));
  b.check_zero("the four parallelograms fill ABCD",
               content(eh) + content(fg) + content(ebfk) + content(hkgd) - content(pg));
  b.output("complement1", ebfk);
  b.output("complement2", hkgd);
  b.output("parallelogram1", eh);
  b.output("parallelogram2", fg);
  return b.finish();
}

// ---------------------------------------------------------------- I.44

namespace {

/// A parallelogram BEFG set against the given line: B its endpoint, E on
/// the line produced beyond B, G next to B off the line, F opposite B.
struct Placed {
  Point B;
  Point E;
  Point F;
  Point G;
};

/// Euclid's completion (I.31, Postulate 5, I.31, I.43) from the placed
/// parallelogram to the one on AB. `names` letters the four new points in
/// the order of Euclid's H, K, L, M.
Figure complete(Builder& b, const Point& A, const Placed& pl, const std::array<const char*, 4>& names,
                const Figure& closed) {
  Line ah = b.sub(p31_parallel(A, Line(pl.B, pl.G))).line("line");
  Point H = b.meet(names[0], ah, Line(pl.G, pl.F));
  b.produce(std::string(names[0]) + "B", H, pl.B);
  b.produce("FE", pl.F, pl.E);
  Point K = b.meet(names[1], Line(H, pl.B), Line(pl.F, pl.E));
  Line kl = b.sub(p31_parallel(K, Line(pl.F, H))).line("line");
  b.produce(std::string(names[0]) + "A", H, A);
  b.produce("GB", pl.G, pl.B);
  Point L = b.settle(names[2], b.meet(names[2], kl, Line(H, A)), closed[2]);
  Point M = b.settle(names[3], b.meet(names[3], kl, Line(pl.G, pl.B)), closed[3]);
  Figure result({pl.B, A, L, M});
  b.check_zero("complements are equal (I.43)", content(result) - content(Figure({pl.B, pl.E, pl.F, pl.G})));
  b.check("the angles at B are vertical (I.15)",
          geom::angle_eq(Angle(pl.B, A, M), Angle(pl.B, pl.E, pl.G)));
  return result;
}

Figure i44_euclid(Builder& b, const Point& P, const Point& Q, const Figure& t, const Angle& d, Side side,
                  const Figure& closed) {
  const PropositionResult& made = b.sub(p42_parallelogram(t, d));
  const Figure& pg = made.figure("parallelogram");
  b.produce("AB", Q, P);
  Point E = b.letter("E", along(Ray(P, P + (P - Q)), dist2(pg[1], pg[2])));
  Side mirror = side_of(Line(pg[1], pg[2]), pg[0]) == Side::Left ? side : geom::opposite(side);
  Isometry m = b.superpose("BEFG", Segment(pg[1], pg[2]), Segment(P, E), mirror);
  Placed pl{P, E, b.letter("F", geom::apply_isometry(m, pg[3])), b.letter("G", geom::apply_isometry(m, pg[0]))};
  return complete(b, Q, pl, {"H", "K", "L", "M"}, closed);
}

Figure i44_alnayrizi(Builder& b, const Point& P, const Point& Q, const Figure& t, const Angle& d, Side side,
                     const Figure& closed) {
  b.produce("AB", Q, P);
  Point H = b.cut("H", Ray(P, P + (P - Q)), dist2(t[1], t[2]) / Constructible(4), "half DE");
  const PropositionResult& made = b.sub(p42_on_ray(t, d, Ray(P, H), side, I42Strategy::Alnayrizi));
  const Figure& pg = made.figure("parallelogram");
  b.check("the parallelogram stands on BH", pg[2] == H);
  Placed pl{P, H, b.letter("K", pg[3]), b.letter("Θ", pg[0])};
  return complete(b, Q, pl, {"L", "M", "N", "Ξ"}, closed);
}

Figure i44_chester(Builder& b, const Point& P, const Point& Q, const Figure& t, const Angle& d, Side side,
                   const Figure& closed) {
  Ray added(P, P + (P - Q));
  b.produce("AB", Q, P);
  Point half = b.cut("E", added, dist2(t[1], t[2]) / Constructible(4), "half the base");
  Point W = b.cut("W", added, dist2(t[1], t[2]), "the base");
  Point x1 = b.sub(p23_copy_angle(Ray(P, W), Angle(t[1], t[0], t[2]), side)).point("X");
  Point x2 = b.sub(p23_copy_angle(Ray(W, P), Angle(t[2], t[0], t[1]), geom::opposite(side))).point("X");
  Point K = b.meet("K", Line(P, x1), Line(W, x2));
  b.check_zero("the triangle on the added line equals the given (I.26)", content(Figure({K, P, W})) - content(t));
  // I.42 sets the angle at the midpoint of the base, so it receives the
  // supplement of d (an arm of d produced) to leave d at the common endpoint.
  b.produce("angle", d.arm1(), d.vertex());
  Angle supplement(d.vertex(), d.vertex() + (d.vertex() - d.arm1()), d.arm2());
  const PropositionResult& made = b.sub(p42_parallelogram(Figure({K, W, P}), supplement));
  const Figure& pg = made.figure("parallelogram");
  b.check("the parallelogram stands on the added half", pg[1] == half && pg[2] == P);
  Placed pl{P, half, b.letter("F", pg[0]), b.letter("G", pg[3])};
  return complete(b, Q, pl, {"H", "L", "M", "N"}, closed);
}

Figure i44_campanus(Builder& b, const Point& a, const Point& bb, const Figure& t, const Angle& c, Side side,
                    const Figure& closed) {
  // def = t: d apex, ef base.
  b.produce("ba", bb, a);
  Point g = b.cut("g", Ray(a, a + (a - bb)), dist2(t[1], t[2]), "ef");
  Side up = geom::opposite(side);
  Point x1 = b.sub(p23_copy_angle(Ray(g, a), Angle(t[1], t[0], t[2]), up)).point("X");
  Point x2 = b.sub(p23_copy_angle(Ray(a, g), Angle(t[2], t[0], t[1]), side)).point("X");
  Point k = b.meet("k", Line(g, x1), Line(a, x2));
  b.check_zero("triangle gak equals def (I.26)", content(Figure({g, a, k})) - content(t));
  Point h = b.letter("h", b.sub(p10_bisect_segment(Segment(g, a))).point("midpoint"));
  b.join("kh", k, h);
  Line mn = b.sub(p31_parallel(k, Line(g, h))).line("line");
  Point x3 = b.sub(p23_copy_angle(Ray(a, g), c, side)).point("X");
  Point l = b.meet("l", Line(a, x3), mn);
  Point m = b.meet("m", b.sub(p31_parallel(h, Line(a, l))).line("line"), mn);
  b.check_zero("mlha is double of kha (I.41)",
               content(Figure({a, h, m, l})) - Constructible(2) * content(Figure({k, h, a})));
  Point n = b.meet("n", b.sub(p31_parallel(bb, Line(a, l))).line("line"), mn);
  b.produce("na", n, a);
  Point o = b.meet("o", Line(n, a), Line(m, h));
  Line oq = b.sub(p31_parallel(o, mn)).line("line");
  Point q = b.settle("q", b.meet("q", oq, Line(bb, n)), closed[2]);
  b.produce("la", l, a);
  Point p = b.settle("p", b.meet("p", Line(l, a), oq), closed[3]);
  Figure result({a, bb, q, p});
  b.check_zero("complements abpq and mlha are equal (I.43)", content(result) - content(Figure({a, h, m, l})));
  return result;
}

Figure i44_tinemue(Builder& b, const Point& bv, const Point& av, const Figure& t, const Angle& e, Side side,
                   const Figure& closed) {
  Point mid = midpoint(t[1], t[2]);
  Point at_b;
  Point at_c;
  if (geom::angle_eq(Angle(mid, t[2], t[0]), e)) {
    at_b = t[1];
    at_c = t[2];
  } else if (geom::angle_eq(Angle(mid, t[1], t[0]), e)) {
    at_b = t[2];
    at_c = t[1];
  } else {
    throw StrategyInapplicable(
        "I.44.tinemue: the angle at the midpoint of the base is greater or less than the given angle; only the "
        "equal case is constructed");
  }
  b.produce("ab", av, bv);
  Point c = b.cut("c", Ray(bv, bv + (bv - av)), dist2(t[1], t[2]), "the base");
  Point x1 = b.sub(p23_copy_angle(Ray(bv, c), Angle(at_b, t[0], at_c), side)).point("X");
  Point x2 = b.sub(p23_copy_angle(Ray(c, bv), Angle(at_c, t[0], at_b), geom::opposite(side))).point("X");
  Point d = b.meet("d", Line(bv, x1), Line(c, x2));
  Point o = b.letter("o", b.sub(p10_bisect_segment(Segment(bv, c))).point("midpoint"));
  b.join("od", o, d);
  if (!geom::angle_eq(Angle(o, c, d), e)) {
    throw StrategyInapplicable("I.44.tinemue: the upper right angle at o differs from e");
  }
  Line through_a = b.sub(p31_parallel(av, Line(o, d))).line("line");
  Line through_d = b.sub(p31_parallel(d, Line(av, o))).line("line");
  Point g = b.meet("g", through_a, through_d);
  Point f = b.meet("f", b.sub(p31_parallel(bv, Line(o, d))).line("line"), Line(g, d));
  b.produce("gb", g, bv);
  b.produce("do", d, o);
  Point k = b.meet("k", Line(g, bv), Line(d, o));
  Point h = b.settle("h", b.meet("h", b.sub(p31_parallel(k, Line(g, d))).line("line"), Line(g, av)), closed[2]);
  b.produce("fb", f, bv);
  Point i = b.settle("i", b.meet("i", Line(f, bv), Line(k, h)), closed[3]);
  b.check_zero("complements hb and bd are equal (I.43)",
               content(Figure({bv, av, h, i})) - content(Figure({bv, o, d, f})));
  b.check_zero("parallelogram bd equals triangle bcd", content(Figure({bv, o, d, f})) - content(t));
  return Figure({bv, av, h, i});
}

}  // namespace

PropositionResult p44_apply(const Segment& ab, const Figure& t, const Angle& d, I44Strategy strategy, Side side) {
  require_triangle("I.44", t);
  Builder b(p44_id(strategy));
  b.given("AB", ab);
  b.given("triangle", t);
  b.given("angle", d);
  const Point& P = ab.a();
  const Point& Q = ab.b();
  Figure closed = applied(P, Q, content(t), d, side);
  Figure result = closed;
  switch (strategy) {
    case I44Strategy::EuclidSuperposition:
      b.letter("B", P);
      b.letter("A", Q);
      result = i44_euclid(b, P, Q, t, d, side, closed);
      break;
    case I44Strategy::Alnayrizi:
      b.letter("B", P);
      b.letter("A", Q);
      result = i44_alnayrizi(b, P, Q, t, d, side, closed);
      break;
    case I44Strategy::RobertOfChester:
      b.letter("B", P);
      b.letter("A", Q);
      result = i44_chester(b, P, Q, t, d, side, closed);
      break;
    case I44Strategy::Campanus:
      b.letter("a", P);
      b.letter("b", Q);
      result = i44_campanus(b, P, Q, t, d, side, closed);
      break;
    case I44Strategy::TinemueEqualCase:
      b.letter("b", P);
      b.letter("a", Q);
      result = i44_tinemue(b, P, Q, t, d, side, closed);
      break;
  }
  check_parallelogram(b, "result", result);
  b.check("the given line is a full side", result[0] == P && result[1] == Q);
  b.check_zero("content equals the triangle", content(result) - content(t));
  b.check("angle at the given line's first end equals the given angle", geom::angle_eq(Angle(P, Q, result[3]), d));
  b.check(std::string("figure on the ") + geom::to_string(side) + " of the line", side_of(Line(P, Q), result[3]) == side);
  int expected = strategy == I44Strategy::EuclidSuperposition ? 1 : 0;
  b.check("superpositions: " + std::to_string(expected), b.current().trace.total().superpositions == expected);
  b.output("parallelogram", result);
  return b.finish();
}

// ---------------------------------------------------------------- I.45

PropositionResult p45_apply_figure(const Angle& d, const Figure& f, I44Strategy inner) {
  std::vector<Figure> pieces = triangulate(f);
  Builder b("I.45");
  b.given("figure", f);
  b.given("angle", d);
  b.metric("triangles", static_cast<long>(pieces.size()));
  const Figure& first = b.sub(p42_parallelogram(pieces[0], d)).figure("parallelogram");
  Point F = b.letter("F", first[0]);
  Point E = b.letter("E", first[1]);
  Point C = first[2];
  Point G = first[3];
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    Side away = geom::opposite(side_of(Line(C, G), E));
    const Figure& next = b.sub(p44_apply(Segment(C, G), pieces[i], d, inner, away)).figure("parallelogram");
    std::string at = std::to_string(i);
    b.check("piece " + at + " shares the full side of the figure so far", next[0] == C && next[1] == G);
    b.check("piece " + at + ": abutting angles equal two right angles (I.14)",
            geom::AngleMeasure::of(Angle(C, E, G)) + geom::AngleMeasure::of(Angle(C, G, next[3])) ==
                geom::AngleMeasure::two_right());
    b.check("piece " + at + ": base continues in a straight line", geom::collinear(E, C, next[3]));
    C = next[3];
    G = next[2];
  }
  Figure pg({F, E, b.letter("C", C), b.letter("G", G)});
  check_parallelogram(b, "FECG", pg);
  b.check_zero("content equals the figure", content(pg) - content(f));
  b.check("angle CEF equals the given angle", geom::angle_eq(Angle(E, C, F), d));
  b.output("parallelogram", pg);
  return b.finish();
}

// ---------------------------------------------------------------- I.46

PropositionResult p46_square(const Segment& ab, Side side, I46Strategy strategy) {
  Builder b(strategy == I46Strategy::CampanusSecond ? "I.46" : "I.46.campanus");
  b.given("ab", ab);
  Point a = b.letter("a", ab.a());
  Point bb = b.letter("b", ab.b());
  Vec u = bb - a;
  Vec up = side == Side::Left ? perp(u) : -perp(u);
  Constructible len2 = ab.length2();
  Point c;
  Point d;
  Point ac_end = b.sub(p11_perp_at(Line(a, bb), a, side)).point("F");
  c = b.settle("c", b.cut("c", Ray(a, ac_end), len2, "ab"), a + up);
  if (strategy == I46Strategy::CampanusFirst) {
    Point bd_end = b.sub(p11_perp_at(Line(a, bb), bb, side)).point("F");
    d = b.settle("d", b.cut("d", Ray(bb, bd_end), len2, "ab"), bb + up);
    b.join("cd", c, d);
  } else {
    Line cd = b.sub(p31_parallel(c, Line(a, bb))).line("line");
    b.check("cd is drawn along the parallel", cd.incident(c + u));
    d = b.settle("d", b.cut("d", Ray(c, c + u), len2, "ab"), bb + up);
    b.join("db", d, bb);
  }
  Figure sq({a, bb, d, c});
  for (std::size_t i = 0; i < 4; ++i) {
    b.check_zero("side " + std::to_string(i + 1) + " equals ab", dist2(sq[i], sq[i + 1]) - len2);
    b.check("angle " + std::to_string(i + 1) + " is right", geom::is_right(Angle(sq[i], sq[i + 3], sq[i + 1])));
  }
  b.output("square", sq);
  return b.finish();
}

// ---------------------------------------------------------------- triangulation

std::vector<Figure> triangulate(const Figure& f) {
  if (!geom::is_simple(f)) throw NotSimple("the figure crosses itself");
  std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (geom::collinear(f[i + n - 1], f[i], f[i + 1])) {
      throw DegenerateInput("vertex " + std::to_string(i + 1) + " lies on the line of its neighbours");
    }
  }
  Sign turn = geom::signed_area(f).sign();
  std::vector<Figure> out;
  bool convex = true;
  for (std::size_t i = 0; i < n && convex; ++i) {
    convex = geom::orientation(f[i + n - 1], f[i], f[i + 1]) == turn;
  }
  if (convex) {
    for (std::size_t i = 1; i + 1 < n; ++i) out.push_back(Figure({f[0], f[i], f[i + 1]}));
    return out;
  }
  std::vector<Point> v = f.vertices();
  auto inside_or_on = [&](const Point& x, const Point& a, const Point& b, const Point& c) {
    return geom::orientation(a, b, x) != -turn && geom::orientation(b, c, x) != -turn &&
           geom::orientation(c, a, x) != -turn;
  };
  while (v.size() > 3) {
    std::size_t m = v.size();
    bool clipped = false;
    for (std::size_t i = 0; i < m && !clipped; ++i) {
      const Point& a = v[(i + m - 1) % m];
      const Point& b = v[i];
      const Point& c = v[(i + 1) % m];
      if (geom::orientation(a, b, c) != turn) continue;
      bool ear = true;
      for (std::size_t j = 0; j < m && ear; ++j) {
        if (j == i || j == (i + m - 1) % m || j == (i + 1) % m) continue;
        ear = !inside_or_on(v[j], a, b, c);
      }
      if (!ear) continue;
      out.push_back(Figure({a, b, c}));
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
      clipped = true;
    }
    if (!clipped) throw NotSimple("no ear found");
  }
  out.push_back(Figure(v));
  return out;
}

}  // namespace euclid::elements
