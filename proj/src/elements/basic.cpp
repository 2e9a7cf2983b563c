// I.1, I.2, I.3, I.9, I.10, I.11, I.12 and the strategy catalog.

#include <algorithm>
#include <array>

#include "builder.hpp"
#include "euclid/elements/propositions.hpp"

namespace euclid::elements {

using namespace detail;
using geom::collinear;
using geom::cross;
using geom::dist2;
using geom::dot;
using geom::midpoint;
using geom::norm2;
using geom::perp;

namespace {

template <class E, std::size_t N>
struct NameTable {
  std::array<std::pair<E, const char*>, N> rows;

  std::string name(E e) const {
    for (const auto& [k, v] : rows) {
      if (k == e) return v;
    }
    return "?";
  }
};

constexpr NameTable<I23Strategy, 6> kI23{{{{I23Strategy::Euclid, "euclid"},
                                          {I23Strategy::Proclus, "proclus"},
                                          {I23Strategy::Albertus, "albertus"},
                                          {I23Strategy::Commandinus, "commandinus"},
                                          {I23Strategy::Clavius, "clavius"},
                                          {I23Strategy::Campanus, "campanus"}}}};
constexpr NameTable<I42Strategy, 2> kI42{{{{I42Strategy::Euclid, "euclid"}, {I42Strategy::Alnayrizi, "alnayrizi"}}}};
constexpr NameTable<I44Strategy, 5> kI44{{{{I44Strategy::EuclidSuperposition, "euclid_superposition"},
                                          {I44Strategy::Alnayrizi, "alnayrizi"},
                                          {I44Strategy::RobertOfChester, "robert_of_chester"},
                                          {I44Strategy::Campanus, "campanus"},
                                          {I44Strategy::TinemueEqualCase, "tinemue_equal_case"}}}};
constexpr NameTable<I46Strategy, 2> kI46{
    {{{I46Strategy::CampanusFirst, "campanus_first"}, {I46Strategy::CampanusSecond, "campanus_second"}}}};

std::string_view strip_dot(std::string_view s) { return !s.empty() && s.front() == '.' ? s.substr(1) : s; }

[[noreturn]] void unknown_strategy(const char* prop, std::string_view s) {
  throw StrategyInapplicable(std::string("no strategy '") + std::string(s) + "' for " + prop);
}

Point equilateral_apex(const Point& a, const Point& b, Side side) {
  Constructible h = sqrt_nonneg(Constructible::ratio(3, 4));
  if (side == Side::Right) h = -h;
  return midpoint(a, b) + h * perp(b - a);
}

}  // namespace

const std::vector<I23Strategy>& all_i23() {
  static const std::vector<I23Strategy> v{I23Strategy::Euclid,      I23Strategy::Proclus, I23Strategy::Albertus,
                                          I23Strategy::Commandinus, I23Strategy::Clavius, I23Strategy::Campanus};
  return v;
}
const std::vector<I42Strategy>& all_i42() {
  static const std::vector<I42Strategy> v{I42Strategy::Euclid, I42Strategy::Alnayrizi};
  return v;
}
const std::vector<I44Strategy>& all_i44() {
  static const std::vector<I44Strategy> v{I44Strategy::EuclidSuperposition, I44Strategy::Alnayrizi,
                                          I44Strategy::RobertOfChester, I44Strategy::Campanus,
                                          I44Strategy::TinemueEqualCase};
  return v;
}
const std::vector<I46Strategy>& all_i46() {
  static const std::vector<I46Strategy> v{I46Strategy::CampanusFirst, I46Strategy::CampanusSecond};
  return v;
}

std::string name(I23Strategy s) { return kI23.name(s); }
std::string name(I42Strategy s) { return kI42.name(s); }
std::string name(I44Strategy s) { return kI44.name(s); }
std::string name(I46Strategy s) { return kI46.name(s); }

I23Strategy parse_i23(std::string_view s) {
  std::string_view k = strip_dot(s);
  for (const auto& [e, n] : kI23.rows) {
    if (k == n) return e;
  }
  unknown_strategy("I.23", s);
}

I42Strategy parse_i42(std::string_view s) {
  std::string_view k = strip_dot(s);
  for (const auto& [e, n] : kI42.rows) {
    if (k == n) return e;
  }
  unknown_strategy("I.42", s);
}

I44Strategy parse_i44(std::string_view s) {
  std::string_view k = strip_dot(s);
  if (k == "euclid") return I44Strategy::EuclidSuperposition;
  if (k == "chester") return I44Strategy::RobertOfChester;
  if (k == "tinemue") return I44Strategy::TinemueEqualCase;
  for (const auto& [e, n] : kI44.rows) {
    if (k == n) return e;
  }
  unknown_strategy("I.44", s);
}

I46Strategy parse_i46(std::string_view s) {
  std::string_view k = strip_dot(s);
  if (k == "campanus") return I46Strategy::CampanusFirst;
  for (const auto& [e, n] : kI46.rows) {
    if (k == n) return e;
  }
  unknown_strategy("I.46", s);
}

// ---------------------------------------------------------------- I.1

PropositionResult p1_equilateral(const Segment& ab, Side side) {
  Builder b("I.1");
  b.given("AB", ab);
  Point A = b.letter("A", ab.a());
  Point B = b.letter("B", ab.b());
  Circle bcd = b.circle("BCD", A, B);
  Circle ace = b.circle("ACE", B, A);
  Point C = b.pick_side("C", geom::intersect_circles(bcd, ace), Line(A, B), side);
  C = b.settle("C", C, equilateral_apex(A, B, side));
  b.join("CA", C, A);
  b.join("CB", C, B);
  b.check_zero("CA = AB", dist2(C, A) - ab.length2());
  b.check_zero("CB = AB", dist2(C, B) - ab.length2());
  b.check(std::string("C on the ") + geom::to_string(side) + " of AB", side_of(Line(A, B), C) == side);
  b.output("triangle", Figure({A, B, C}));
  b.output("C", C);
  return b.finish();
}

// ---------------------------------------------------------------- I.2

PropositionResult p2_place(const Point& a, const Segment& bc) {
  Builder b("I.2");
  b.given("A", a);
  b.given("BC", bc);
  Point A = b.letter("A", a);
  Point B = b.letter("B", bc.a());
  Point C = b.letter("C", bc.b());
  if (A == B) {
    b.metric("trivial", 1);
    b.check_zero("AL = BC (A is an extremity of BC)", Constructible(0));
    b.output("segment", Segment(A, C));
    b.output("L", C);
    return b.finish();
  }
  b.join("AB", A, B);
  const PropositionResult& tri = b.sub(p1_equilateral(Segment(A, B), Side::Left));
  Point D = b.letter("D", tri.point("C"));
  b.produce("AE", D, A);
  b.produce("BF", D, B);
  Circle cgh = b.circle("CGH", B, C);
  Point G = b.pick("G", geom::intersect_line_circle(Line(D, B), cgh), "beyond B",
                   [&](const Point& p) { return dot(p - B, B - D).is_positive(); });
  Constructible k = ratio_of(bc.length2(), dist2(A, B));
  G = b.settle("G", G, B + k * (B - D));
  Circle gkl = b.circle("GKL", D, G);
  Point L = b.pick("L", geom::intersect_line_circle(Line(D, A), gkl), "beyond A",
                   [&](const Point& p) { return dot(p - A, A - D).is_positive(); });
  L = b.settle("L", L, A + k * (A - D));
  b.join("AL", A, L);
  b.check_zero("BG = BC", dist2(B, G) - bc.length2());
  b.check_zero("DL = DG", dist2(D, L) - dist2(D, G));
  b.check_zero("AL = BC", dist2(A, L) - bc.length2());
  b.check("no superposition", b.current().trace.total().superpositions == 0);
  b.output("segment", Segment(A, L));
  b.output("L", L);
  return b.finish();
}

// ---------------------------------------------------------------- I.3

PropositionResult p3_cut(const Segment& greater, const Segment& less) {
  if (!(greater.length2() > less.length2())) {
    throw PreconditionViolated("I.3: the first segment is not greater than the second");
  }
  Builder b("I.3");
  b.given("AB", greater);
  b.given("C", less);
  Point A = b.letter("A", greater.a());
  Point B = b.letter("B", greater.b());
  const PropositionResult& placed = b.sub(p2_place(A, less));
  Point D = b.letter("D", placed.point("L"));
  Circle def = b.circle("DEF", A, D);
  Point E = b.pick("E", geom::intersect_line_circle(Line(A, B), def), "on AB",
                   [&](const Point& p) { return geom::strictly_between(A, B, p); });
  E = b.settle("E", E, along(Ray(A, B), less.length2()));
  b.check_zero("AE = C", dist2(A, E) - less.length2());
  b.check("E lies between A and B", geom::strictly_between(A, B, E));
  b.output("segment", Segment(A, E));
  b.output("E", E);
  return b.finish();
}

// ---------------------------------------------------------------- I.9

PropositionResult p9_bisect_angle(const Angle& angle) {
  Builder b("I.9");
  b.given("BAC", angle);
  Point A = b.letter("A", angle.vertex());
  Point P = angle.arm1();
  Point Q = angle.arm2();
  if (dist2(A, Q) < dist2(A, P)) std::swap(P, Q);
  Point D = b.letter("D", P);
  Point E;
  if (dist2(A, Q) == dist2(A, D)) {
    E = b.letter("E", Q);
  } else {
    const PropositionResult& cut = b.sub(p3_cut(Segment(A, Q), Segment(A, D)));
    E = b.letter("E", cut.point("E"));
  }
  b.join("DE", D, E);
  Side away = geom::opposite(side_of(Line(D, E), A));
  const PropositionResult& tri = b.sub(p1_equilateral(Segment(D, E), away));
  Point F = b.letter("F", tri.point("C"));
  b.join("AF", A, F);
  b.check("angle DAF = angle FAE", geom::angle_eq(Angle(A, D, F), Angle(A, F, E)));
  b.check("AF falls within the angle", side_of(Line(A, D), F) == side_of(Line(A, D), E) &&
                                           side_of(Line(A, E), F) == side_of(Line(A, E), D));
  b.output("ray", Ray(A, F));
  b.output("F", F);
  return b.finish();
}

// ---------------------------------------------------------------- I.10

PropositionResult p10_bisect_segment(const Segment& s) {
  Builder b("I.10");
  b.given("AB", s);
  Point A = b.letter("A", s.a());
  Point B = b.letter("B", s.b());
  const PropositionResult& tri = b.sub(p1_equilateral(s, Side::Left));
  Point C = b.letter("C", tri.point("C"));
  const PropositionResult& bis = b.sub(p9_bisect_angle(Angle(C, A, B)));
  Point D = b.meet("D", Line(A, B), bis.ray("ray").line());
  D = b.settle("D", D, midpoint(A, B));
  b.check_zero("AD = DB", dist2(A, D) - dist2(D, B));
  b.check("D lies between A and B", geom::strictly_between(A, B, D));
  b.output("midpoint", D);
  b.output("D", D);
  return b.finish();
}

// ---------------------------------------------------------------- I.11

PropositionResult p11_perp_at(const Line& l, const Point& p, Side side) {
  if (!l.incident(p)) throw PreconditionViolated("I.11: the point is not on the line");
  Builder b("I.11");
  b.given("AB", l);
  b.given("C", p);
  Point C = b.letter("C", p);
  Point D = b.letter("D", l.p() == C ? l.q() : l.p());
  Circle circle = b.circle("DE", C, D);
  Point E = b.pick("E", geom::intersect_line_circle(l, circle), "other than D",
                   [&](const Point& x) { return !(x == D); });
  E = b.settle("E", E, geom::point_reflect(D, C));
  Side towards = dot(E - D, l.direction()).is_positive() ? side : geom::opposite(side);
  const PropositionResult& tri = b.sub(p1_equilateral(Segment(D, E), towards));
  Point F = b.letter("F", tri.point("C"));
  b.join("FC", F, C);
  b.check("angle DCF is right", geom::is_right(Angle(C, D, F)));
  b.check(std::string("F on the ") + geom::to_string(side) + " of the line", side_of(l, F) == side);
  b.output("line", Line(C, F));
  b.output("F", F);
  return b.finish();
}

// ---------------------------------------------------------------- I.12

PropositionResult p12_perp_from(const Line& l, const Point& p) {
  if (l.incident(p)) throw PreconditionViolated("I.12: the point lies on the line");
  Builder b("I.12");
  b.given("AB", l);
  b.given("C", p);
  Point C = b.letter("C", p);
  Point D = b.letter("D", geom::point_reflect(C, l.p()));
  Circle efg = b.circle("EFG", C, D);
  std::vector<Point> hits = geom::intersect_line_circle(l, efg);
  Point E = b.pick_index("E", hits, 0);
  Point G = b.pick_index("G", hits, 1);
  const PropositionResult& mid = b.sub(p10_bisect_segment(Segment(E, G)));
  Vec d = l.direction();
  Point foot = l.p() + (dot(C - l.p(), d) / norm2(d)) * d;
  Point H = b.letter("H", b.settle("H", mid.point("D"), foot));
  b.join("CG", C, G);
  b.join("CH", C, H);
  b.join("CE", C, E);
  b.check_zero("GH = EH", dist2(G, H) - dist2(E, H));
  b.check_zero("CG = CE", dist2(C, G) - dist2(C, E));
  b.check("angle GHC = angle EHC (I.8)", geom::angle_eq(Angle(H, G, C), Angle(H, E, C)));
  b.check("CH is perpendicular to AB", geom::is_right(Angle(H, G, C)));
  b.output("foot", H);
  b.output("line", Line(C, H));
  b.output("H", H);
  return b.finish();
}

}  // namespace euclid::elements
