// I.22, I.23 in six constructions, I.31.

#include "builder.hpp"
#include "internal.hpp"
#include "euclid/elements/propositions.hpp"

namespace euclid::elements {

using namespace detail;
using geom::cross;
using geom::dist2;
using geom::dot;
using geom::norm2;
using geom::perp;

namespace {

void require_triangle(const char* id, const Constructible& a, const Constructible& b, const Constructible& c) {
  if (!a.is_positive() || !b.is_positive() || !c.is_positive()) {
    throw DegenerateInput(std::string(id) + ": lengths must be positive");
  }
  if (!(a + b > c) || !(a + c > b) || !(b + c > a)) {
    throw TriangleInequalityViolated(std::string(id) + ": two of the lines are not greater than the remaining one");
  }
}

}  // namespace

namespace detail {

namespace {

/// Third vertex K of the triangle KFG with F = r.origin, G along r at
/// distance sqrt(b2), FK^2 = a2, GK^2 = c2, K on `side` of r.
Point apex_on_ray(const Ray& r, const Constructible& a2, const Constructible& b2, const Constructible& c2, Side side) {
  Vec g = r.direction();
  Constructible g2 = norm2(g);
  Constructible x = (a2 + b2 - c2) / (Constructible(2) * b2);  // FK cos(F) / FG
  Constructible y = sqrt_nonneg(a2 / b2 - x * x);
  if (side == Side::Right) y = -y;
  Constructible k = sqrt_nonneg(b2 / g2);
  return r.origin() + (k * x) * g + (k * y) * perp(g);
}

}  // namespace

Point copied_arm(const Ray& r, const Angle& model, Side side) {
  Vec d = r.direction();
  Vec rot = rotated_like(d, model, side);
  return r.origin() + (Constructible(1) / sqrt_nonneg(norm2(model.v()) * norm2(d))) * rot;
}

PropositionResult triangle_on_ray(const char* id, const Constructible& a2, const Constructible& b2,
                                  const Constructible& c2, const Ray& base, Side side) {
  require_triangle(id, sqrt_nonneg(a2), sqrt_nonneg(b2), sqrt_nonneg(c2));
  Builder b(id);
  b.given("DE", base);
  Point F = b.letter("F", base.origin());
  Vec g = base.direction();
  b.produce("EF", base.through(), F);
  Point D = b.cut("D", Ray(F, F - g), a2, "A");
  Point G = b.cut("G", base, b2, "B");
  Point H = b.cut("H", Ray(G, G + g), c2, "C");
  Circle dkl = b.circle("DKL", F, D);
  Circle klh = b.circle("KLH", G, H);
  Point K = b.pick_side("K", geom::intersect_circles(dkl, klh), base.line(), side);
  K = b.settle("K", K, apex_on_ray(base, a2, b2, c2, side));
  b.join("KF", K, F);
  b.join("KG", K, G);
  b.check_zero("KF = A", dist2(K, F) - a2);
  b.check_zero("FG = B", dist2(F, G) - b2);
  b.check_zero("GK = C", dist2(G, K) - c2);
  b.check("FG lies along the given ray", base.contains(G));
  b.output("triangle", Figure({K, F, G}));
  b.output("K", K);
  b.output("G", G);
  return b.finish();
}

}  // namespace detail

PropositionResult p22_triangle(const Constructible& a, const Constructible& b, const Constructible& c, const Ray& base,
                               Side side) {
  require_triangle("I.22", a, b, c);
  return triangle_on_ray("I.22", a * a, b * b, c * c, base, side);
}

PropositionResult place_triangle_on_ray(const Constructible& a, const Constructible& b, const Constructible& c,
                                        const Ray& base, Side side) {
  return p22_triangle(a, b, c, base, side);
}

namespace {

// Each strategy returns the arm point X of the new angle; the model's arm1
// is the arm set off the ray and arm2 the arm laid along it.

Point i23_euclid(Builder& b, const Ray& target, const Angle& model, Side side) {
  b.join("DE", model.arm1(), model.arm2());
  const PropositionResult& tri = b.sub(triangle_on_ray("I.22", norm2(model.u()), norm2(model.v()),
                                                       dist2(model.arm1(), model.arm2()), target, side));
  return b.letter("F", tri.point("K"));
}

Point i23_proclus(Builder& b, const Ray& target, const Angle& model, Side side) {
  Point A = target.origin();
  Vec d = target.direction();
  b.join("CE", model.arm1(), model.arm2());
  Point B = b.cut("B", target, norm2(model.v()), "DE");
  b.produce("AF", B, A);
  b.produce("BG", A, B);
  Point F = b.cut("F", Ray(A, A - d), norm2(model.u()), "CD");
  Point G = b.cut("G", Ray(B, B + d), dist2(model.arm1(), model.arm2()), "CE");
  Circle k = b.circle("K", A, F);
  Circle l = b.circle("L", B, G);
  std::vector<Point> hits = geom::intersect_circles(k, l);
  Point M = b.pick_side("M", hits, target.line(), side);
  Point N = b.pick_side("N", hits, target.line(), geom::opposite(side));
  b.join("MA", M, A);
  b.join("MB", M, B);
  b.join("NA", N, A);
  b.join("NB", N, B);
  return M;
}

Point i23_albertus(Builder& b, const Ray& target, const Angle& model, Side side) {
  Point A = target.origin();
  Vec d = target.direction();
  Constructible gh2 = norm2(model.v());
  Constructible ab2 = norm2(d);
  Point B = b.letter("B", target.through());
  if (ab2 > gh2) {
    const PropositionResult& cut = b.sub(p3_cut(Segment(A, B), Segment(model.vertex(), model.arm2())));
    B = b.letter("B", cut.point("E"));
  } else if (ab2 < gh2) {
    b.produce("AB", A, B);
    B = b.cut("B", target, gh2, "GH");
  }
  b.produce("AC", B, A);
  b.produce("BE", A, B);
  Point C = b.cut("C", Ray(A, A - d), norm2(model.u()), "FG");
  Point E = b.cut("E", Ray(B, B + d), dist2(model.arm1(), model.arm2()), "FH");
  Circle ac = b.circle("AC", A, C);
  Circle be = b.circle("BE", B, E);
  std::vector<Point> hits = geom::intersect_circles(ac, be);
  if (hits.size() < 2) {
    throw TriangleInequalityViolated("I.23.albertus: the circles " +
                                     std::string(hits.empty() ? "do not meet" : "touch") + ", so GH >= FG + FH (I.20)");
  }
  Point D = b.pick_side("D", hits, target.line(), side);
  b.join("DA", D, A);
  b.join("DB", D, B);
  return D;
}

Point i23_commandinus(Builder& b, const Ray& target, const Angle& model, Side side) {
  Point A = target.origin();
  b.join("DE", model.arm1(), model.arm2());
  Point G = b.cut("G", target, norm2(model.v()), "CE");
  Circle a = b.carried_circle("A", A, norm2(model.u()), "CD");
  Circle g = b.carried_circle("G", G, dist2(model.arm1(), model.arm2()), "ED");
  Point F = b.pick_side("F", geom::intersect_circles(a, g), target.line(), side);
  b.join("AF", A, F);
  b.join("FG", F, G);
  return F;
}

Point i23_clavius(Builder& b, const Ray& target, const Angle& model, Side side) {
  Point C = target.origin();
  Vec d = target.direction();
  b.join("GH", model.arm2(), model.arm1());
  Point I = b.cut("I", target, norm2(model.v()), "EG");
  Point L = b.cut("L", target, norm2(model.u()), "EH");
  Point M = b.cut("M", Ray(I, I + d), dist2(model.arm1(), model.arm2()), "GH");
  Circle cl = b.circle("CL", C, L);
  Circle im = b.circle("IM", I, M);
  Point K = b.pick_side("K", geom::intersect_circles(cl, im), target.line(), side);
  b.join("CK", C, K);
  b.join("IK", I, K);
  return K;
}

Point i23_campanus(Builder& b, const Ray& target, const Angle& model, Side side) {
  Point f = target.origin();
  Vec d = target.direction();
  b.join("c", model.arm1(), model.arm2());
  b.produce("ef", target.through(), f);
  Point dd = b.cut("d", Ray(f, f - d), norm2(model.u()), "a");
  Point g = b.cut("g", target, norm2(model.v()), "b");
  Point h = b.cut("h", Ray(g, g + d), dist2(model.arm1(), model.arm2()), "c");
  Circle dk = b.circle("dk", f, dd);
  Circle kh = b.circle("kh", g, h);
  Point k = b.pick_side("k", geom::intersect_circles(dk, kh), target.line(), side);
  b.join("kf", k, f);
  b.join("kg", k, g);
  return k;
}

}  // namespace

PropositionResult p23_copy_angle(const Ray& target, const Angle& model, Side side, I23Strategy strategy) {
  std::string id = "I.23";
  if (strategy != I23Strategy::Euclid) id += "." + name(strategy);
  Builder b(id);
  b.given("AB", target);
  b.given("angle", model);
  Point A = b.letter("A", target.origin());
  Point X;
  switch (strategy) {
    case I23Strategy::Euclid: X = i23_euclid(b, target, model, side); break;
    case I23Strategy::Proclus: X = i23_proclus(b, target, model, side); break;
    case I23Strategy::Albertus: X = i23_albertus(b, target, model, side); break;
    case I23Strategy::Commandinus: X = i23_commandinus(b, target, model, side); break;
    case I23Strategy::Clavius: X = i23_clavius(b, target, model, side); break;
    case I23Strategy::Campanus: X = i23_campanus(b, target, model, side); break;
  }
  X = b.settle("X", X, copied_arm(target, model, side));
  Angle result(A, X, target.through());
  b.check("new angle equals the given angle", geom::angle_eq(result, model));
  b.check(std::string("new arm on the ") + geom::to_string(side) + " of the ray", side_of(target.line(), X) == side);
  b.output("angle", result);
  b.output("ray", Ray(A, X));
  b.output("X", X);
  return b.finish();
}

PropositionResult p31_parallel(const Point& p, const Line& l) {
  Builder b("I.31");
  b.given("BC", l);
  b.given("A", p);
  Point A = b.letter("A", p);
  if (l.incident(p)) {
    b.metric("coincident", 1);
    b.check("A lies on BC; the line itself is returned", true);
    b.output("line", l);
    return b.finish();
  }
  bool p_nearer = !(dist2(A, l.q()) < dist2(A, l.p()));
  Point D = b.letter("D", p_nearer ? l.p() : l.q());
  Point C = b.letter("C", p_nearer ? l.q() : l.p());
  b.join("AD", A, D);
  Side away = geom::opposite(side_of(Line(A, D), C));
  const PropositionResult& copy = b.sub(p23_copy_angle(Ray(A, D), Angle(D, C, A), away));
  Point E = b.letter("E", b.settle("E", copy.point("X"), A + (D - C)));
  b.produce("EAF", E, A);
  Line result(A, E);
  b.check("angle DAE = angle ADC (alternate)", geom::angle_eq(Angle(A, D, E), Angle(D, C, A)));
  b.check("EF is parallel to BC", geom::parallel(result, l) && !geom::coincident(result, l));
  b.check("EF does not meet BC", geom::intersect_lines(result, l).kind == geom::LineMeet::Kind::NoIntersection);
  b.output("line", result);
  b.output("E", E);
  return b.finish();
}

}  // namespace euclid::elements
