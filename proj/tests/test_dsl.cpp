#include <doctest.h>

#include <fstream>
#include <sstream>

#include "euclid/dsl/script.hpp"
#include "euclid/error.hpp"

using namespace euclid;
using namespace euclid::dsl;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string script(const char* name) { return slurp(std::string(EUCLID_SOURCE_DIR) + "/scripts/" + name); }

Constructible q(long n, long d = 1) { return Constructible::ratio(n, d); }

}  // namespace

TEST_CASE("parse declarations and syntax errors") {
  auto one = parse("point A = (0, 0)");
  REQUIRE(one.ok());
  REQUIRE(one.script.statements.size() == 1);
  CHECK(one.script.statements[0].name == "A");

  auto bad = parse("point A = (0 0)");
  REQUIRE(bad.diagnostics.size() == 1);
  CHECK(bad.diagnostics[0].span.line == 1);
  CHECK(bad.diagnostics[0].span.column == 14);
  CHECK(bad.diagnostics[0].message.find("','") != std::string::npos);

  // Recovery at statement boundaries: both bad lines reported, good ones kept.
  auto many = parse("point A = (0, 0)\npoint B = \npoint C = (1, 1)\ncircle c = circle(A,, C)\n");
  CHECK(many.diagnostics.size() == 2);
  CHECK(many.script.statements.size() == 2);
  CHECK(many.diagnostics[0].span.line == 2);
  CHECK(many.diagnostics[1].span.line == 4);
}

TEST_CASE("diagnostic spans lie within the source") {
  const char* texts[] = {"point", "point A", "point A =", "assert", "circle c = circle(", "point A = (1, sqrt(",
                         "@", "point A = (1, 2) junk", "   # only a comment", "point A = (1/0, 2)"};
  for (const char* t : texts) {
    auto r = parse(t);
    std::string_view s(t);
    for (const auto& d : r.diagnostics) {
      CHECK(d.span.line == 1);
      CHECK(d.span.column >= 1);
      CHECK(d.span.column <= static_cast<int>(s.size()) + 1);
    }
  }
}

TEST_CASE("the I.1 script") {
  std::string text = script("i1.euc");
  auto p = parse(text);
  REQUIRE(p.ok());
  CHECK(p.script.statements.size() == 6);
  CHECK(check(p.script).empty());
  Run r = interpret(p.script);
  REQUIRE(r.ok());
  const auto& c = std::get<geom::Point>(*r.find("C"));
  CHECK(c == geom::Point(q(1, 2), sqrt_nonneg(q(3)) / q(2)));
  CHECK(r.assertions.size() == 1);
  CHECK(r.trace.direct().circles == 2);
  // Determinism: a second run serializes identically.
  CHECK(interpret(parse(text).script).trace.serialize() == r.trace.serialize());
}

TEST_CASE("checker diagnostics") {
  auto use = parse("point A = (0, 0)\nsegment s = join(A, B)\npoint B = (1, 0)\n");
  auto d = check(use.script);
  REQUIRE(d.size() == 1);
  CHECK(d[0].span.line == 2);
  CHECK(d[0].note.find("line 3") != std::string::npos);

  auto arity = parse("point A = (0, 0)\npoint B = (1, 0)\ncircle c = circle(A, B, A)\n");
  CHECK(check(arity.script).size() == 1);

  auto dup = parse("point A = (0, 0)\npoint A = (1, 0)\n");
  CHECK(check(dup.script).size() == 1);

  auto type = parse("point A = (0, 0)\npoint B = (1, 0)\nline l = join(A, B)\n");
  CHECK(check(type.script).size() == 1);

  auto prop = parse("point A = (0, 0)\nresult R = I.99(A)\nresult S = I.44.nobody(A)\nresult T = I.1(A)\n");
  CHECK(check(prop.script).size() == 3);

  auto i44 = parse(script("i44.euc"));
  REQUIRE(i44.ok());
  CHECK(check(i44.script).empty());
}

TEST_CASE("the I.44 script") {
  std::vector<Diagnostic> d;
  Run r = run_text(script("i44.euc"), d);
  CHECK(d.empty());
  INFO(r.report());
  CHECK(r.ok());
  CHECK(r.assertions.size() == 2);
  CHECK(r.trace.total().superpositions == 1);
}

TEST_CASE("runtime errors carry the statement span") {
  std::vector<Diagnostic> d;
  Run r = run_text(
      "point A = (0, 0)\npoint B = (1, 0)\nline l = line(A, B)\ncircle c = circle((5, 1), (5, 0))\n"
      "point T = intersect(l, c) second\n",
      d);
  REQUIRE(d.empty());
  REQUIRE(r.failure);
  CHECK(r.failure_kind == "NoSuchIntersection");
  CHECK(r.failure->span.line == 5);
  CHECK(r.failure->span.column == 27);

  Run deg = run_text("point A = (0, 0)\nsegment s = join(A, (0, 0))\n", d);
  REQUIRE(deg.failure);
  CHECK(deg.failure_kind == "DegenerateInput");
  CHECK(deg.failure->span.line == 2);
}

TEST_CASE("selectors") {
  std::vector<Diagnostic> d;
  const char* base =
      "point A = (0, 0)\npoint B = (2, 0)\ncircle a = circle(A, B)\ncircle b = circle(B, A)\nray r = extend(B, A)\n"
      "line l = line(A, B)\npoint X = (0, -5)\n";
  auto pick = [&](const std::string& sel) {
    Run r = run_text(std::string(base) + "point C = intersect(a, b) " + sel + "\n", d);
    REQUIRE(r.ok());
    return std::get<geom::Point>(*r.find("C"));
  };
  CHECK(pick("side upper").y.is_positive());
  CHECK(pick("side lower").y.is_negative());
  CHECK(pick("first").y.is_negative());  // canonical order is lexicographic
  CHECK(pick("second").y.is_positive());
  CHECK(pick("side left_of(r)").y.is_negative());  // r points towards -x
  CHECK(pick("same_side(l, X)").y.is_negative());
  CHECK(pick("opposite_side(l, X)").y.is_positive());
}

TEST_CASE("assertions report failures without stopping") {
  std::vector<Diagnostic> d;
  Run r = run_text(
      "point A = (0, 0)\npoint B = (1, 0)\npoint C = (0, 2)\nassert seg_eq(join(A, B), join(A, C))\n"
      "assert right_angle(angle(A, B, C))\nassert collinear(A, B, (5, 0))\n"
      "assert parallel(line(A, C), line((3, 0), (3, 7)))\n",
      d);
  REQUIRE(r.assertions.size() == 4);
  CHECK(!r.assertions[0].pass);
  CHECK(r.assertions[0].detail == "3");
  CHECK(r.assertions[1].pass);
  CHECK(r.assertions[2].pass);
  CHECK(r.assertions[3].pass);
  CHECK(!r.ok());
}

TEST_CASE("theorem calls report their conclusions") {
  std::vector<Diagnostic> d;
  Run r = run_text(
      "figure P = polygon((0, 0), (4, 0), (5, 3), (1, 3))\nfigure T = polygon((0, 0), (4, 0), (2, 3))\n"
      "result R = I.41(pg=P, t=T)\n",
      d);
  CHECK(d.empty());
  CHECK(r.ok());
  CHECK(r.assertions.size() == 1);
}

TEST_CASE("pretty-print round trip") {
  for (const char* name : {"i1.euc", "i44.euc"}) {
    auto a = parse(script(name));
    REQUIRE(a.ok());
    std::string printed = print(a.script);
    auto b = parse(printed);
    REQUIRE(b.ok());
    CHECK(a.script.same(b.script));
    CHECK(print(b.script) == printed);
  }
  auto n = parse("point A = (-(1 - 2) - 3 * -4 / (5 - 6), sqrt(1/2 + 1) - -1)\nresult R = I.1(join(A, (0, 0)), side=lower)\n");
  REQUIRE(n.ok());
  auto m = parse(print(n.script));
  REQUIRE(m.ok());
  CHECK(n.script.same(m.script));
}

TEST_CASE("instance files") {
  auto b = read_instance("point A = (0, 0)\nfigure f = polygon(A, (1, 0), (0, 1))\n");
  REQUIRE(b.size() == 1);
  CHECK(b[0].first == "f");
  CHECK_THROWS_AS(read_instance("point A = (0 0)\n"), ParseError);
  CHECK_THROWS_AS(read_instance("assert collinear((0,0), (1,1), (2,2))\n"), ParseError);
}
