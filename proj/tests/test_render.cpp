#include <doctest.h>

#include <regex>

#include "euclid/elements/propositions.hpp"
#include "euclid/error.hpp"
#include "euclid/render/svg.hpp"

using namespace euclid;
using namespace euclid::elements;
namespace rd = euclid::render;
using rd::Options;
using rd::Scene;
using rd::scene_of;

namespace {

Point P(long x, long y) { return {Constructible(x), Constructible(y)}; }

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t i = s.find(needle); i != std::string::npos; i = s.find(needle, i + 1)) ++n;
  return n;
}

std::size_t label_count(const std::string& svg, const std::string& name) {
  return count(svg, ">" + name + "</text>");
}

}  // namespace

TEST_CASE("I.1 census") {
  auto r = p1_equilateral(Segment(P(0, 0), P(1, 0)));
  std::string svg = rd::render(scene_of(r));
  CHECK(count(svg, "<circle class=\"aux\"") == 2);
  CHECK(count(svg, "<line ") == 3);
  for (const char* l : {"A", "B", "C"}) CHECK(label_count(svg, l) == 1);
  CHECK(count(svg, "<text") == 3);
  CHECK(svg == rd::render(scene_of(p1_equilateral(Segment(P(0, 0), P(1, 0))))));
  CHECK(svg.find("<script") == std::string::npos);
}

TEST_CASE("I.44 completion points are labeled") {
  Figure t({P(3, 4), P(0, 0), P(6, 0)});
  Angle right(P(0, 0), P(1, 0), P(0, 1));
  auto r = p44_apply(Segment(P(0, 0), P(4, 0)), t, right, I44Strategy::EuclidSuperposition);
  std::string svg = rd::render(scene_of(r));
  for (const char* l : {"H", "L", "K", "M"}) CHECK(label_count(svg, l) == 1);
}

TEST_CASE("coordinates have six decimals and lie in the viewport") {
  auto r = p46_square(Segment(P(-3, 2), P(5, 7)));
  Options o;
  o.width = 300;
  o.height = 200;
  std::string svg = rd::render(scene_of(r), o);
  std::regex coord(R"re( (?:x|y|x1|y1|x2|y2|cx|cy)="(-?[0-9]+\.[0-9]+)")re");
  int seen = 0;
  for (std::sregex_iterator it(svg.begin(), svg.end(), coord), end; it != end; ++it) {
    std::string v = (*it)[1];
    CHECK(v.size() - v.find('.') - 1 == 6);
    double d = std::stod(v);
    CHECK(d >= -30);
    CHECK(d <= 330);
    ++seen;
  }
  CHECK(seen > 0);
}

TEST_CASE("empty scene") { CHECK_THROWS_AS(rd::render(Scene{}), NothingToRender); }
