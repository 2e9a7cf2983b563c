// Random instances on the rational grid.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "euclid/error.hpp"
#include "euclid/verify/verify.hpp"

namespace euclid::verify {

using geom::Angle;
using geom::Figure;
using geom::Line;
using geom::Point;
using geom::Ray;
using geom::Segment;

namespace {

class Draw {
 public:
  explicit Draw(std::mt19937_64& rng) : rng_(rng) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  /// n/d with 1 <= d <= 16 and |n/d| <= bound.
  Constructible coord(long bound = 32) {
    long d = uniform(1, 16);
    return Constructible::ratio(uniform(-bound * d, bound * d), d);
  }
  /// A rational strictly between 0 and 1.
  Constructible fraction() {
    long d = uniform(2, 16);
    return Constructible::ratio(uniform(1, d - 1), d);
  }
  /// A positive rational at most `bound`.
  Constructible positive(long bound = 4) {
    long d = uniform(1, 16);
    return Constructible::ratio(uniform(1, bound * d), d);
  }
  Point point(long bound = 32) { return {coord(bound), coord(bound)}; }
  Side side() { return uniform(0, 1) ? Side::Left : Side::Right; }

  Segment segment(long bound = 32) {
    for (;;) {
      Point a = point(bound);
      Point b = point(bound);
      if (!(a == b)) return Segment(a, b);
    }
  }
  Line line(long bound = 32) {
    Segment s = segment(bound);
    return Line(s.a(), s.b());
  }
  Ray ray(long bound = 32) {
    Segment s = segment(bound);
    return Ray(s.a(), s.b());
  }
  Point off(const Line& l, long bound = 32) {
    for (;;) {
      Point p = point(bound);
      if (!l.incident(p)) return p;
    }
  }
  Figure triangle(long bound = 32) {
    for (;;) {
      Point a = point(bound);
      Point b = point(bound);
      Point c = point(bound);
      if (!(a == b) && !geom::collinear(a, b, c)) return Figure({a, b, c});
    }
  }
  Angle angle(long bound = 32) {
    Figure t = triangle(bound);
    return Angle(t[0], t[1], t[2]);
  }
  Figure parallelogram(long bound = 16) {
    Figure t = triangle(bound);
    return Figure({t[0], t[1], t[1] + t[2] - t[0], t[2]});
  }

  /// Star-shaped simple polygon with 3..max_n vertices.
  Figure polygon(int max_n) {
    for (;;) {
      int n = static_cast<int>(uniform(3, max_n));
      std::vector<Point> v;
      for (int i = 0; i < n; ++i) v.push_back(point(16));
      double cx = 0;
      double cy = 0;
      for (const auto& p : v) {
        cx += p.x.to_double() / n;
        cy += p.y.to_double() / n;
      }
      std::vector<std::pair<double, std::size_t>> order;
      for (std::size_t i = 0; i < v.size(); ++i) {
        order.emplace_back(std::atan2(v[i].y.to_double() - cy, v[i].x.to_double() - cx), i);
      }
      std::sort(order.begin(), order.end());
      std::vector<Point> w;
      for (const auto& [a, i] : order) w.push_back(v[i]);
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        if (w[i] == w[(i + 1) % n] || geom::collinear(w[i], w[(i + 1) % n], w[(i + 2) % n])) ok = false;
      }
      if (!ok) continue;
      Figure f(w);
      if (geom::is_simple(f)) return f;
    }
  }

  /// A rational rigid motion, possibly with reflection.
  geom::Isometry motion() {
    Constructible m = coord(4);
    Constructible den = Constructible(1) + m * m;
    geom::Isometry r = geom::Isometry::rotation((Constructible(1) - m * m) / den, Constructible(2) * m / den);
    r.tx = coord(16);
    r.ty = coord(16);
    r.reflect = uniform(0, 1) == 1;
    return r;
  }

 private:
  std::mt19937_64& rng_;
};

Figure moved(const geom::Isometry& m, const Figure& f) {
  std::vector<Point> v;
  for (const auto& p : f.vertices()) v.push_back(geom::apply_isometry(m, p));
  return Figure(v);
}

using Gen = std::function<Instance(Draw&)>;

Instance positional(std::initializer_list<elements::Object> objs, std::optional<Side> side = std::nullopt) {
  Instance i;
  for (const auto& o : objs) i.args.emplace_back("", o);
  i.side = side;
  return i;
}

Instance named(std::initializer_list<std::pair<std::string, elements::Object>> objs) {
  Instance i;
  for (const auto& o : objs) i.args.push_back(o);
  return i;
}

/// E on AB strictly inside, F off AB, CD through F parallel to AB.
Instance transversal(Draw& d) {
  Segment ab = d.segment(16);
  Point A = ab.a();
  Point B = ab.b();
  Point E = geom::lerp(A, B, d.fraction());
  Point F = d.off(Line(A, B), 16);
  Point C = F - d.positive() * (B - A);
  Point D = F + d.positive() * (B - A);
  return named({{"A", A}, {"B", B}, {"C", C}, {"D", D}, {"E", E}, {"F", F}});
}

const std::map<std::string, Gen>& generators() {
  static const std::map<std::string, Gen> g{
      {"I.1", [](Draw& d) { return positional({d.segment()}, d.side()); }},
      {"I.2",
       [](Draw& d) {
         Segment bc = d.segment();
         Point a = d.point();
         while (a == bc.a()) a = d.point();
         return positional({a, bc});
       }},
      {"I.3",
       [](Draw& d) {
         for (;;) {
           Segment g = d.segment();
           Segment l = d.segment();
           if (l.length2() < g.length2()) return positional({g, l});
         }
       }},
      {"I.9", [](Draw& d) { return positional({d.angle()}); }},
      {"I.10", [](Draw& d) { return positional({d.segment()}); }},
      {"I.11",
       [](Draw& d) {
         Line l = d.line();
         return positional({l, geom::lerp(l.p(), l.q(), d.coord(2))}, d.side());
       }},
      {"I.12",
       [](Draw& d) {
         Line l = d.line();
         return positional({l, d.off(l)});
       }},
      {"I.22",
       [](Draw& d) {
         Figure t = d.triangle();
         return positional({Segment(t[0], t[1]), Segment(t[1], t[2]), Segment(t[2], t[0]), d.ray()}, d.side());
       }},
      {"I.23", [](Draw& d) { return positional({d.ray(), d.angle()}, d.side()); }},
      {"I.31",
       [](Draw& d) {
         Line l = d.line();
         return positional({d.off(l), l});
       }},
      {"I.42", [](Draw& d) { return positional({d.triangle(), d.angle()}); }},
      {"I.43",
       [](Draw& d) {
         Figure pg = d.parallelogram();
         return positional({pg, geom::lerp(pg[0], pg[2], d.fraction())});
       }},
      {"I.44", [](Draw& d) { return positional({d.segment(), d.triangle(), d.angle()}, d.side()); }},
      {"I.45", [](Draw& d) { return positional({d.angle(), d.polygon(8)}); }},
      {"I.46", [](Draw& d) { return positional({d.segment()}, d.side()); }},

      {"I.4",
       [](Draw& d) {
         Figure t = d.triangle(16);
         return named({{"t1", t}, {"t2", moved(d.motion(), t)}});
       }},
      {"I.7",
       [](Draw& d) {
         Segment s = d.segment();
         Point c = d.off(Line(s.a(), s.b()));
         return named({{"base", s}, {"C", c}, {"D", c}});
       }},
      {"I.8",
       [](Draw& d) {
         Figure t = d.triangle(16);
         return named({{"t1", t}, {"t2", moved(d.motion(), t)}});
       }},
      {"I.13",
       [](Draw& d) {
         Segment cd = d.segment();
         Point B = geom::lerp(cd.a(), cd.b(), d.fraction());
         return named({{"A", d.off(Line(cd.a(), cd.b()))}, {"B", B}, {"C", cd.a()}, {"D", cd.b()}});
       }},
      {"I.14",
       [](Draw& d) {
         Segment ab = d.segment(16);
         Point C = d.off(Line(ab.a(), ab.b()), 16);
         Point D = ab.b() + d.positive() * (ab.b() - C);
         return named({{"A", ab.a()}, {"B", ab.b()}, {"C", C}, {"D", D}});
       }},
      {"I.15",
       [](Draw& d) {
         for (;;) {
           Point E = d.point(16);
           Point u = d.point(8);
           Point v = d.point(8);
           if (geom::cross(u, v).is_zero()) continue;
           return named({{"A", E + u},
                         {"B", E - d.positive() * u},
                         {"C", E + v},
                         {"D", E - d.positive() * v},
                         {"E", E}});
         }
       }},
      {"I.16", [](Draw& d) { return named({{"t", d.triangle(16)}}); }},
      {"I.20", [](Draw& d) { return named({{"t", d.triangle()}}); }},
      {"I.26",
       [](Draw& d) {
         Figure t = d.triangle(16);
         return named({{"t1", t}, {"t2", moved(d.motion(), t)}});
       }},
      {"I.27", transversal},
      {"I.28", transversal},
      {"I.29", transversal},
      {"I.30",
       [](Draw& d) {
         Line l3 = d.line(16);
         auto shifted = [&] {
           for (;;) {
             Point p = d.off(l3, 16);
             return Line(p, p + l3.direction());
           }
         };
         Line l1 = shifted();
         Line l2 = shifted();
         return named({{"l1", l1}, {"l2", l2}, {"l3", l3}});
       }},
      {"I.32", [](Draw& d) { return named({{"t", d.triangle(16)}}); }},
      {"I.33",
       [](Draw& d) {
         Segment ab = d.segment(16);
         Point C = d.off(Line(ab.a(), ab.b()), 16);
         return named({{"A", ab.a()}, {"B", ab.b()}, {"C", C}, {"D", C + (ab.b() - ab.a())}});
       }},
      {"I.34", [](Draw& d) { return named({{"pg", d.parallelogram()}}); }},
      {"I.35",
       [](Draw& d) {
         Figure p = d.parallelogram();
         Point w = p[3] - p[0] + d.coord(2) * (p[1] - p[0]);
         return named({{"p1", p}, {"p2", Figure({p[0], p[1], p[1] + w, p[0] + w})}});
       }},
      {"I.36",
       [](Draw& d) {
         Figure p = d.parallelogram();
         Point base = p[1] - p[0];
         Point a = p[0] + d.coord(2) * base;
         Point w = p[3] - p[0] + d.coord(2) * base;
         return named({{"p1", p}, {"p2", Figure({a, a + base, a + base + w, a + w})}});
       }},
      {"I.37",
       [](Draw& d) {
         Figure t = d.triangle(16);
         return named({{"t1", t}, {"t2", Figure({t[0], t[1], t[2] + d.coord(2) * (t[1] - t[0])})}});
       }},
      {"I.38",
       [](Draw& d) {
         Figure t = d.triangle(16);
         Point base = t[1] - t[0];
         Point a = t[0] + d.coord(2) * base;
         return named({{"t1", t}, {"t2", Figure({a, a + base, t[2] + d.coord(2) * base})}});
       }},
      {"I.41",
       [](Draw& d) {
         Figure p = d.parallelogram();
         return named({{"pg", p}, {"t", Figure({p[0], p[1], p[3] + d.coord(2) * (p[1] - p[0])})}});
       }},
  };
  return g;
}

}  // namespace

Instance generate(const std::string& base_id, std::mt19937_64& rng) {
  const auto& g = generators();
  auto it = g.find(base_id);
  if (it == g.end()) throw UnknownProposition("no instance generator for " + base_id);
  Draw d(rng);
  return it->second(d);
}

std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index, const std::string& id) {
  std::uint32_t h = 2166136261u;
  for (unsigned char c : id) h = (h ^ c) * 16777619u;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), h};
  return std::mt19937_64(seq);
}

}  // namespace euclid::verify
