#include "euclid/render/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <optional>

#include "euclid/error.hpp"

namespace euclid::render {

using geom::Angle;
using geom::Circle;
using geom::Figure;
using geom::Line;
using geom::Ray;
using geom::Segment;

namespace {

struct P2 {
  double x;
  double y;
};

P2 approx(const Point& p) { return {p.x.to_double(), p.y.to_double()}; }

struct Box {
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = std::numeric_limits<double>::infinity();
  double x1 = -std::numeric_limits<double>::infinity();
  double y1 = -std::numeric_limits<double>::infinity();

  void add(P2 p) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  }
  bool empty() const { return x0 > x1; }
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

/// Attributes per role: stroke, width, dash, fill.
struct Style {
  const char* stroke;
  const char* width;
  const char* dash;
  const char* fill;
};

Style style(Role r) {
  switch (r) {
    case Role::Given: return {"#000000", "2", nullptr, "none"};
    case Role::Auxiliary: return {"#8a8a8a", "0.75", "4 3", "none"};
    case Role::Construction: return {"#1f4e9c", "1.25", nullptr, "none"};
    case Role::Result: return {"#b22222", "2", nullptr, "#b22222"};
  }
  return {"#000000", "1", nullptr, "none"};
}

std::string attrs(Role r, bool closed_fill = false) {
  Style s = style(r);
  std::string a = std::string(" class=\"") + to_string(r) + "\" stroke=\"" + s.stroke + "\" stroke-width=\"" + s.width + "\"";
  if (s.dash) a += std::string(" stroke-dasharray=\"") + s.dash + "\"";
  if (closed_fill && std::string(s.fill) != "none") a += std::string(" fill=\"") + s.fill + "\" fill-opacity=\"0.15\"";
  else a += " fill=\"none\"";
  return a;
}

void extent(Box& b, const Object& o) {
  std::visit(
      [&](const auto& x) {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, Point>) {
          b.add(approx(x));
        } else if constexpr (std::is_same_v<X, Segment>) {
          b.add(approx(x.a()));
          b.add(approx(x.b()));
        } else if constexpr (std::is_same_v<X, Line>) {
          b.add(approx(x.p()));
          b.add(approx(x.q()));
        } else if constexpr (std::is_same_v<X, Ray>) {
          b.add(approx(x.origin()));
          b.add(approx(x.through()));
        } else if constexpr (std::is_same_v<X, Circle>) {
          P2 c = approx(x.center());
          double r = std::sqrt(x.radius2().to_double());
          b.add({c.x - r, c.y - r});
          b.add({c.x + r, c.y + r});
        } else if constexpr (std::is_same_v<X, Angle>) {
          b.add(approx(x.vertex()));
          b.add(approx(x.arm1()));
          b.add(approx(x.arm2()));
        } else {
          for (const auto& p : x.vertices()) b.add(approx(p));
        }
      },
      o);
}

class Canvas {
 public:
  Canvas(const Box& world, const Options& o) : o_(o) {
    double w = world.x1 - world.x0;
    double h = world.y1 - world.y0;
    double span = std::max({w, h, 1e-9});
    if (w <= 0 && h <= 0) span = 1;
    double m = 0.05 * span;
    box_ = {world.x0 - m, world.y0 - m, world.x1 + m, world.y1 + m};
    if (w <= 0) {
      box_.x0 -= span / 2;
      box_.x1 += span / 2;
    }
    if (h <= 0) {
      box_.y0 -= span / 2;
      box_.y1 += span / 2;
    }
    scale_ = std::min(o.width / (box_.x1 - box_.x0), o.height / (box_.y1 - box_.y0));
    ox_ = (o.width - scale_ * (box_.x1 - box_.x0)) / 2;
    oy_ = (o.height - scale_ * (box_.y1 - box_.y0)) / 2;
  }

  P2 map(P2 p) const { return {ox_ + scale_ * (p.x - box_.x0), o_.height - oy_ - scale_ * (p.y - box_.y0)}; }
  double scale() const { return scale_; }

  /// Portion of p + t d inside the box for t in [lo, inf) (lo = -inf for lines).
  std::optional<std::pair<P2, P2>> clip(P2 p, P2 d, double lo) const {
    double t0 = lo;
    double t1 = std::numeric_limits<double>::infinity();
    auto edge = [&](double q, double dp, double lo_b, double hi_b) {
      if (dp == 0) return q >= lo_b && q <= hi_b;
      double a = (lo_b - q) / dp;
      double b = (hi_b - q) / dp;
      if (a > b) std::swap(a, b);
      t0 = std::max(t0, a);
      t1 = std::min(t1, b);
      return true;
    };
    if (!edge(p.x, d.x, box_.x0, box_.x1) || !edge(p.y, d.y, box_.y0, box_.y1) || t0 >= t1) return std::nullopt;
    return std::make_pair(P2{p.x + t0 * d.x, p.y + t0 * d.y}, P2{p.x + t1 * d.x, p.y + t1 * d.y});
  }

 private:
  Options o_;
  Box box_;
  double scale_ = 1;
  double ox_ = 0;
  double oy_ = 0;
};

class Writer {
 public:
  explicit Writer(const Canvas& c) : c_(c) {}

  void line(P2 a, P2 b, Role r, const std::string& name) {
    P2 p = c_.map(a);
    P2 q = c_.map(b);
    out_ += "<line" + attrs(r) + id(name) + " x1=\"" + num(p.x) + "\" y1=\"" + num(p.y) + "\" x2=\"" + num(q.x) +
            "\" y2=\"" + num(q.y) + "\"/>\n";
  }

  void path(const std::vector<P2>& pts, bool closed, Role r, const std::string& name) {
    std::string d;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      P2 p = c_.map(pts[i]);
      d += (i ? " L " : "M ") + num(p.x) + " " + num(p.y);
    }
    if (closed) d += " Z";
    out_ += "<path" + attrs(r, closed) + id(name) + " d=\"" + d + "\"/>\n";
  }

  void circle(P2 c, double r, Role role, const std::string& name) {
    P2 p = c_.map(c);
    out_ += "<circle" + attrs(role) + id(name) + " cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"" +
            num(r * c_.scale()) + "\"/>\n";
  }

  void unbounded(P2 a, P2 b, double lo, const Item& it) {
    if (auto s = c_.clip(a, {b.x - a.x, b.y - a.y}, lo)) line(s->first, s->second, it.role, it.name);
  }

  void item(const Item& it) {
    std::visit(
        [&](const auto& x) {
          using X = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<X, Point>) {
            // drawn with the labels
          } else if constexpr (std::is_same_v<X, Segment>) {
            line(approx(x.a()), approx(x.b()), it.role, it.name);
          } else if constexpr (std::is_same_v<X, Line>) {
            unbounded(approx(x.p()), approx(x.q()), -std::numeric_limits<double>::infinity(), it);
          } else if constexpr (std::is_same_v<X, Ray>) {
            unbounded(approx(x.origin()), approx(x.through()), 0.0, it);
          } else if constexpr (std::is_same_v<X, Circle>) {
            circle(approx(x.center()), std::sqrt(x.radius2().to_double()), it.role, it.name);
          } else if constexpr (std::is_same_v<X, Angle>) {
            path({approx(x.arm1()), approx(x.vertex()), approx(x.arm2())}, false, it.role, it.name);
          } else {
            std::vector<P2> v;
            for (const auto& p : x.vertices()) v.push_back(approx(p));
            path(v, true, it.role, it.name);
          }
        },
        it.object);
  }

  void marker(P2 p) {
    P2 m = c_.map(p);
    out_ += "<circle class=\"point\" cx=\"" + num(m.x) + "\" cy=\"" + num(m.y) + "\" r=\"2.5\" fill=\"#000000\"/>\n";
  }

  void text(P2 screen, const std::string& s) {
    out_ += "<text x=\"" + num(screen.x) + "\" y=\"" + num(screen.y) +
            "\" font-family=\"serif\" font-size=\"14\" font-style=\"italic\">" + escape(s) + "</text>\n";
  }

  std::string& out() { return out_; }

 private:
  static std::string id(const std::string& name) { return name.empty() ? "" : " data-name=\"" + escape(name) + "\""; }
  const Canvas& c_;
  std::string out_;
};

}  // namespace

const char* to_string(Role r) {
  switch (r) {
    case Role::Given: return "given";
    case Role::Auxiliary: return "aux";
    case Role::Construction: return "construction";
    case Role::Result: return "result";
  }
  return "?";
}

Scene scene_of(const elements::PropositionResult& r) {
  Scene s;
  for (const auto& [n, o] : r.givens) {
    s.items.push_back({n, o, Role::Given});
    if (const auto* p = std::get_if<Point>(&o)) s.labels.emplace_back(n, *p);
  }
  for (const auto& st : r.trace.steps()) {
    if (!st.object) continue;
    switch (st.kind) {
      case elements::StepKind::Circle:
      case elements::StepKind::Extend: s.items.push_back({st.label, *st.object, Role::Auxiliary}); break;
      case elements::StepKind::Join: s.items.push_back({st.label, *st.object, Role::Construction}); break;
      default: break;
    }
  }
  for (const auto& [n, o] : r.objects) {
    if (!std::holds_alternative<Point>(o)) s.items.push_back({n, o, Role::Result});
  }
  for (const auto& l : r.labels) s.labels.push_back(l);
  return s;
}

std::string render(const Scene& s, const Options& o) {
  if (s.items.empty() && s.labels.empty()) throw NothingToRender("the scene is empty");
  // Last position per label name, in order of first appearance.
  std::vector<std::pair<std::string, Point>> labels;
  for (const auto& [n, p] : s.labels) {
    auto it = std::find_if(labels.begin(), labels.end(), [&](const auto& l) { return l.first == n; });
    if (it == labels.end()) labels.emplace_back(n, p);
    else it->second = p;
  }

  Box world;
  for (const auto& it : s.items) extent(world, it.object);
  for (const auto& [n, p] : labels) world.add(approx(p));
  Canvas canvas(world, o);
  Writer w(canvas);

  std::string& out = w.out();
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(o.width) +
         "\" height=\"" + std::to_string(o.height) + "\" viewBox=\"0 0 " + std::to_string(o.width) + " " +
         std::to_string(o.height) + "\">\n";
  if (!o.title.empty()) out += "<title>" + escape(o.title) + "</title>\n";
  for (Role r : {Role::Auxiliary, Role::Construction, Role::Given, Role::Result}) {
    for (const auto& it : s.items) {
      if (it.role == r) w.item(it);
    }
  }
  for (const auto& [n, p] : labels) w.marker(approx(p));
  if (o.labels) {
    // Northeast of the point, shifted clockwise past labels already placed.
    static const std::array<P2, 8> kOffsets{{{6, -6}, {8, 5}, {6, 16}, {-4, 20}, {-16, 16}, {-18, 5}, {-16, -6}, {-4, -10}}};
    std::vector<P2> placed;
    for (const auto& [n, p] : labels) {
      P2 m = canvas.map(approx(p));
      P2 chosen{m.x + kOffsets[0].x, m.y + kOffsets[0].y};
      for (const P2& d : kOffsets) {
        P2 c{m.x + d.x, m.y + d.y};
        bool clash = std::any_of(placed.begin(), placed.end(),
                                 [&](const P2& q) { return std::abs(q.x - c.x) < 10 && std::abs(q.y - c.y) < 12; });
        if (!clash) {
          chosen = c;
          break;
        }
      }
      placed.push_back(chosen);
      w.text(chosen, n);
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace euclid::render
