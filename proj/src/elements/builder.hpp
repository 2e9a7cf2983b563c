#pragma once

// Recording front-end over the geometry primitives used by every
// construction: each postulate application, selection and sub-construction
// is appended to the trace as it happens.

#include <deque>
#include <functional>
#include <string>
#include <vector>

#include "euclid/elements/trace.hpp"
#include "euclid/error.hpp"

namespace euclid::elements::detail {

using geom::End;
using geom::Isometry;
using geom::Vec;

class Builder {
 public:
  explicit Builder(std::string id) { result_.id = std::move(id); }

  void given(const std::string& name, Object o);
  /// Registers a lettered point (for labels) without a construction step.
  Point letter(const std::string& name, const Point& p);

  // Postulate 1
  Segment join(const std::string& name, const Point& a, const Point& b);
  Line join_line(const std::string& name, const Point& a, const Point& b);
  // Postulate 2: the straight line from `from` through `through`, produced beyond `through`.
  Ray produce(const std::string& name, const Point& from, const Point& through);
  // Postulate 3
  Circle circle(const std::string& name, const Point& center, const Point& through);
  /// Circle whose distance is carried from elsewhere in the figure (I.2).
  Circle carried_circle(const std::string& name, const Point& center, const Constructible& radius2,
                        const std::string& carried_from);

  Point pick(const std::string& name, const std::vector<Point>& candidates, const std::string& selector,
             const std::function<bool(const Point&)>& accept);
  /// Candidate `index` (0-based) in canonical order.
  Point pick_index(const std::string& name, const std::vector<Point>& candidates, std::size_t index);
  Point pick_side(const std::string& name, const std::vector<Point>& candidates, const Line& l, Side side);
  /// The candidates lie on the ray's line; the first not behind the origin.
  Point pick_on_ray(const std::string& name, const std::vector<Point>& candidates, const Ray& r);
  /// Meeting point of two straight lines (Postulate 5 discharged exactly).
  Point meet(const std::string& name, const Line& l1, const Line& l2);

  Isometry superpose(const std::string& name, const Segment& from, const Segment& to, Side side);

  /// Records a completed sub-construction and returns it.
  const PropositionResult& sub(PropositionResult r);

  /// Lays off from the origin of `r` a length whose square is `length2`
  /// (I.3 with the distance carried by I.2). Returns the exact point.
  Point cut(const std::string& name, const Ray& r, const Constructible& length2, const std::string& carried_from);

  /// Replaces a constructed point by an equal closed form, after checking
  /// the equality exactly.
  Point settle(const std::string& name, const Point& constructed, const Point& closed);

  void check_zero(const std::string& text, const Constructible& residual);
  void check_positive(const std::string& text, const Constructible& value);
  void check(const std::string& text, bool ok, const std::string& detail = "0");
  /// Records a claim without raising on failure.
  void record(const std::string& text, bool ok, const std::string& detail = "0");

  void output(const std::string& name, Object o);
  void metric(const std::string& name, long v) { result_.metrics[name] = v; }

  const PropositionResult& current() const { return result_; }
  PropositionResult finish() { return std::move(result_); }

 private:
  void add(StepKind kind, const std::string& label, const std::string& note, std::optional<Object> o);
  PropositionResult result_;
  std::deque<PropositionResult> subs_;
};

/// Unit-free helpers shared by the constructions.
Constructible half();
/// Length ratio sqrt(num2 / den2) for squared lengths.
Constructible ratio_of(const Constructible& num2, const Constructible& den2);
/// Point at distance sqrt(length2) from r.origin along r.
Point along(const Ray& r, const Constructible& length2);
/// Vector making with u the angle of `model`, rotated towards `side`, with
/// length |u| |model.u| |model.v| (rational whenever the inputs are).
Vec rotated_like(const Vec& u, const Angle& model, Side side);
Side side_of(const Line& l, const Point& p);

}  // namespace euclid::elements::detail
