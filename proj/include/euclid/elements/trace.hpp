#pragma once

// Construction traces and proposition results.
//
// A Trace is the ordered record of how a construction was produced: postulate
// applications, intersection selections, superpositions and nested
// sub-constructions. Counters are kept both for the direct steps of a trace
// and in total over all nested sub-constructions.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "euclid/geom/geom.hpp"

namespace euclid::elements {

using geom::Angle;
using geom::Circle;
using geom::Figure;
using geom::Line;
using geom::Point;
using geom::Ray;
using geom::Segment;
using geom::Side;

using Object = std::variant<Point, Segment, Line, Ray, Circle, Angle, Figure>;

/// "point", "segment", "line", "ray", "circle", "angle" or "figure".
const char* type_name(const Object& o);
/// Largest radical depth among the object's coordinates.
int radical_depth(const Object& o);
/// Deterministic text form with 6-digit coordinates.
std::string describe(const Object& o);

enum class StepKind { Join, Extend, Circle, Pick, Superpose, Sub };
const char* to_string(StepKind k);

class Trace;

struct Step {
  StepKind kind;
  std::string label;  // name of the produced object, e.g. "AB", "BCD", "C"
  std::string note;   // provenance: postulate, selector, proposition id
  std::optional<Object> object;
  std::shared_ptr<const Trace> sub;  // StepKind::Sub only
  int radical_depth = 0;
};

struct Counts {
  int joins = 0;           // Postulate 1
  int extends = 0;         // Postulate 2
  int circles = 0;         // Postulate 3
  int picks = 0;
  int superpositions = 0;
  int subconstructions = 0;
  int max_radical_depth = 0;
  int objects = 0;
};

class Trace {
 public:
  void add(Step s);
  const std::vector<Step>& steps() const { return steps_; }
  /// Steps of this trace only.
  Counts direct() const;
  /// Including every nested sub-construction.
  Counts total() const;
  /// Indented line-oriented form; byte-identical for identical constructions.
  std::string serialize() const;

 private:
  void serialize_into(std::string& out, int indent) const;
  std::vector<Step> steps_;
};

/// A checked postcondition.
struct Claim {
  std::string text;
  bool pass = true;
  std::string residual;  // exact residual ("0" when it vanishes) or the decided quantity
};

struct PropositionResult {
  std::string id;  // e.g. "I.44.alnayrizi"
  std::vector<std::pair<std::string, Object>> givens;
  std::vector<std::pair<std::string, Object>> objects;
  std::vector<std::pair<std::string, Point>> labels;  // every lettered point, in order of appearance
  Trace trace;
  std::vector<Claim> verification;
  std::map<std::string, long> metrics;

  bool has(const std::string& name) const;
  /// Throws std::out_of_range for unknown names.
  const Object& get(const std::string& name) const;
  const Point& point(const std::string& name) const;
  const Figure& figure(const std::string& name) const;
  const Line& line(const std::string& name) const;
  const Angle& angle(const std::string& name) const;
  const Ray& ray(const std::string& name) const;
  const Segment& segment(const std::string& name) const;

  /// One claim per line: `<claim> | PASS | <residual>`.
  std::string report() const;
};

/// Renders an exact residual for reports: "0" when it vanishes, the
/// canonical prefix form when small, otherwise a 12-digit approximation.
std::string residual_text(const Constructible& r);

}  // namespace euclid::elements
