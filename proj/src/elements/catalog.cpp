#include "euclid/elements/catalog.hpp"

#include "euclid/error.hpp"

namespace euclid::elements {

namespace {

using T = ObjType;

std::vector<std::string> names_of(const auto& all) {
  std::vector<std::string> v;
  for (auto s : all) v.push_back(name(s));
  return v;
}

std::vector<Signature> build() {
  std::vector<Signature> v{
      {"I.1", false, {T::Segment}, true, {}, {{"triangle", T::Figure}, {"C", T::Point}}},
      {"I.2", false, {T::Point, T::Segment}, false, {}, {{"segment", T::Segment}, {"L", T::Point}}},
      {"I.3", false, {T::Segment, T::Segment}, false, {}, {{"segment", T::Segment}, {"E", T::Point}}},
      {"I.9", false, {T::Angle}, false, {}, {{"ray", T::Ray}, {"F", T::Point}}},
      {"I.10", false, {T::Segment}, false, {}, {{"midpoint", T::Point}, {"D", T::Point}}},
      {"I.11", false, {T::Line, T::Point}, true, {}, {{"line", T::Line}, {"F", T::Point}}},
      {"I.12", false, {T::Line, T::Point}, false, {}, {{"foot", T::Point}, {"line", T::Line}, {"H", T::Point}}},
      {"I.22",
       false,
       {T::Segment, T::Segment, T::Segment, T::Ray},
       true,
       {},
       {{"triangle", T::Figure}, {"K", T::Point}, {"G", T::Point}}},
      {"I.23", false, {T::Ray, T::Angle}, true, names_of(all_i23()), {{"angle", T::Angle}, {"ray", T::Ray}, {"X", T::Point}}},
      {"I.31", false, {T::Point, T::Line}, false, {}, {{"line", T::Line}, {"E", T::Point}}},
      {"I.42", false, {T::Figure, T::Angle}, false, names_of(all_i42()), {{"parallelogram", T::Figure}}},
      {"I.43",
       false,
       {T::Figure, T::Point},
       false,
       {},
       {{"complement1", T::Figure},
        {"complement2", T::Figure},
        {"parallelogram1", T::Figure},
        {"parallelogram2", T::Figure}}},
      {"I.44", false, {T::Segment, T::Figure, T::Angle}, true, names_of(all_i44()), {{"parallelogram", T::Figure}}},
      {"I.45",
       false,
       {T::Angle, T::Figure},
       false,
       {"alnayrizi", "euclid_superposition", "robert_of_chester", "campanus", "tinemue_equal_case"},
       {{"parallelogram", T::Figure}}},
      {"I.46", false, {T::Segment}, true, {"campanus_second", "campanus_first"}, {{"square", T::Figure}}},
  };
  for (const auto& id : theorem_ids()) {
    // The I.43 construction already verifies the theorem's conclusion.
    if (id == "I.43") continue;
    v.push_back({id, true, {}, false, {}, {}});
  }
  return v;
}

[[noreturn]] void mismatch(const std::string& id, const std::string& what) {
  throw PreconditionViolated(id + ": " + what);
}

template <class X>
const X& arg(const Bundle& args, std::size_t i) {
  return std::get<X>(args.at(i).second);
}

}  // namespace

const char* to_string(ObjType t) {
  switch (t) {
    case T::Point: return "point";
    case T::Segment: return "segment";
    case T::Line: return "line";
    case T::Ray: return "ray";
    case T::Circle: return "circle";
    case T::Angle: return "angle";
    case T::Figure: return "figure";
  }
  return "?";
}

std::optional<ObjType> parse_obj_type(std::string_view s) {
  for (T t : {T::Point, T::Segment, T::Line, T::Ray, T::Circle, T::Angle, T::Figure}) {
    if (s == to_string(t)) return t;
  }
  return std::nullopt;
}

ObjType type_of(const Object& o) { return static_cast<ObjType>(o.index()); }

const std::vector<Signature>& signatures() {
  static const std::vector<Signature> v = build();
  return v;
}

const Signature* find_signature(std::string_view id, std::string* strategy) {
  for (const auto& s : signatures()) {
    if (id.substr(0, s.id.size()) != s.id) continue;
    std::string_view rest = id.substr(s.id.size());
    if (!rest.empty() && rest.front() != '.') continue;
    std::string name;
    if (!rest.empty()) {
      rest.remove_prefix(1);
      if (s.id == "I.23") name = ::euclid::elements::name(parse_i23(rest));
      else if (s.id == "I.42") name = ::euclid::elements::name(parse_i42(rest));
      else if (s.id == "I.44" || s.id == "I.45") name = ::euclid::elements::name(parse_i44(rest));
      else if (s.id == "I.46") name = ::euclid::elements::name(parse_i46(rest));
      else throw StrategyInapplicable(s.id + " has no strategy '" + std::string(rest) + "'");
    }
    if (strategy) *strategy = name;
    return &s;
  }
  return nullptr;
}

PropositionResult invoke(std::string_view id_view, const Bundle& args, std::optional<Side> side) {
  std::string strategy;
  const Signature* sig = find_signature(id_view, &strategy);
  std::string id(id_view);
  if (!sig) throw UnknownProposition("no proposition " + id);
  if (sig->theorem) return check_theorem(sig->id, args);
  if (side && !sig->takes_side) mismatch(id, "takes no side");
  if (args.size() != sig->params.size()) {
    mismatch(id, "expects " + std::to_string(sig->params.size()) + " arguments, got " + std::to_string(args.size()));
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (type_of(args[i].second) != sig->params[i]) {
      mismatch(id, "argument " + std::to_string(i + 1) + " must be a " + to_string(sig->params[i]) + ", not a " +
                       type_name(args[i].second));
    }
  }
  Side s = side.value_or(Side::Left);
  const std::string& b = sig->id;
  if (b == "I.1") return p1_equilateral(arg<Segment>(args, 0), s);
  if (b == "I.2") return p2_place(arg<Point>(args, 0), arg<Segment>(args, 1));
  if (b == "I.3") return p3_cut(arg<Segment>(args, 0), arg<Segment>(args, 1));
  if (b == "I.9") return p9_bisect_angle(arg<Angle>(args, 0));
  if (b == "I.10") return p10_bisect_segment(arg<Segment>(args, 0));
  if (b == "I.11") return p11_perp_at(arg<Line>(args, 0), arg<Point>(args, 1), s);
  if (b == "I.12") return p12_perp_from(arg<Line>(args, 0), arg<Point>(args, 1));
  if (b == "I.22") {
    return p22_triangle(arg<Segment>(args, 0).length(), arg<Segment>(args, 1).length(),
                        arg<Segment>(args, 2).length(), arg<Ray>(args, 3), s);
  }
  if (b == "I.23") {
    I23Strategy st = strategy.empty() ? I23Strategy::Euclid : parse_i23(strategy);
    return p23_copy_angle(arg<Ray>(args, 0), arg<Angle>(args, 1), s, st);
  }
  if (b == "I.31") return p31_parallel(arg<Point>(args, 0), arg<Line>(args, 1));
  if (b == "I.42") {
    I42Strategy st = strategy.empty() ? I42Strategy::Euclid : parse_i42(strategy);
    return p42_parallelogram(arg<Figure>(args, 0), arg<Angle>(args, 1), st);
  }
  if (b == "I.43") return p43_result(arg<Figure>(args, 0), arg<Point>(args, 1));
  if (b == "I.44") {
    I44Strategy st = strategy.empty() ? I44Strategy::EuclidSuperposition : parse_i44(strategy);
    return p44_apply(arg<Segment>(args, 0), arg<Figure>(args, 1), arg<Angle>(args, 2), st, s);
  }
  if (b == "I.45") {
    I44Strategy st = strategy.empty() ? I44Strategy::Alnayrizi : parse_i44(strategy);
    return p45_apply_figure(arg<Angle>(args, 0), arg<Figure>(args, 1), st);
  }
  if (b == "I.46") {
    I46Strategy st = strategy.empty() ? I46Strategy::CampanusSecond : parse_i46(strategy);
    return p46_square(arg<Segment>(args, 0), s, st);
  }
  throw UnknownProposition("no proposition " + id);
}

}  // namespace euclid::elements
