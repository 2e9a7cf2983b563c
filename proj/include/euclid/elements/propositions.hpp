#pragma once

/**
 * @file propositions.hpp
 * @brief The Book I problems as verified constructions.
 *
 * Each operation performs the construction with the postulate primitives,
 * records a Trace, checks its postconditions exactly and returns the named
 * objects under the letters of the classical figure. A failed postcondition
 * raises PostconditionFailed; a returned result has only passing claims.
 *
 * Orientation parameters name the half-plane relative to the defining
 * directed segment or ray and default to its left ("upper") side.
 *
 * Output names (besides the lettered points of each figure):
 *   I.1  triangle, C          I.2  segment, L           I.3  segment, E
 *   I.9  ray, F               I.10 midpoint, D          I.11 line, F
 *   I.12 foot, line, H        I.22 triangle, K          I.23 angle, ray
 *   I.31 line, E              I.42 parallelogram        I.43 complement1, complement2
 *   I.44 parallelogram        I.45 parallelogram        I.46 square
 */

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "euclid/elements/trace.hpp"

namespace euclid::elements {

enum class I23Strategy { Euclid, Proclus, Albertus, Commandinus, Clavius, Campanus };
enum class I42Strategy { Euclid, Alnayrizi };
enum class I44Strategy { EuclidSuperposition, Alnayrizi, RobertOfChester, Campanus, TinemueEqualCase };
enum class I46Strategy { CampanusFirst, CampanusSecond };

const std::vector<I23Strategy>& all_i23();
const std::vector<I42Strategy>& all_i42();
const std::vector<I44Strategy>& all_i44();
const std::vector<I46Strategy>& all_i46();

/// Stable names: "euclid", "proclus", ..., "euclid_superposition",
/// "robert_of_chester", "tinemue_equal_case", "campanus_first", ...
std::string name(I23Strategy s);
std::string name(I42Strategy s);
std::string name(I44Strategy s);
std::string name(I46Strategy s);
/// Accept the stable names and the identifier suffixes (".chester", ".tinemue", ...).
/// Throw StrategyInapplicable for unknown names.
I23Strategy parse_i23(std::string_view s);
I42Strategy parse_i42(std::string_view s);
I44Strategy parse_i44(std::string_view s);
I46Strategy parse_i46(std::string_view s);

PropositionResult p1_equilateral(const Segment& ab, Side side = Side::Left);

/// Places at `a` a segment AL equal to bc. When a coincides with bc.a the
/// given segment is returned re-anchored, without construction.
PropositionResult p2_place(const Point& a, const Segment& bc);

/// Cuts from `greater` (from its first endpoint) a segment equal to `less`.
PropositionResult p3_cut(const Segment& greater, const Segment& less);

PropositionResult p9_bisect_angle(const Angle& a);
PropositionResult p10_bisect_segment(const Segment& s);
/// Perpendicular to l at p (on l), erected towards `side` of l's direction.
PropositionResult p11_perp_at(const Line& l, const Point& p, Side side = Side::Left);
/// Perpendicular to l from p (off l); the foot is H.
PropositionResult p12_perp_from(const Line& l, const Point& p);

/// Triangle KFG with F at base.origin, G along base, KF = a, FG = b, GK = c,
/// K on `side` of the base ray. Requires the strict triangle inequality.
PropositionResult p22_triangle(const Constructible& a, const Constructible& b, const Constructible& c, const Ray& base,
                               Side side = Side::Left);
PropositionResult place_triangle_on_ray(const Constructible& a, const Constructible& b, const Constructible& c,
                                        const Ray& base, Side side = Side::Left);

/// Angle at target.origin with one arm along target, equal to `model`, the
/// other arm on `side` of the target ray.
PropositionResult p23_copy_angle(const Ray& target, const Angle& model, Side side = Side::Left,
                                 I23Strategy strategy = I23Strategy::Euclid);

/// Parallel to l through p. When p lies on l, returns l with metric
/// "coincident" = 1.
PropositionResult p31_parallel(const Point& p, const Line& l);

/// Parallelogram FECG equal to triangle t = (A, B, C) with angle CEF equal to d.
PropositionResult p42_parallelogram(const Figure& t, const Angle& d, I42Strategy strategy = I42Strategy::Euclid);
/// As p42, with the side EC laid along `base` from its origin and the
/// parallelogram on `side` of it.
PropositionResult p42_on_ray(const Figure& t, const Angle& d, const Ray& base, Side side = Side::Left,
                             I42Strategy strategy = I42Strategy::Euclid);

/// Complements of the parallelograms about the diameter AC of ABCD through
/// k. Returns (EBFK, HKGD).
std::pair<Figure, Figure> p43_complements(const Figure& pg, const Point& k);
PropositionResult p43_result(const Figure& pg, const Point& k);

/// Parallelogram with ab as a full side, angle at ab.a equal to d (the side
/// through ab.a turning towards `side`), equal in content to t.
PropositionResult p44_apply(const Segment& ab, const Figure& t, const Angle& d,
                            I44Strategy strategy = I44Strategy::EuclidSuperposition, Side side = Side::Left);

/// Parallelogram in angle d equal to the simple figure f; metric "triangles"
/// counts the pieces of the triangulation.
PropositionResult p45_apply_figure(const Angle& d, const Figure& f, I44Strategy inner = I44Strategy::Alnayrizi);

/// Square on ab towards `side`.
PropositionResult p46_square(const Segment& ab, Side side = Side::Left,
                             I46Strategy strategy = I46Strategy::CampanusSecond);

/// Named objects handed to a theorem validator.
using Bundle = std::vector<std::pair<std::string, Object>>;

/// Ids accepted by check_theorem, in catalog order.
const std::vector<std::string>& theorem_ids();
/// The bundle a validator expects, e.g. "t1: triangle ABC, t2: triangle DEF".
std::string theorem_schema(std::string_view id);
/// Evaluates the theorem's conclusion exactly on the instance. Every claim is
/// recorded with its outcome (a false conclusion is reported, not raised).
/// Throws HypothesisNotSatisfied when the bundle does not match the
/// hypothesis, UnknownProposition for unknown ids.
PropositionResult check_theorem(std::string_view id, const Bundle& bundle);

/// Ear-clipping triangulation of a simple polygon (fan for convex input).
/// Throws NotSimple.
std::vector<Figure> triangulate(const Figure& f);

}  // namespace euclid::elements
