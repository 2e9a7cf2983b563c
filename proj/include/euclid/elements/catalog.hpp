#pragma once

// Uniform access to the proposition catalog by identifier, shared by the
// script interpreter, the verification suites and the command line.
//
// Identifiers are "I.<n>" optionally followed by ".<strategy>", e.g.
// "I.44.alnayrizi". Constructions take positional arguments; theorem
// validators take named ones (see theorem_schema).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "euclid/elements/propositions.hpp"

namespace euclid::elements {

enum class ObjType { Point, Segment, Line, Ray, Circle, Angle, Figure };

const char* to_string(ObjType t);
std::optional<ObjType> parse_obj_type(std::string_view s);
ObjType type_of(const Object& o);

struct Signature {
  std::string id;  // base id, e.g. "I.44"
  bool theorem = false;
  std::vector<ObjType> params;               // constructions only
  bool takes_side = false;                   // accepts a side option
  std::vector<std::string> strategies;       // stable names, first is the default
  std::vector<std::pair<std::string, ObjType>> outputs;
};

/// Every construction and theorem, in catalog order.
const std::vector<Signature>& signatures();

/// Splits "I.44.alnayrizi" into the base signature and the strategy name
/// (empty when absent). Returns nullptr for unknown bases; throws
/// StrategyInapplicable for strategies the base does not have.
const Signature* find_signature(std::string_view id, std::string* strategy = nullptr);

/// Runs the proposition. Constructions read `args` positionally (names are
/// ignored) and check their types; theorems read them by name. Throws
/// UnknownProposition, PreconditionViolated on argument mismatch, or any
/// construction error.
PropositionResult invoke(std::string_view id, const Bundle& args, std::optional<Side> side = std::nullopt);

}  // namespace euclid::elements
