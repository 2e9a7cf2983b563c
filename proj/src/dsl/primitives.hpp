#pragma once

// Tables of script functions and assertion predicates shared by the checker
// and the interpreter. max_args == 0 means unbounded.

#include <cstddef>
#include <string_view>

namespace euclid::dsl {

struct Primitive {
  const char* name;
  std::size_t min_args;
  std::size_t max_args;
  const char* result;
};

inline constexpr Primitive kPrimitives[] = {
    {"join", 2, 2, "segment"},      // Postulate 1
    {"line", 2, 2, "line"},         // Postulate 1, produced both ways
    {"extend", 2, 2, "ray"},        // Postulate 2
    {"circle", 2, 2, "circle"},     // Postulate 3
    {"intersect", 2, 2, "point"},
    {"angle", 3, 3, "angle"},       // vertex first
    {"polygon", 3, 0, "figure"},
};

struct Predicate {
  const char* name;
  std::size_t min_args;
  std::size_t max_args;
  const char* type;
  bool line_like;
};

inline constexpr Predicate kPredicates[] = {
    {"seg_eq", 2, 0, "segment", false},  {"angle_eq", 2, 0, "angle", false}, {"area_eq", 2, 0, "figure", false},
    {"parallel", 2, 2, "line", true},    {"right_angle", 1, 1, "angle", false},
    {"collinear", 3, 0, "point", false},
};

inline const Primitive* find_primitive(std::string_view name) {
  for (const auto& p : kPrimitives) {
    if (name == p.name) return &p;
  }
  return nullptr;
}

inline const Predicate* find_predicate(std::string_view name) {
  for (const auto& p : kPredicates) {
    if (name == p.name) return &p;
  }
  return nullptr;
}

}  // namespace euclid::dsl
