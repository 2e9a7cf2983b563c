#pragma once

// Constructions shared between the proposition files.

#include "euclid/elements/propositions.hpp"

namespace euclid::elements::detail {

/// I.22 with squared lengths: F at base.origin, G at sqrt(b2) along base,
/// KF^2 = a2, GK^2 = c2, K on `side`. Outputs "triangle" KFG, "K", "G".
PropositionResult triangle_on_ray(const char* id, const Constructible& a2, const Constructible& b2,
                                  const Constructible& c2, const Ray& base, Side side);

/// Arm point of the angle equal to `model` at r.origin: at distance
/// |model.u| from it, on `side` of r.
Point copied_arm(const Ray& r, const Angle& model, Side side);

}  // namespace euclid::elements::detail
