#pragma once

#include <functional>

#include "sturmlab/ball.hpp"
#include "sturmlab/prec.hpp"

namespace sturmlab {

using Refiner = std::function<BallReal(long prec)>;  // may be empty

// Compare with automatic precision escalation: whenever the enclosures
// overlap, both sides are re-realized at doubled precision until the policy
// cap. Returns Undecidable only at the cap.
Ordering certified_compare(BallReal a, const Refiner& ra, BallReal b, const Refiner& rb,
                           const PrecisionPolicy& pol);

}  // namespace sturmlab
