#pragma once

#include <memory>

#include "sturmlab/alpha.hpp"
#include "sturmlab/ball.hpp"
#include "sturmlab/certify.hpp"
#include "sturmlab/circle.hpp"
#include "sturmlab/errors.hpp"
#include "sturmlab/prec.hpp"

namespace sturmlab {

// The staircase pair
//   F(x) = sum_{n>=0} 2^{-n-1} floor(x + n alpha)       (right-continuous)
//   f(x) = sum_{n>=0} 2^{-n-1} (ceil(x + n alpha) - 1)  (left-continuous)
// truncated at a precision-driven depth with the tail folded into the ball
// radius, so truncation is sound rather than silent.
//
// Arguments of the form b + k*alpha (b exact dyadic) evaluate every term
// exactly: the term at index n = -k is the integer b itself, all others are
// irrational and decided by escalation. Jump points are exactly these
// arguments, and the one-sided limits come out of the floor/ceil split.
class Staircase {
public:
    Staircase(std::shared_ptr<const AlphaSpec> alpha, PrecisionPolicy pol = {},
              long min_depth = 200);

    const std::shared_ptr<const AlphaSpec>& alpha() const { return alpha_; }
    const PrecisionPolicy& policy() const { return pol_; }

    // enclosure at working precision >= prec; escalates internally on
    // undecidable floors (possible for exact arguments), throws
    // UndecidableFloor only at the policy cap
    BallReal eval(const DyadicAffine& arg, bool lower, long prec) const;

    // generic ball argument; UndecidableFloor when a term straddles an
    // integer at the given enclosure width
    BallReal eval_ball(const BallReal& x, bool lower, long prec) const;

    // upper staircase value F(r) for an exact rational r (terms n >= 1 are
    // irrational; n = 0 is floor(r), exact)
    BallReal eval_rational(const Rational& r, bool lower, long prec) const;

    // hook for circle points that are staircase values
    std::shared_ptr<const StairHook> hook() const { return hook_; }

    CirclePoint stair_point(DyadicAffine u, long prec, bool lower = false) const;

    // h-tilde: the unique x with f(x) <= y <= F(x). Monotone bisection with
    // certified comparisons. The result is always a sound enclosure; it
    // reaches 2^-out_radius_log2 whenever y stays decidably clear of plateau
    // edges, and otherwise returns the tightest certified bracket.
    BallReal inverse(const BallReal& y, const Refiner& refine_y,
                     long out_radius_log2 = 80) const;

    // circle factor map h(pi(x)) = pi(h_tilde(x)). With use_pedigree, points
    // carrying staircase provenance map exactly (h(pi(F(u))) = pi(u));
    // otherwise the inverse is computed by bisection.
    CirclePoint factor(const CirclePoint& x, bool use_pedigree = true,
                       long out_radius_log2 = 60) const;

    long depth_for(long prec) const { return std::max(min_depth_, prec + 32); }

private:
    std::shared_ptr<const AlphaSpec> alpha_;
    PrecisionPolicy pol_;
    long min_depth_;
    std::shared_ptr<const StairHook> hook_;

    BallReal eval_once(const DyadicAffine& arg, bool lower, long prec) const;
};

}  // namespace sturmlab
