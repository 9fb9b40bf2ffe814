#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "sturmlab/alpha.hpp"
#include "sturmlab/ball.hpp"
#include "sturmlab/rational.hpp"

namespace sturmlab {

// b + k*alpha with b an exact dyadic (zero-radius ball).
struct DyadicAffine {
    BallReal base;
    long long steps = 0;
};

// Tag for points known to be staircase values: x = pi(F(arg)) (or pi(f(arg))
// when lower). The evaluator hook is installed by the staircase module, so a
// point can be re-realized at any precision and keeps its provenance under
// the doubling map.
struct StairRef {
    DyadicAffine arg;
    bool lower = false;
};

struct StairHook {
    std::function<BallReal(const DyadicAffine&, bool lower, long prec)> eval;
};

// A circle point: an enclosure of the representative in [0,1), plus optional
// exact structure used for drift-free orbits and precision escalation.
class CirclePoint {
public:
    CirclePoint() = default;

    static CirclePoint from_ball(BallReal lift);  // no refinement possible
    static CirclePoint from_rational(const Rational& r, long prec);
    static CirclePoint from_affine(DyadicAffine a, std::shared_ptr<const AlphaSpec> alpha,
                                   long prec);
    static CirclePoint from_stair(StairRef s, std::shared_ptr<const AlphaSpec> alpha,
                                  std::shared_ptr<const StairHook> hook, long prec);
    // generic re-realizable point; `lift` returns the unreduced real
    static CirclePoint from_realizer(std::function<BallReal(long)> lift, long prec);

    const BallReal& rep() const { return rep_; }
    long prec() const { return rep_.prec(); }

    const std::optional<Rational>& rational() const { return rat_; }
    const std::optional<DyadicAffine>& affine() const { return affine_; }
    const std::optional<StairRef>& stair() const { return stair_; }
    const std::shared_ptr<const AlphaSpec>& alpha() const { return alpha_; }

    bool refinable() const;
    CirclePoint refined(long prec) const;   // same point, tighter enclosure

    CirclePoint doubled() const;            // x -> 2x mod 1 (exact on rationals)
    CirclePoint rotated() const;            // x -> x + alpha mod 1 (needs alpha)
    CirclePoint halved() const;             // principal preimage in [0, 1/2)
    CirclePoint antipode() const;           // x + 1/2 mod 1

private:
    BallReal rep_;
    std::optional<Rational> rat_;
    std::optional<DyadicAffine> affine_;
    std::optional<StairRef> stair_;
    std::shared_ptr<const AlphaSpec> alpha_;
    std::shared_ptr<const StairHook> hook_;
    std::function<BallReal(long)> custom_;

    BallReal lift_at(long prec) const;
};

// Reduce a real enclosure to its circle representative in [0,1). Exact
// (no rounding) whenever the input radius is below 1/4.
BallReal reduce_mod1(const BallReal& x);

// Arc-length distance, min over integer shifts of |r - s|; values in [0, 1/2].
BallReal circle_distance(const CirclePoint& x, const CirclePoint& y);
BallReal circle_distance(const BallReal& xrep, const BallReal& yrep);

}  // namespace sturmlab
