#pragma once

#include <memory>
#include <mutex>
#include <vector>
#include <string>

#include "sturmlab/cocycle.hpp"
#include "sturmlab/modulation.hpp"

namespace sturmlab {

// diag(gamma, 1/gamma) * rotation; exponent over an irrational rotation is
// c = log((gamma + 1/gamma) / 2), with gamma = e^c + sqrt(e^{2c} - 1).
struct HermanParams {
    double gamma = 2.0;
    double c = 0.0;

    static HermanParams from_gamma(double g);
    static HermanParams from_c(double c);
};

Mat2d herman_matrix(const HermanParams& hp, double x);
Mat2b herman_matrix_ball(const HermanParams& hp, const BallReal& x, long prec);

CocycleSpec herman_cocycle(const HermanParams& hp, std::shared_ptr<const AlphaSpec> alpha);

// Parametrized family B_t(y) with the product bound ||B_t^(n)(y)|| <= e^{M(t)}
// for t > 0, and B_0 = Herman.
//
//   pure-rotation:  B_t(y) = U(y) for t > 0 (all products orthogonal)
//   max-stress:     B_t(y) = C_t U(y) C_t^{-1}, C_t = diag(e^{M(t)/2}, e^{-M(t)/2});
//                   products telescope to C_t U(sum) C_t^{-1}, so the bound is
//                   attained up to the angle hitting a quarter turn.
//
// Both realizations are discontinuous at t = 0; they satisfy every
// quantitative hypothesis the traversal and sweep bounds consume, which is
// what this laboratory verifies. No continuity claim is attached to them.
enum class FamilyKind { PureRotation, MaxStress };

FamilyKind family_kind_from_string(const std::string& s);
std::string to_string(FamilyKind k);

class BFamily {
public:
    BFamily(FamilyKind kind, HermanParams herman, std::shared_ptr<const Modulation> mod);

    FamilyKind kind() const { return kind_; }
    const HermanParams& herman() const { return herman_; }
    const Modulation& modulation() const { return *mod_; }

    Mat2d eval(double t, double y) const;           // t > 0
    Mat2d at_zero(double y) const;                  // Herman
    Mat2b eval_ball(const BallReal& t, const BallReal& y, long prec) const;
    Mat2b at_zero_ball(const BallReal& y, long prec) const;

    double log_bound(double t) const { return mod_->M_of_double(t); }

private:
    FamilyKind kind_;
    HermanParams herman_;
    std::shared_ptr<const Modulation> mod_;
};

// A(x) = B_{psi(x)}(h(x)) over the doubling map. Gap points short-circuit to
// the cached h value pi(-n alpha); points carrying staircase provenance
// certify membership in K symbolically (pi(F(b + k alpha)) with b dyadic can
// only touch a gap closure when k <= 0 and b is an integer) and evaluate
// through the conjugacy. Everything else goes through classification.
class AssembledCocycle {
public:
    AssembledCocycle(BFamily family, std::shared_ptr<const GapTable> gaps);

    const BFamily& family() const { return family_; }
    const GapTable& gaps() const { return *gaps_; }
    const Modulation& modulation() const { return family_.modulation(); }

    Mat2d eval(const CirclePoint& x) const;
    Mat2b eval_ball(const CirclePoint& x, long prec) const;

    // h with the gap cache and provenance shortcut
    CirclePoint factor_point(const CirclePoint& x) const;

    CocycleSpec spec() const;  // over the doubling map

    // cached h constants pi(-n alpha) per gap
    CirclePoint gap_image(long n) const;

private:
    struct ImageCache {
        std::mutex mu;
        std::vector<CirclePoint> images;
    };

    BFamily family_;
    std::shared_ptr<const GapTable> gaps_;
    std::shared_ptr<ImageCache> images_ = std::make_shared<ImageCache>();

    bool pedigree_in_K(const CirclePoint& x) const;
};

}  // namespace sturmlab
