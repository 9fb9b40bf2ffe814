#include "sturmlab/circle.hpp"

#include <cmath>

#include "sturmlab/errors.hpp"

namespace sturmlab {

BallReal reduce_mod1(const BallReal& x) {
    // subtract floor(mid); for circle work the representative only needs to
    // land in [0,1) up to the carried radius
    mpfr_t fl;
    mpfr_init2(fl, x.prec() + 8);
    mpfr_floor(fl, x.mid());
    BallReal r(x);
    int t = mpfr_sub(r.mid_mut(), r.mid(), fl, MPFR_RNDN);
    if (t != 0) {
        // widen by one ulp of the result
        mpfr_t ulp;
        mpfr_init2(ulp, BallReal::radius_prec);
        mpfr_exp_t e = mpfr_zero_p(r.mid()) ? 0 : mpfr_get_exp(r.mid());
        mpfr_set_ui_2exp(ulp, 1, e - r.prec(), MPFR_RNDU);
        mpfr_add(r.rad_mut(), r.rad(), ulp, MPFR_RNDU);
        mpfr_clear(ulp);
    }
    mpfr_clear(fl);
    return r;
}

CirclePoint CirclePoint::from_ball(BallReal lift) {
    CirclePoint p;
    p.rep_ = reduce_mod1(lift);
    return p;
}

CirclePoint CirclePoint::from_rational(const Rational& r, long prec) {
    CirclePoint p;
    Rational m = r.mod1();
    p.rat_ = m;
    p.rep_ = m.to_ball(prec);
    return p;
}

CirclePoint CirclePoint::from_affine(DyadicAffine a, std::shared_ptr<const AlphaSpec> alpha,
                                     long prec) {
    CirclePoint p;
    p.alpha_ = std::move(alpha);
    p.affine_ = std::move(a);
    p.rep_ = reduce_mod1(p.lift_at(prec));
    return p;
}

CirclePoint CirclePoint::from_stair(StairRef s, std::shared_ptr<const AlphaSpec> alpha,
                                    std::shared_ptr<const StairHook> hook, long prec) {
    CirclePoint p;
    p.alpha_ = std::move(alpha);
    p.stair_ = std::move(s);
    p.hook_ = std::move(hook);
    p.rep_ = reduce_mod1(p.lift_at(prec));
    return p;
}

CirclePoint CirclePoint::from_realizer(std::function<BallReal(long)> lift, long prec) {
    CirclePoint p;
    p.custom_ = std::move(lift);
    p.rep_ = reduce_mod1(p.custom_(prec));
    return p;
}

bool CirclePoint::refinable() const {
    return rat_ || affine_ || stair_ || custom_;
}

BallReal CirclePoint::lift_at(long prec) const {
    if (rat_) return rat_->to_ball(prec);
    if (affine_) {
        BallReal v = affine_->base.round_to(prec);
        if (affine_->steps != 0)
            v = add(v, mul_long(alpha_->realize(prec + 8), affine_->steps));
        return v;
    }
    if (stair_) return hook_->eval(stair_->arg, stair_->lower, prec);
    if (custom_) return custom_(prec);
    return rep_;
}

CirclePoint CirclePoint::refined(long prec) const {
    if (!refinable() || prec <= rep_.prec()) return *this;
    CirclePoint p(*this);
    p.rep_ = reduce_mod1(lift_at(prec));
    return p;
}

CirclePoint CirclePoint::doubled() const {
    CirclePoint p;
    p.alpha_ = alpha_;
    p.rep_ = reduce_mod1(mul_pow2(rep_, 1));
    if (rat_) {
        p.rat_ = Rational(rat_->num * 2, rat_->den).mod1();
        return p;
    }
    if (affine_) {
        DyadicAffine a;
        a.base = mul_pow2(affine_->base, 1);
        a.steps = affine_->steps * 2;
        p.affine_ = std::move(a);
        return p;
    }
    if (stair_) {
        // 2 F(u) = floor(u) + F(u + alpha), so the doubled point is again a
        // staircase value, at argument u + alpha
        StairRef s = *stair_;
        s.arg.steps += 1;
        p.stair_ = std::move(s);
        p.hook_ = hook_;
        return p;
    }
    if (custom_) {
        auto c = custom_;
        p.custom_ = [c](long prec) { return mul_pow2(c(prec + 2), 1); };
    }
    return p;
}

CirclePoint CirclePoint::rotated() const {
    if (!alpha_) throw ConfigError("rotation needs an alpha-bound point");
    CirclePoint p;
    p.alpha_ = alpha_;
    p.rep_ = reduce_mod1(add(rep_, alpha_->realize(rep_.prec() + 8)));
    if (affine_) {
        DyadicAffine a = *affine_;
        a.steps += 1;
        p.affine_ = std::move(a);
        return p;
    }
    if (rat_) {
        Rational r = *rat_;
        auto alpha = alpha_;
        p.custom_ = [r, alpha](long prec) {
            return add(r.to_ball(prec), alpha->realize(prec + 8));
        };
        return p;
    }
    if (stair_ || custom_) {
        auto self = *this;
        p.custom_ = [self](long prec) {
            return add(self.lift_at(prec), self.alpha_->realize(prec + 8));
        };
    }
    return p;
}

CirclePoint CirclePoint::halved() const {
    CirclePoint p;
    p.alpha_ = alpha_;
    p.rep_ = mul_pow2(rep_, -1);
    if (rat_) p.rat_ = Rational(rat_->num, rat_->den * 2);
    return p;
}

CirclePoint CirclePoint::antipode() const {
    CirclePoint p;
    p.alpha_ = alpha_;
    BallReal half = mul_pow2(BallReal::from_long(1, rep_.prec()), -1);
    p.rep_ = reduce_mod1(add(rep_, half));
    if (rat_) p.rat_ = (*rat_ + Rational(1, 2)).mod1();
    if (affine_) {
        DyadicAffine a = *affine_;
        a.base = add(a.base.round_to(a.base.prec() + 2),
                     mul_pow2(BallReal::from_long(1, 64), -1));
        p.affine_ = std::move(a);
    }
    if (stair_ || custom_) {
        auto self = *this;
        p.custom_ = [self](long prec) {
            return add(self.lift_at(prec), mul_pow2(BallReal::from_long(1, 64), -1));
        };
    }
    return p;
}

BallReal circle_distance(const BallReal& xrep, const BallReal& yrep) {
    long p = std::max(xrep.prec(), yrep.prec());
    BallReal t = sub(xrep, yrep);  // in (-1-r, 1+r)
    BallReal c0 = abs_ball(t);
    BallReal c1 = abs_ball(add_long(t, -1));
    BallReal c2 = abs_ball(add_long(t, 1));
    BallReal d = min_enclosure(min_enclosure(c0, c1), c2);
    // clamp at 0: distance is nonnegative by definition
    return max_enclosure(d, BallReal::from_long(0, p));
}

BallReal circle_distance(const CirclePoint& x, const CirclePoint& y) {
    return circle_distance(x.rep(), y.rep());
}

}  // namespace sturmlab
