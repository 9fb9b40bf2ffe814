#include "sturmlab/staircase.hpp"

#include <algorithm>
#include <cmath>

namespace sturmlab {

namespace {

// tail of the series beyond depth N for |x| <= xmag:
// sum_{n>N} 2^{-n-1} (|x| + n alpha + 1) <= (xmag + N + 4) * 2^{-N-1}
BallReal tail_bound(double xmag, long N, long prec) {
    BallReal t = BallReal::from_long(static_cast<long long>(std::ceil(xmag)) + N + 4, 64);
    return mul_pow2(t, -(N + 1)).round_to(prec);
}

// exact dyadic accumulator add: acc += v * 2^{-i-1}
void acc_add(mpfr_t acc, long long v, long i) {
    if (v == 0) return;
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_set_sj(t, v, MPFR_RNDN);
    mpfr_mul_2si(t, t, -(i + 1), MPFR_RNDN);
    mpfr_add(acc, acc, t, MPFR_RNDN);  // exact: acc carries depth + 96 bits
    mpfr_clear(t);
}

BallReal acc_finish(mpfr_t acc, long prec, double xmag, long N) {
    BallReal out(prec);
    int t = mpfr_set(out.mid_mut(), acc, MPFR_RNDN);
    mpfr_clear(acc);
    if (t != 0) {
        mpfr_t ulp;
        mpfr_init2(ulp, BallReal::radius_prec);
        mpfr_set_ui_2exp(ulp, 1, (mpfr_zero_p(out.mid()) ? 0 : mpfr_get_exp(out.mid())) - prec,
                         MPFR_RNDU);
        mpfr_add(out.rad_mut(), out.rad(), ulp, MPFR_RNDU);
        mpfr_clear(ulp);
    }
    return out.widened(tail_bound(xmag, N, prec));
}

// floor term for F, (ceil - 1) term for f, on a ball argument
std::optional<long long> term_value(const BallReal& w, bool lower) {
    if (lower) {
        auto c = w.ceil_exact();
        if (!c) return std::nullopt;
        return *c - 1;  // equals floor off integers; left limit on integers
    }
    return w.floor_exact();
}

struct StairParams {
    std::shared_ptr<const AlphaSpec> alpha;
    PrecisionPolicy pol;
    long min_depth;
    long depth_for(long prec) const { return std::max(min_depth, prec + 32); }
};

BallReal eval_affine_once(const StairParams& sp, const DyadicAffine& arg, bool lower,
                          long prec) {
    const long N = sp.depth_for(prec);
    BallReal a = sp.alpha->realize(prec + 16);
    BallReal w = add(arg.base.round_to(prec + 16), mul_long(a, arg.steps));

    mpfr_t acc;
    mpfr_init2(acc, N + 96);
    mpfr_set_zero(acc, 1);

    for (long i = 0; i <= N; ++i) {
        long long fl;
        if (arg.steps + i == 0) {
            // the jump term: argument is exactly the dyadic base
            auto f0 = arg.base.floor_exact();
            if (!f0) { mpfr_clear(acc); throw UndecidableFloor(i); }
            bool is_int = mpfr_integer_p(arg.base.mid());
            fl = (lower && is_int) ? *f0 - 1 : *f0;
        } else {
            auto f = term_value(w, lower);
            if (!f) { mpfr_clear(acc); throw UndecidableFloor(i); }
            fl = *f;
        }
        acc_add(acc, fl, i);
        if (i < N) w = add(w, a);
    }
    double xmag =
        std::abs(arg.base.mid_double()) + std::abs(static_cast<double>(arg.steps)) + 1;
    return acc_finish(acc, prec, xmag, N);
}

BallReal eval_affine(const StairParams& sp, const DyadicAffine& arg, bool lower, long prec) {
    long p = std::max(prec, sp.pol.start_bits);
    for (;;) {
        try {
            return eval_affine_once(sp, arg, lower, p);
        } catch (const UndecidableFloor&) {
            if (sp.pol.exhausted(p)) throw;
            p = sp.pol.next(p);
        }
    }
}

}  // namespace

Staircase::Staircase(std::shared_ptr<const AlphaSpec> alpha, PrecisionPolicy pol,
                     long min_depth)
    : alpha_(std::move(alpha)), pol_(pol), min_depth_(min_depth) {
    StairParams sp{alpha_, pol_, min_depth_};
    auto h = std::make_shared<StairHook>();
    h->eval = [sp](const DyadicAffine& arg, bool lower, long prec) {
        return eval_affine(sp, arg, lower, prec);
    };
    hook_ = std::move(h);
}

BallReal Staircase::eval(const DyadicAffine& arg, bool lower, long prec) const {
    return eval_affine({alpha_, pol_, min_depth_}, arg, lower, prec);
}

BallReal Staircase::eval_ball(const BallReal& x, bool lower, long prec) const {
    const long N = depth_for(prec);
    BallReal a = alpha_->realize(prec + 16);
    BallReal w = x.round_to(prec + 16);

    mpfr_t acc;
    mpfr_init2(acc, N + 96);
    mpfr_set_zero(acc, 1);
    for (long i = 0; i <= N; ++i) {
        auto f = term_value(w, lower);
        if (!f) { mpfr_clear(acc); throw UndecidableFloor(i); }
        acc_add(acc, *f, i);
        if (i < N) w = add(w, a);
    }
    return acc_finish(acc, prec, std::abs(x.mid_double()) + 1, N);
}

BallReal Staircase::eval_rational(const Rational& r, bool lower, long prec) const {
    long p = std::max(prec, pol_.start_bits);
    for (;;) {
        const long N = depth_for(p);
        BallReal a = alpha_->realize(p + 16);
        BallReal w = r.to_ball(p + 16);
        mpfr_t acc;
        mpfr_init2(acc, N + 96);
        mpfr_set_zero(acc, 1);
        bool ok = true;
        for (long i = 0; i <= N && ok; ++i) {
            long long fl = 0;
            if (i == 0) {
                fl = (lower && r.is_integer()) ? r.num - 1 : r.floor_val();
            } else {
                auto f = term_value(w, lower);
                if (f) fl = *f;
                else ok = false;
            }
            if (ok) acc_add(acc, fl, i);
            if (i < N) w = add(w, a);
        }
        if (ok) return acc_finish(acc, p, std::abs(r.to_ball(64).mid_double()) + 1, N);
        mpfr_clear(acc);
        if (pol_.exhausted(p)) throw UndecidableFloor(-1);
        p = pol_.next(p);
    }
}

CirclePoint Staircase::stair_point(DyadicAffine u, long prec, bool lower) const {
    StairRef s;
    s.arg = std::move(u);
    s.lower = lower;
    return CirclePoint::from_stair(std::move(s), alpha_, hook_, prec);
}

BallReal Staircase::inverse(const BallReal& y, const Refiner& refine_y,
                            long out_radius_log2) const {
    // bracket from x + alpha - 1 <= f(x) <= F(x) <= x + alpha:
    // h_tilde(y) lies in [y - alpha, y - alpha + 1]
    long p = std::max(y.prec(), pol_.start_bits);
    BallReal a = alpha_->realize(p);

    mpfr_t lo, hi, mid;
    long wp = out_radius_log2 + 96;
    mpfr_inits2(wp, lo, hi, mid, nullptr);
    {
        mpfr_t t;
        mpfr_init2(t, wp);
        mpfr_sub(t, y.mid(), a.mid(), MPFR_RNDD);
        mpfr_sub_d(t, t, 0.25, MPFR_RNDD);
        mpfr_floor(lo, t);              // dyadic strictly below y - alpha
        mpfr_add_ui(hi, lo, 3, MPFR_RNDN);  // dyadic strictly above y - alpha + 1
        mpfr_clear(t);
    }

    BallReal ycur = y;
    auto cmp3 = [&](mpfr_srcptr m) -> int {
        // 1: y above F(m);  -1: y below f(m);  0: inside plateau;  2: cap hit
        long q = std::max<long>(pol_.start_bits, ycur.prec());
        for (;;) {
            DyadicAffine arg;
            arg.base = BallReal(wp);
            mpfr_set(arg.base.mid_mut(), m, MPFR_RNDN);
            BallReal Fm, fm;
            try {
                Fm = eval(arg, false, q);
                fm = eval(arg, true, q);
            } catch (const UndecidableFloor&) {
                return 2;
            }
            Ordering up = compare(ycur, Fm);
            if (up == Ordering::Greater) return 1;
            Ordering dn = compare(ycur, fm);
            if (dn == Ordering::Less) return -1;
            if (up == Ordering::Less && dn == Ordering::Greater) return 0;
            if (pol_.exhausted(q)) return 2;
            q = pol_.next(q);
            if (refine_y) ycur = refine_y(q);
        }
    };

    mpfr_t width, target;
    mpfr_inits2(64, width, target, nullptr);
    mpfr_set_ui_2exp(target, 1, static_cast<mpfr_exp_t>(-out_radius_log2), MPFR_RNDN);
    for (;;) {
        mpfr_sub(width, hi, lo, MPFR_RNDU);
        if (mpfr_cmp(width, target) <= 0) break;
        mpfr_add(mid, lo, hi, MPFR_RNDN);
        mpfr_div_2si(mid, mid, 1, MPFR_RNDN);
        int c = cmp3(mid);
        if (c == 1) mpfr_set(lo, mid, MPFR_RNDN);
        else if (c == -1) mpfr_set(hi, mid, MPFR_RNDN);
        else if (c == 0) { mpfr_set(lo, mid, MPFR_RNDN); mpfr_set(hi, mid, MPFR_RNDN); break; }
        else break;  // precision cap: return the current certified bracket
    }

    BallReal out(wp + 4);
    mpfr_add(out.mid_mut(), lo, hi, MPFR_RNDN);  // exact at wp + 4 bits
    mpfr_div_2si(out.mid_mut(), out.mid(), 1, MPFR_RNDN);
    mpfr_sub(width, hi, lo, MPFR_RNDU);
    mpfr_div_2si(width, width, 1, MPFR_RNDU);
    mpfr_set(out.rad_mut(), width, MPFR_RNDU);
    mpfr_clears(lo, hi, mid, nullptr);
    mpfr_clears(width, target, nullptr);
    return out;
}

CirclePoint Staircase::factor(const CirclePoint& x, bool use_pedigree,
                              long out_radius_log2) const {
    if (use_pedigree && x.stair()) {
        // h(pi(F(u))) = h(pi(f(u))) = pi(u)
        return CirclePoint::from_affine(x.stair()->arg, alpha_, x.prec());
    }
    Refiner ry;
    if (x.refinable()) {
        CirclePoint xc = x;
        ry = [xc](long q) { return xc.refined(q).rep(); };
    }
    BallReal ht = inverse(x.rep(), ry, out_radius_log2);
    return CirclePoint::from_ball(ht);
}

}  // namespace sturmlab
