#include "sturmlab/ball.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>

namespace sturmlab {

long PrecisionPolicy::default_precision() {
    static long cached = [] {
        const char* e = std::getenv("STURMLAB_PRECISION");
        if (!e) return 128L;
        long v = std::strtol(e, nullptr, 10);
        if (v < 64) v = 64;
        if (v > (1L << 20)) v = 1L << 20;
        return v;
    }();
    return cached;
}

namespace {

// Half-ulp upper bound on the rounding error of a round-to-nearest midpoint
// operation. `fallback_exp` is used when the result is zero but inexact.
void bump_radius(mpfr_ptr rad, mpfr_srcptr result, int ternary, mpfr_exp_t fallback_exp) {
    if (ternary == 0) return;
    mpfr_exp_t e = mpfr_zero_p(result) ? fallback_exp : mpfr_get_exp(result);
    mpfr_t ulp;
    mpfr_init2(ulp, BallReal::radius_prec);
    mpfr_set_ui_2exp(ulp, 1, e - mpfr_get_prec(result) - 1, MPFR_RNDU);
    mpfr_add(rad, rad, ulp, MPFR_RNDU);
    mpfr_clear(ulp);
}

mpfr_exp_t safe_exp(mpfr_srcptr x) {
    return mpfr_zero_p(x) ? mpfr_get_emin() / 4 : mpfr_get_exp(x);
}

}  // namespace

BallReal::BallReal() : BallReal(PrecisionPolicy::default_precision()) {}

BallReal::BallReal(long prec) {
    mpfr_init2(mid_, std::max<long>(prec, MPFR_PREC_MIN));
    mpfr_init2(rad_, radius_prec);
    mpfr_set_zero(mid_, 1);
    mpfr_set_zero(rad_, 1);
}

BallReal::BallReal(const BallReal& o) {
    mpfr_init2(mid_, mpfr_get_prec(o.mid_));
    mpfr_init2(rad_, radius_prec);
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

BallReal::BallReal(BallReal&& o) noexcept {
    mpfr_init2(mid_, MPFR_PREC_MIN);
    mpfr_init2(rad_, radius_prec);
    mpfr_swap(mid_, o.mid_);
    mpfr_swap(rad_, o.rad_);
}

BallReal& BallReal::operator=(const BallReal& o) {
    if (this != &o) {
        mpfr_set_prec(mid_, mpfr_get_prec(o.mid_));
        mpfr_set(mid_, o.mid_, MPFR_RNDN);
        mpfr_set(rad_, o.rad_, MPFR_RNDU);
    }
    return *this;
}

BallReal& BallReal::operator=(BallReal&& o) noexcept {
    if (this != &o) {
        mpfr_swap(mid_, o.mid_);
        mpfr_swap(rad_, o.rad_);
    }
    return *this;
}

BallReal::~BallReal() {
    mpfr_clear(mid_);
    mpfr_clear(rad_);
}

BallReal BallReal::from_long(long long v, long prec) {
    BallReal b(prec);
    int t = mpfr_set_sj(b.mid_, v, MPFR_RNDN);
    bump_radius(b.rad_, b.mid_, t, 64);
    return b;
}

BallReal BallReal::from_double(double v, long prec) {
    BallReal b(std::max<long>(prec, 64));
    mpfr_set_d(b.mid_, v, MPFR_RNDN);  // exact: prec >= 53
    return b;
}

BallReal BallReal::from_ratio(long long num, long long den, long prec) {
    BallReal b(prec);
    mpfr_t n;
    mpfr_init2(n, 64);
    mpfr_set_sj(n, num, MPFR_RNDN);
    int t = mpfr_div_si(b.mid_, n, static_cast<long>(den), MPFR_RNDN);
    bump_radius(b.rad_, b.mid_, t, safe_exp(b.mid_));
    mpfr_clear(n);
    return b;
}

BallReal BallReal::from_decimal(const std::string& s, long prec) {
    BallReal b(prec);
    int t = mpfr_set_str(b.mid_, s.c_str(), 10, MPFR_RNDN);
    if (t == -1 && mpfr_nan_p(b.mid_)) throw ConfigError("bad decimal literal: " + s);
    // mpfr_set_str returns 0 on success without ternary info; assume one ulp.
    bump_radius(b.rad_, b.mid_, 1, safe_exp(b.mid_));
    return b;
}

BallReal BallReal::pi(long prec) {
    BallReal b(prec);
    int t = mpfr_const_pi(b.mid_, MPFR_RNDN);
    bump_radius(b.rad_, b.mid_, t, 2);
    return b;
}

BallReal BallReal::sqrt_long(long long v, long prec) {
    BallReal b(prec);
    mpfr_t x;
    mpfr_init2(x, 64);
    mpfr_set_sj(x, v, MPFR_RNDN);
    int t = mpfr_sqrt(b.mid_, x, MPFR_RNDN);
    bump_radius(b.rad_, b.mid_, t, safe_exp(b.mid_));
    mpfr_clear(x);
    return b;
}

BallReal BallReal::pow2(long e, long prec) {
    BallReal b(prec);
    mpfr_set_ui_2exp(b.mid_, 1, e, MPFR_RNDN);
    return b;
}

void BallReal::endpoints(mpfr_t lo, mpfr_t hi) const {
    mpfr_sub(lo, mid_, rad_, MPFR_RNDD);
    mpfr_add(hi, mid_, rad_, MPFR_RNDU);
}

double BallReal::lo_double() const {
    mpfr_t lo;
    mpfr_init2(lo, 64);
    mpfr_sub(lo, mid_, rad_, MPFR_RNDD);
    double d = mpfr_get_d(lo, MPFR_RNDD);
    mpfr_clear(lo);
    return d;
}

double BallReal::hi_double() const {
    mpfr_t hi;
    mpfr_init2(hi, 64);
    mpfr_add(hi, mid_, rad_, MPFR_RNDU);
    double d = mpfr_get_d(hi, MPFR_RNDU);
    mpfr_clear(hi);
    return d;
}

bool BallReal::contains_zero() const {
    mpfr_t a;
    mpfr_init2(a, radius_prec);
    mpfr_abs(a, mid_, MPFR_RNDU);
    bool r = mpfr_cmp(a, rad_) <= 0;
    mpfr_clear(a);
    return r;
}

bool BallReal::contains(const BallReal& inner) const {
    // |m_i - m_o| + r_i <= r_o, evaluated outward
    mpfr_t d;
    mpfr_init2(d, std::max(prec(), inner.prec()) + 8);
    mpfr_sub(d, inner.mid_, mid_, MPFR_RNDA);
    mpfr_abs(d, d, MPFR_RNDU);
    mpfr_add(d, d, inner.rad_, MPFR_RNDU);
    bool r = mpfr_cmp(d, rad_) <= 0;
    mpfr_clear(d);
    return r;
}

bool BallReal::overlaps(const BallReal& o) const {
    return compare(*this, o) == Ordering::Undecidable;
}

Ordering BallReal::sign() const {
    if (mpfr_zero_p(mid_) && is_exact()) return Ordering::Undecidable;  // exact zero: neither
    mpfr_t a;
    mpfr_init2(a, radius_prec);
    mpfr_abs(a, mid_, MPFR_RNDD);
    bool decided = mpfr_cmp(a, rad_) > 0;
    mpfr_clear(a);
    if (!decided) return Ordering::Undecidable;
    return mpfr_sgn(mid_) > 0 ? Ordering::Greater : Ordering::Less;
}

std::optional<long long> BallReal::floor_exact() const {
    mpfr_t lo, hi, fl, fh;
    long p = prec() + 8;
    mpfr_inits2(p, lo, hi, fl, fh, nullptr);
    endpoints(lo, hi);
    mpfr_floor(fl, lo);
    mpfr_floor(fh, hi);
    std::optional<long long> out;
    if (mpfr_equal_p(fl, fh) && mpfr_fits_intmax_p(fl, MPFR_RNDN))
        out = mpfr_get_sj(fl, MPFR_RNDN);
    mpfr_clears(lo, hi, fl, fh, nullptr);
    return out;
}

std::optional<long long> BallReal::ceil_exact() const {
    mpfr_t lo, hi, cl, ch;
    long p = prec() + 8;
    mpfr_inits2(p, lo, hi, cl, ch, nullptr);
    endpoints(lo, hi);
    mpfr_ceil(cl, lo);
    mpfr_ceil(ch, hi);
    std::optional<long long> out;
    if (mpfr_equal_p(cl, ch) && mpfr_fits_intmax_p(cl, MPFR_RNDN))
        out = mpfr_get_sj(cl, MPFR_RNDN);
    mpfr_clears(lo, hi, cl, ch, nullptr);
    return out;
}

BallReal BallReal::round_to(long prec) const {
    BallReal b(prec);
    int t = mpfr_set(b.mid_, mid_, MPFR_RNDN);
    mpfr_set(b.rad_, rad_, MPFR_RNDU);
    bump_radius(b.rad_, b.mid_, t, safe_exp(b.mid_));
    return b;
}

BallReal BallReal::widened(const BallReal& extra) const {
    BallReal b(*this);
    mpfr_t e;
    mpfr_init2(e, radius_prec);
    mpfr_abs(e, extra.mid_, MPFR_RNDU);
    mpfr_add(e, e, extra.rad_, MPFR_RNDU);
    mpfr_add(b.rad_, b.rad_, e, MPFR_RNDU);
    mpfr_clear(e);
    return b;
}

std::string BallReal::str(int digits) const {
    char* ms = nullptr;
    mpfr_asprintf(&ms, "%.*Rg", digits, mid_);
    std::string out(ms);
    mpfr_free_str(ms);
    if (!is_exact()) {
        char* rs = nullptr;
        mpfr_asprintf(&rs, "%.2Re", rad_);
        out += " +/- ";
        out += rs;
        mpfr_free_str(rs);
    }
    return out;
}

Ordering compare(const BallReal& a, const BallReal& b) {
    // a < b certified iff a.hi < b.lo
    long p = std::max(a.prec(), b.prec()) + 8;
    mpfr_t alo, ahi, blo, bhi;
    mpfr_inits2(p, alo, ahi, blo, bhi, nullptr);
    a.endpoints(alo, ahi);
    b.endpoints(blo, bhi);
    Ordering out = Ordering::Undecidable;
    if (mpfr_cmp(ahi, blo) < 0)
        out = Ordering::Less;
    else if (mpfr_cmp(bhi, alo) < 0)
        out = Ordering::Greater;
    mpfr_clears(alo, ahi, blo, bhi, nullptr);
    return out;
}

namespace {

BallReal binary_op(const BallReal& a, const BallReal& b,
                   int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t),
                   bool is_mul, bool is_div) {
    long p = std::max(a.prec(), b.prec());
    BallReal r(p);
    int t = op(r.mid_mut(), a.mid(), b.mid(), MPFR_RNDN);

    mpfr_t rr, tmp, am, bm;
    mpfr_inits2(BallReal::radius_prec, rr, tmp, am, bm, nullptr);
    if (is_mul) {
        // |a|rb + |b|ra + ra rb
        mpfr_abs(am, a.mid(), MPFR_RNDU);
        mpfr_abs(bm, b.mid(), MPFR_RNDU);
        mpfr_mul(rr, am, b.rad(), MPFR_RNDU);
        mpfr_mul(tmp, bm, a.rad(), MPFR_RNDU);
        mpfr_add(rr, rr, tmp, MPFR_RNDU);
        mpfr_mul(tmp, a.rad(), b.rad(), MPFR_RNDU);
        mpfr_add(rr, rr, tmp, MPFR_RNDU);
    } else if (is_div) {
        // enclosure via endpoint division handled by caller; not used here
        mpfr_set_zero(rr, 1);
    } else {
        mpfr_add(rr, a.rad(), b.rad(), MPFR_RNDU);
    }
    mpfr_add(r.rad_mut(), r.rad(), rr, MPFR_RNDU);
    mpfr_clears(rr, tmp, am, bm, nullptr);

    bump_radius(r.rad_mut(), r.mid(), t,
                std::max(safe_exp(a.mid()), safe_exp(b.mid())));
    return r;
}

}  // namespace

BallReal add(const BallReal& a, const BallReal& b) {
    return binary_op(a, b, mpfr_add, false, false);
}

BallReal sub(const BallReal& a, const BallReal& b) {
    return binary_op(a, b, mpfr_sub, false, false);
}

BallReal mul(const BallReal& a, const BallReal& b) {
    return binary_op(a, b, mpfr_mul, true, false);
}

BallReal div(const BallReal& a, const BallReal& b) {
    // require b bounded away from 0
    if (b.contains_zero()) throw EvaluationUndecidable("ball division by enclosure of 0");
    long p = std::max(a.prec(), b.prec());
    // endpoint method: r = [a]/[b] as hull of the four endpoint quotients
    mpfr_t alo, ahi, blo, bhi, q, lo, hi;
    mpfr_inits2(p + 8, alo, ahi, blo, bhi, q, lo, hi, nullptr);
    a.endpoints(alo, ahi);
    b.endpoints(blo, bhi);
    bool first = true;
    for (mpfr_srcptr x : {static_cast<mpfr_srcptr>(alo), static_cast<mpfr_srcptr>(ahi)})
        for (mpfr_srcptr y : {static_cast<mpfr_srcptr>(blo), static_cast<mpfr_srcptr>(bhi)}) {
            mpfr_div(q, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(q, lo) < 0) mpfr_set(lo, q, MPFR_RNDD);
            mpfr_div(q, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(q, hi) > 0) mpfr_set(hi, q, MPFR_RNDU);
            first = false;
        }
    BallReal r(p);
    int t = mpfr_add(r.mid_mut(), lo, hi, MPFR_RNDN);
    mpfr_div_2si(r.mid_mut(), r.mid(), 1, MPFR_RNDN);
    mpfr_sub(q, hi, lo, MPFR_RNDU);
    mpfr_div_2si(q, q, 1, MPFR_RNDU);
    mpfr_set(r.rad_mut(), q, MPFR_RNDU);
    bump_radius(r.rad_mut(), r.mid(), t ? t : 1, safe_exp(r.mid()));
    mpfr_clears(alo, ahi, blo, bhi, q, lo, hi, nullptr);
    return r;
}

BallReal neg(const BallReal& a) {
    BallReal r(a);
    mpfr_neg(r.mid_mut(), r.mid(), MPFR_RNDN);
    return r;
}

BallReal abs_ball(const BallReal& a) {
    BallReal r(a);
    mpfr_abs(r.mid_mut(), r.mid(), MPFR_RNDN);
    return r;
}

BallReal add_long(const BallReal& a, long long v) {
    BallReal r(a.prec());
    mpfr_t x;
    mpfr_init2(x, 64);
    mpfr_set_sj(x, v, MPFR_RNDN);
    int t = mpfr_add(r.mid_mut(), a.mid(), x, MPFR_RNDN);
    mpfr_set(r.rad_mut(), a.rad(), MPFR_RNDU);
    bump_radius(r.rad_mut(), r.mid(), t, safe_exp(a.mid()));
    mpfr_clear(x);
    return r;
}

BallReal mul_long(const BallReal& a, long long v) {
    BallReal r(a.prec());
    int t = mpfr_mul_si(r.mid_mut(), a.mid(), static_cast<long>(v), MPFR_RNDN);
    mpfr_t av;
    mpfr_init2(av, BallReal::radius_prec);
    mpfr_set_sj(av, v < 0 ? -v : v, MPFR_RNDU);
    mpfr_mul(r.rad_mut(), a.rad(), av, MPFR_RNDU);
    bump_radius(r.rad_mut(), r.mid(), t, safe_exp(r.mid()));
    mpfr_clear(av);
    return r;
}

BallReal div_long(const BallReal& a, long long v) {
    if (v == 0) throw EvaluationUndecidable("division by zero");
    BallReal r(a.prec());
    int t = mpfr_div_si(r.mid_mut(), a.mid(), static_cast<long>(v), MPFR_RNDN);
    mpfr_t av;
    mpfr_init2(av, BallReal::radius_prec);
    mpfr_set_sj(av, v < 0 ? -v : v, MPFR_RNDD);
    mpfr_div(r.rad_mut(), a.rad(), av, MPFR_RNDU);
    bump_radius(r.rad_mut(), r.mid(), t, safe_exp(r.mid()));
    mpfr_clear(av);
    return r;
}

BallReal mul_pow2(const BallReal& a, long e) {
    BallReal r(a);
    mpfr_mul_2si(r.mid_mut(), r.mid(), e, MPFR_RNDN);   // exact
    mpfr_mul_2si(r.rad_mut(), r.rad(), e, MPFR_RNDU);
    return r;
}

BallReal sqr(const BallReal& a) {
    // image of [lo, hi] under x^2: [0 or min(lo^2, hi^2), max(lo^2, hi^2)]
    long p = a.prec();
    mpfr_t lo, hi, l2, h2, rlo, rhi;
    mpfr_inits2(p + 8, lo, hi, l2, h2, rlo, rhi, nullptr);
    a.endpoints(lo, hi);
    mpfr_sqr(l2, lo, MPFR_RNDU);
    mpfr_sqr(h2, hi, MPFR_RNDU);
    mpfr_max(rhi, l2, h2, MPFR_RNDU);
    if (mpfr_sgn(lo) <= 0 && mpfr_sgn(hi) >= 0) {
        mpfr_set_zero(rlo, 1);
    } else {
        mpfr_sqr(l2, lo, MPFR_RNDD);
        mpfr_sqr(h2, hi, MPFR_RNDD);
        mpfr_min(rlo, l2, h2, MPFR_RNDD);
    }
    BallReal r(p);
    mpfr_add(r.mid_mut(), rlo, rhi, MPFR_RNDN);
    mpfr_div_2si(r.mid_mut(), r.mid(), 1, MPFR_RNDN);
    mpfr_sub(rhi, rhi, rlo, MPFR_RNDU);
    mpfr_div_2si(rhi, rhi, 1, MPFR_RNDU);
    mpfr_set(r.rad_mut(), rhi, MPFR_RNDU);
    bump_radius(r.rad_mut(), r.mid(), 1, safe_exp(r.mid()));
    mpfr_clears(lo, hi, l2, h2, rlo, rhi, nullptr);
    return r;
}

BallReal sqrt(const BallReal& a) {
    // monotone: endpoint evaluation, intersected with the domain x >= 0
    long p = a.prec();
    mpfr_t lo, hi, slo, shi;
    mpfr_inits2(p + 8, lo, hi, slo, shi, nullptr);
    a.endpoints(lo, hi);
    if (mpfr_sgn(hi) < 0) {
        mpfr_clears(lo, hi, slo, shi, nullptr);
        throw EvaluationUndecidable("sqrt of a negative enclosure");
    }
    if (mpfr_sgn(lo) < 0) mpfr_set_zero(lo, 1);
    mpfr_sqrt(slo, lo, MPFR_RNDD);
    mpfr_sqrt(shi, hi, MPFR_RNDU);
    BallReal r(p);
    mpfr_add(r.mid_mut(), slo, shi, MPFR_RNDN);
    mpfr_div_2si(r.mid_mut(), r.mid(), 1, MPFR_RNDN);
    mpfr_sub(hi, shi, slo, MPFR_RNDU);
    mpfr_div_2si(hi, hi, 1, MPFR_RNDU);
    mpfr_set(r.rad_mut(), hi, MPFR_RNDU);
    bump_radius(r.rad_mut(), r.mid(), 1, safe_exp(r.mid()));
    mpfr_clears(lo, hi, slo, shi, nullptr);
    return r;
}

BallReal log(const BallReal& a) {
    long p = a.prec();
    mpfr_t lo, hi, llo, lhi;
    mpfr_inits2(p + 8, lo, hi, llo, lhi, nullptr);
    a.endpoints(lo, hi);
    if (mpfr_sgn(lo) <= 0) {
        mpfr_clears(lo, hi, llo, lhi, nullptr);
        throw EvaluationUndecidable("log of enclosure reaching 0");
    }
    mpfr_log(llo, lo, MPFR_RNDD);
    mpfr_log(lhi, hi, MPFR_RNDU);
    BallReal r(p);
    mpfr_add(r.mid_mut(), llo, lhi, MPFR_RNDN);
    mpfr_div_2si(r.mid_mut(), r.mid(), 1, MPFR_RNDN);
    mpfr_sub(hi, lhi, llo, MPFR_RNDU);
    mpfr_div_2si(hi, hi, 1, MPFR_RNDU);
    mpfr_set(r.rad_mut(), hi, MPFR_RNDU);
    bump_radius(r.rad_mut(), r.mid(), 1, safe_exp(r.mid()));
    mpfr_clears(lo, hi, llo, lhi, nullptr);
    return r;
}

BallReal exp(const BallReal& a) {
    long p = a.prec();
    mpfr_t lo, hi, elo, ehi;
    mpfr_inits2(p + 8, lo, hi, elo, ehi, nullptr);
    a.endpoints(lo, hi);
    mpfr_exp(elo, lo, MPFR_RNDD);
    mpfr_exp(ehi, hi, MPFR_RNDU);
    BallReal r(p);
    mpfr_add(r.mid_mut(), elo, ehi, MPFR_RNDN);
    mpfr_div_2si(r.mid_mut(), r.mid(), 1, MPFR_RNDN);
    mpfr_sub(hi, ehi, elo, MPFR_RNDU);
    mpfr_div_2si(hi, hi, 1, MPFR_RNDU);
    mpfr_set(r.rad_mut(), hi, MPFR_RNDU);
    bump_radius(r.rad_mut(), r.mid(), 1, safe_exp(r.mid()));
    mpfr_clears(lo, hi, elo, ehi, nullptr);
    return r;
}

namespace {

// cos/sin of 2*pi*x: midpoint evaluation plus derivative bound 2*pi*r.
BallReal trig2pi(const BallReal& x, bool is_cos) {
    long p = x.prec();
    BallReal r(p);
    mpfr_t angle, tp;
    mpfr_inits2(p + 16, angle, tp, nullptr);
    mpfr_const_pi(tp, MPFR_RNDN);
    mpfr_mul_2si(tp, tp, 1, MPFR_RNDN);
    mpfr_mul(angle, tp, x.mid(), MPFR_RNDN);
    int t = is_cos ? mpfr_cos(r.mid_mut(), angle, MPFR_RNDN)
                   : mpfr_sin(r.mid_mut(), angle, MPFR_RNDN);
    // radius: 2*pi*rad(x) + pi-rounding slack + result ulp
    mpfr_t rr;
    mpfr_init2(rr, BallReal::radius_prec);
    mpfr_set_d(rr, 6.2831853072, MPFR_RNDU);
    mpfr_mul(rr, rr, x.rad(), MPFR_RNDU);
    // angle rounding: |x| * ulp(2pi) + ulp(angle); covered by 4 ulp of angle
    mpfr_t au;
    mpfr_init2(au, BallReal::radius_prec);
    mpfr_set_ui_2exp(au, 4, safe_exp(angle) - (p + 16), MPFR_RNDU);
    mpfr_add(rr, rr, au, MPFR_RNDU);
    mpfr_add(r.rad_mut(), r.rad(), rr, MPFR_RNDU);
    bump_radius(r.rad_mut(), r.mid(), t ? t : 1, 1);
    mpfr_clears(angle, tp, nullptr);
    mpfr_clears(rr, au, nullptr);
    return r;
}

}  // namespace

BallReal cos2pi(const BallReal& x) { return trig2pi(x, true); }
BallReal sin2pi(const BallReal& x) { return trig2pi(x, false); }

BallReal min_enclosure(const BallReal& a, const BallReal& b) {
    // enclosure of min: [min(lo_a,lo_b), min(hi_a,hi_b)]
    long p = std::max(a.prec(), b.prec());
    mpfr_t alo, ahi, blo, bhi, lo, hi;
    mpfr_inits2(p + 8, alo, ahi, blo, bhi, lo, hi, nullptr);
    a.endpoints(alo, ahi);
    b.endpoints(blo, bhi);
    mpfr_min(lo, alo, blo, MPFR_RNDD);
    mpfr_min(hi, ahi, bhi, MPFR_RNDU);
    BallReal r(p);
    mpfr_add(r.mid_mut(), lo, hi, MPFR_RNDN);
    mpfr_div_2si(r.mid_mut(), r.mid(), 1, MPFR_RNDN);
    mpfr_sub(hi, hi, lo, MPFR_RNDU);
    mpfr_div_2si(hi, hi, 1, MPFR_RNDU);
    mpfr_set(r.rad_mut(), hi, MPFR_RNDU);
    bump_radius(r.rad_mut(), r.mid(), 1, safe_exp(r.mid()));
    mpfr_clears(alo, ahi, blo, bhi, lo, hi, nullptr);
    return r;
}

BallReal max_enclosure(const BallReal& a, const BallReal& b) {
    return neg(min_enclosure(neg(a), neg(b)));
}

BallReal hull(const BallReal& a, const BallReal& b) {
    long p = std::max(a.prec(), b.prec());
    mpfr_t alo, ahi, blo, bhi, lo, hi;
    mpfr_inits2(p + 8, alo, ahi, blo, bhi, lo, hi, nullptr);
    a.endpoints(alo, ahi);
    b.endpoints(blo, bhi);
    mpfr_min(lo, alo, blo, MPFR_RNDD);
    mpfr_max(hi, ahi, bhi, MPFR_RNDU);
    BallReal r(p);
    mpfr_add(r.mid_mut(), lo, hi, MPFR_RNDN);
    mpfr_div_2si(r.mid_mut(), r.mid(), 1, MPFR_RNDN);
    mpfr_sub(hi, hi, lo, MPFR_RNDU);
    mpfr_div_2si(hi, hi, 1, MPFR_RNDU);
    mpfr_set(r.rad_mut(), hi, MPFR_RNDU);
    bump_radius(r.rad_mut(), r.mid(), 1, safe_exp(r.mid()));
    mpfr_clears(alo, ahi, blo, bhi, lo, hi, nullptr);
    return r;
}

}  // namespace sturmlab
