#pragma once

#include <cstdint>

#define MPFR_USE_INTMAX_T 1
#include <mpfr.h>

#include <optional>
#include <string>
#include <utility>

#include "sturmlab/errors.hpp"
#include "sturmlab/prec.hpp"

namespace sturmlab {

enum class Ordering { Less, Greater, Undecidable };

// Midpoint-radius real over MPFR. Every operation returns an enclosure of
// the exact result: the midpoint is computed in round-to-nearest and the
// rounding error is folded into the radius, which is kept at a small fixed
// precision and always rounded up. A radius of zero marks an exact value.
//
// Comparisons certify an order only when the enclosures are disjoint;
// callers that hold re-realizable operands escalate precision and retry.
class BallReal {
public:
    BallReal();                       // exact 0 at default precision
    explicit BallReal(long prec);     // exact 0 at given precision
    BallReal(const BallReal& o);
    BallReal(BallReal&& o) noexcept;
    BallReal& operator=(const BallReal& o);
    BallReal& operator=(BallReal&& o) noexcept;
    ~BallReal();

    static BallReal from_long(long long v, long prec);
    static BallReal from_double(double v, long prec);            // exact
    static BallReal from_ratio(long long num, long long den, long prec);
    static BallReal from_decimal(const std::string& s, long prec);
    static BallReal pi(long prec);
    static BallReal sqrt_long(long long v, long prec);           // v >= 0
    static BallReal pow2(long e, long prec);                     // exact 2^e

    long prec() const { return mpfr_get_prec(mid_); }
    bool is_exact() const { return mpfr_zero_p(rad_); }
    double mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }
    double rad_double() const { return mpfr_get_d(rad_, MPFR_RNDU); }

    // Certified endpoints (outward-rounded at `prec` bits).
    void endpoints(mpfr_t lo, mpfr_t hi) const;
    double lo_double() const;
    double hi_double() const;

    bool contains_zero() const;
    bool contains(const BallReal& inner) const;   // enclosure containment
    bool overlaps(const BallReal& o) const;

    // Sign certification; Undecidable when the enclosure straddles 0.
    Ordering sign() const;

    // Largest integer k with k <= every point of the ball equals the one
    // for the upper end: defined only when both endpoints share a floor.
    std::optional<long long> floor_exact() const;
    std::optional<long long> ceil_exact() const;

    BallReal round_to(long prec) const;   // re-round midpoint, widen radius
    BallReal widened(const BallReal& extra_rad) const;

    std::string str(int digits = 20) const;

    // raw access for the implementation layer
    mpfr_srcptr mid() const { return mid_; }
    mpfr_srcptr rad() const { return rad_; }
    mpfr_ptr mid_mut() { return mid_; }
    mpfr_ptr rad_mut() { return rad_; }

    static constexpr mpfr_prec_t radius_prec = 32;

private:
    mpfr_t mid_;
    mpfr_t rad_;
};

Ordering compare(const BallReal& a, const BallReal& b);

BallReal add(const BallReal& a, const BallReal& b);
BallReal sub(const BallReal& a, const BallReal& b);
BallReal mul(const BallReal& a, const BallReal& b);
BallReal div(const BallReal& a, const BallReal& b);
BallReal neg(const BallReal& a);
BallReal abs_ball(const BallReal& a);
BallReal add_long(const BallReal& a, long long v);
BallReal mul_long(const BallReal& a, long long v);
BallReal div_long(const BallReal& a, long long v);
BallReal mul_pow2(const BallReal& a, long e);     // exact scaling
BallReal sqr(const BallReal& a);                  // tight nonnegative square
BallReal sqrt(const BallReal& a);
BallReal log(const BallReal& a);
BallReal exp(const BallReal& a);
BallReal cos2pi(const BallReal& x);               // cos(2*pi*x)
BallReal sin2pi(const BallReal& x);
BallReal min_enclosure(const BallReal& a, const BallReal& b);
BallReal max_enclosure(const BallReal& a, const BallReal& b);
BallReal hull(const BallReal& a, const BallReal& b);

inline BallReal operator+(const BallReal& a, const BallReal& b) { return add(a, b); }
inline BallReal operator-(const BallReal& a, const BallReal& b) { return sub(a, b); }
inline BallReal operator*(const BallReal& a, const BallReal& b) { return mul(a, b); }
inline BallReal operator/(const BallReal& a, const BallReal& b) { return div(a, b); }
inline BallReal operator-(const BallReal& a) { return neg(a); }

}  // namespace sturmlab
