#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "sturmlab/ball.hpp"
#include "sturmlab/errors.hpp"

namespace sturmlab {

// Exact rational on int64 with overflow-checked arithmetic. Denominators in
// this project stay small (orbit points j/(2^k-1) with k <= 34, convergents),
// so int64 with __int128 intermediates is plenty.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw OverflowError("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

    static long long checked(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("rational overflow");
        return static_cast<long long>(v);
    }

    Rational operator+(const Rational& o) const {
        __int128 n = static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den;
        __int128 d = static_cast<__int128>(den) * o.den;
        return Rational(checked(n), checked(d));
    }
    Rational operator-(const Rational& o) const {
        __int128 n = static_cast<__int128>(num) * o.den - static_cast<__int128>(o.num) * den;
        __int128 d = static_cast<__int128>(den) * o.den;
        return Rational(checked(n), checked(d));
    }
    Rational operator*(const Rational& o) const {
        __int128 n = static_cast<__int128>(num) * o.num;
        __int128 d = static_cast<__int128>(den) * o.den;
        return Rational(checked(n), checked(d));
    }

    // value reduced to [0,1)
    Rational mod1() const {
        long long r = num % den;
        if (r < 0) r += den;
        return Rational(r, den);
    }

    long long floor_val() const {
        long long q = num / den;
        if (num % den != 0 && num < 0) --q;
        return q;
    }

    bool is_integer() const { return den == 1; }

    BallReal to_ball(long prec) const { return BallReal::from_ratio(num, den, prec); }

    std::string str() const {
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

inline Rational operator*(long long k, const Rational& r) {
    return Rational(Rational::checked(static_cast<__int128>(k) * r.num), r.den);
}

}  // namespace sturmlab
