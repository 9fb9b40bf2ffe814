#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sturmlab/gaps.hpp"
#include "sturmlab/sweep.hpp"

using namespace sturmlab;

namespace {

struct Fx {
    std::shared_ptr<const AlphaSpec> alpha = AlphaSpec::parse("gold2");
    std::shared_ptr<const Staircase> st = std::make_shared<Staircase>(alpha);
    std::shared_ptr<GapTable> gaps = std::make_shared<GapTable>(st);
};

}  // namespace

TEST_CASE("0 lies in the widest gap") {
    Fx fx;
    auto c = fx.gaps->classify(CirclePoint::from_rational(Rational(0, 1), 128));
    REQUIRE(c.in_gap());
    CHECK(c.gap_index == 0);
}

TEST_CASE("left endpoint of I_3 nudged inward classifies with the nudge distance") {
    Fx fx;
    auto st = fx.st;
    auto lift = [st](long p) {
        DyadicAffine a;
        a.base = BallReal::from_long(0, 64);
        a.steps = -3;
        return add(st->eval(a, true, p), BallReal::pow2(-20, 64));
    };
    auto c = fx.gaps->classify(CirclePoint::from_realizer(lift, 128));
    REQUIRE(c.in_gap());
    CHECK(c.gap_index == 3);
    CHECK(c.boundary_distance.contains(BallReal::pow2(-20, 256)));
}

TEST_CASE("nu-samples certify K membership, with the forward-orbit oracle") {
    Fx fx;
    std::mt19937_64 rng(11);
    for (int i = 0; i < 24; ++i) {
        long rejections = 0;
        BallReal u = filtered_nu_parameter(*fx.gaps, 99 + i, i, 40, &rejections);
        CirclePoint x = fx.gaps->sample_nu(u, 1500);
        auto c = fx.gaps->classify(x, 40);
        REQUIRE(c.in_K());
        CHECK(c.checked_depth == 40);
        // independent oracle: K = points whose forward orbit avoids I_0
        CirclePoint y = x;
        for (int j = 0; j <= 40; ++j) {
            auto c0 = fx.gaps->classify(y, 0);
            CHECK(c0.in_K());
            y = y.doubled();
        }
    }
}

TEST_CASE("delta: monotone chain in (0,1) and the closed-form oracles") {
    Fx fx;
    BallReal one = BallReal::from_long(1, 64);
    BallReal zero = BallReal::from_long(0, 64);
    BallReal prev = one;
    for (long n = 1; n <= 12; ++n) {
        BallReal d = fx.gaps->delta(n).value;
        CHECK(compare(d, zero) == Ordering::Greater);
        CHECK(compare(d, one) == Ordering::Less);
        CHECK(compare(d, prev) != Ordering::Greater);
        prev = d;
    }
    // independent oracles from the staircase series at the origin:
    // delta(1) = 2 F(0), delta(2) = 1/2 - 3 F(0), delta(3) = 7 F(0)/2 - 1/2
    DyadicAffine zeroa;
    zeroa.base = BallReal::from_long(0, 64);
    BallReal F0 = fx.st->eval(zeroa, false, 192);
    CHECK(sub(fx.gaps->delta(1).value, mul_pow2(F0, 1)).contains_zero());
    BallReal d2 = sub(BallReal::from_ratio(1, 2, 192), mul_long(F0, 3));
    CHECK(sub(fx.gaps->delta(2).value, d2).contains_zero());
    BallReal d3 = sub(div_long(mul_long(F0, 7), 2), BallReal::from_ratio(1, 2, 192));
    CHECK(sub(fx.gaps->delta(3).value, d3).contains_zero());
}

TEST_CASE("half-shifted deep gaps sit inside I_0 and map onto their level") {
    Fx fx;
    for (long n = 1; n <= 8; ++n) {
        for (double frac : {0.2, 0.5, 0.8}) {
            CirclePoint z = traversal_sample(*fx.gaps, 0, n - 1, frac, 192);
            auto c0 = fx.gaps->classify(z);
            REQUIRE(c0.in_gap());
            CHECK(c0.gap_index == 0);
            auto c1 = fx.gaps->classify(z.doubled());
            REQUIRE(c1.in_gap());
            CHECK(c1.gap_index == n - 1);
            // 4 d(z, boundary of I_0) >= delta(n)
            BallReal lhs = mul_long(c0.boundary_distance, 4);
            CHECK(compare(lhs, fx.gaps->delta(n).value) != Ordering::Less);
        }
    }
}

TEST_CASE("sampler pushes forward to Lebesgue through h and avoids the gaps") {
    Fx fx;
    std::mt19937_64 rng(13);
    // h(sample(u)) = pi(u)
    for (int i = 0; i < 100; ++i) {
        double u = static_cast<double>(rng() >> 11) * 0x1p-53;
        CirclePoint x = fx.gaps->sample_nu(BallReal::from_double(u, 64), 160);
        CirclePoint h = fx.st->factor(x);
        CHECK(circle_distance(h.rep(), BallReal::from_double(u, 256)).contains_zero());
    }
    // a 10^4 sweep never lands in I_0
    long in_gap0 = 0;
    for (int i = 0; i < 10000; ++i) {
        BallReal u = filtered_nu_parameter(*fx.gaps, 777, i, 0);
        CirclePoint x = fx.gaps->sample_nu(u, 256);
        if (!fx.gaps->classify(x, 0).in_K()) ++in_gap0;
    }
    CHECK(in_gap0 == 0);
    // empirical nu-mass of the union of gaps: zero hits across depth 40
    long in_gaps = 0;
    for (int i = 0; i < 1000; ++i) {
        BallReal u = filtered_nu_parameter(*fx.gaps, 778, i, 40);
        CirclePoint x = fx.gaps->sample_nu(u, 1500);
        if (fx.gaps->classify(x, 40).in_gap()) ++in_gaps;
    }
    CHECK(in_gaps == 0);
}

TEST_CASE("tower property: D maps I_n onto I_{n-1} endpoint to endpoint") {
    Fx fx;
    for (long n = 1; n <= 20; ++n) {
        GapTable::Gap hi = fx.gaps->gap(n);
        GapTable::Gap lo = fx.gaps->gap(n - 1);
        BallReal dl = circle_distance(hi.left.doubled(), lo.left);
        BallReal dr = circle_distance(hi.right.doubled(), lo.right);
        CHECK(dl.contains_zero());
        CHECK(dr.contains_zero());
        CHECK(dl.rad_double() < 0x1p-50);
        CHECK(dr.rad_double() < 0x1p-50);
    }
}

TEST_CASE("gap lengths are 2^{-n-1} and closures are pairwise disjoint") {
    Fx fx;
    for (long n = 0; n <= 30; ++n) {
        GapTable::Gap g = fx.gaps->gap(n);
        BallReal len = circle_distance(g.left, g.right);
        BallReal err = abs_ball(sub(len, BallReal::pow2(-(n + 1), 64)));
        CHECK(err.hi_double() < 0x1p-60);
    }
    for (long n = 0; n <= 15; ++n)
        for (long m = n + 1; m <= 15; ++m) {
            GapTable::Gap a = fx.gaps->gap(n);
            GapTable::Gap b = fx.gaps->gap(m);
            BallReal d = circle_distance(a.center, b.center);
            BallReal sum = add(a.half_length, b.half_length);
            CHECK(compare(d, sum) == Ordering::Greater);
        }
}

TEST_CASE("a fine uniform grid reproduces the gap mass 1 - 2^{-N-1}") {
    Fx fx;
    const long N = 12;
    const long G = 8192;
    long hits = 0;
    for (long i = 0; i < G; ++i) {
        auto c = fx.gaps->classify(CirclePoint::from_rational(Rational(i, G), 128), N);
        if (c.in_gap()) ++hits;
    }
    double mass = static_cast<double>(hits) / G;
    double expect = 1.0 - std::pow(2.0, -(N + 1));
    CHECK(std::abs(mass - expect) <= 2.0 / G);
}

TEST_CASE("semiconjugacy residuals vanish on and off the Cantor set") {
    Fx fx;
    auto rows = semiconjugacy_residuals(*fx.gaps, 200, 4242, true);
    for (const auto& r : rows) {
        CHECK(r.contains_zero);
        CHECK(r.radius < 1e-9);
    }
    auto serial = semiconjugacy_residuals_serial(*fx.gaps, 200, 4242);
    REQUIRE(serial.size() == rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].kind == serial[i].kind);
        CHECK(rows[i].radius == serial[i].radius);
        CHECK(rows[i].contains_zero == serial[i].contains_zero);
    }
}
