#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sturmlab/modulation.hpp"

using namespace sturmlab;

namespace {

struct Fx {
    std::shared_ptr<const AlphaSpec> alpha = AlphaSpec::parse("gold2");
    std::shared_ptr<const Staircase> st = std::make_shared<Staircase>(alpha);
    std::shared_ptr<const GapTable> gaps = std::make_shared<GapTable>(st);
    Modulation mod{gaps, "0.1", 24};

    CirclePoint gap_point(long n, double frac, long prec = 160) const {
        auto s = st;
        return CirclePoint::from_realizer(
            [s, n, frac](long p) {
                DyadicAffine a;
                a.base = BallReal::from_long(0, 64);
                a.steps = -n;
                return add(s->eval(a, true, p),
                           mul(BallReal::from_double(frac, p), BallReal::pow2(-(n + 1), 64)));
            },
            prec);
    }
};

}  // namespace

TEST_CASE("integer fourth root") {
    CHECK(ell(0) == 1);
    CHECK(ell(13) == 1);
    CHECK(ell(14) == 2);
    CHECK(ell(78) == 2);
    CHECK(ell(79) == 3);
    for (long n = 0; n < 100000; n += 37) {
        long s = ell(n);
        CHECK(s * s * s * s <= n + 2);
        CHECK((s + 1) * (s + 1) * (s + 1) * (s + 1) > n + 2);
    }
}

TEST_CASE("phi: 1 at gap midpoints, 0 on K, propagated along towers") {
    Fx fx;
    for (long n = 0; n <= 10; ++n) {
        BallReal ph = fx.mod.phi(fx.gap_point(n, 0.5));
        CHECK(ph.contains(BallReal::from_long(1, 256)));
    }
    CirclePoint k = fx.gaps->sample_nu(BallReal::from_double(0.337, 64), 160);
    BallReal phk = fx.mod.phi(fx.gaps->classify(k, 40));
    CHECK(phk.is_exact());
    CHECK(phk.contains_zero());

    std::mt19937_64 rng(3);
    for (long n = 1; n <= 10; ++n) {
        for (int s = 0; s < 50; ++s) {
            double frac = 0.02 + 0.96 * (static_cast<double>(rng() >> 11) * 0x1p-53);
            CirclePoint x = fx.gap_point(n, frac, 220);
            BallReal ref = fx.mod.phi(x);
            CirclePoint y = x;
            for (long j = 0; j < n; ++j) {
                y = y.doubled();
                CHECK(sub(fx.mod.phi(y), ref).contains_zero());
            }
        }
    }
}

TEST_CASE("psi: phi over ell, capped by 1/ell, zero on K") {
    Fx fx;
    // midpoint of I_14: phi = 1, ell = 2
    BallReal ps = fx.mod.psi(fx.gap_point(14, 0.5));
    CHECK(ps.contains(BallReal::from_ratio(1, 2, 256)));

    CirclePoint k = fx.gaps->sample_nu(BallReal::from_double(0.61, 64), 160);
    CHECK(fx.mod.psi(fx.gaps->classify(k, 40)).contains_zero());

    std::mt19937_64 rng(5);
    for (long n : {3L, 14L, 20L}) {
        BallReal cap = BallReal::from_ratio(1, ell(n), 128);
        for (int s = 0; s < 40; ++s) {
            double frac = 0.01 + 0.98 * (static_cast<double>(rng() >> 11) * 0x1p-53);
            BallReal v = fx.mod.psi(fx.gap_point(n, frac));
            CHECK(compare(v, cap) != Ordering::Greater);
        }
    }
}

TEST_CASE("psi_n truncation: deeper gaps contribute at most 1/ell(n)") {
    Fx fx;
    std::mt19937_64 rng(7);
    for (long n : {5L, 14L, 20L}) {
        BallReal cap = BallReal::from_ratio(1, ell(n), 128);
        for (long k = n + 1; k <= n + 4; ++k) {
            for (int s = 0; s < 10; ++s) {
                double frac = 0.05 + 0.9 * (static_cast<double>(rng() >> 11) * 0x1p-53);
                BallReal v = fx.mod.psi(fx.gap_point(k, frac));
                CHECK(compare(v, cap) != Ordering::Greater);
            }
        }
    }
}

TEST_CASE("control points: ties keep the first index, retained nodes hit exactly") {
    Fx fx;
    const auto& cps = fx.mod.control_points();
    REQUIRE(cps.size() == 25);

    // frozen retained pattern for this alpha (drops at the convergent
    // denominators, plus the ell growth step at 14)
    std::vector<long> retained;
    for (const auto& cp : cps)
        if (cp.retained) retained.push_back(cp.n);
    CHECK(retained == std::vector<long>{0, 1, 2, 4, 7, 12, 14, 20});

    // v strictly increasing, t weakly decreasing, strictly on retained nodes
    for (size_t i = 1; i < cps.size(); ++i) {
        CHECK(compare(cps[i].v, cps[i - 1].v) == Ordering::Greater);
        CHECK(compare(cps[i].t, cps[i - 1].t) != Ordering::Greater);
    }

    for (const auto& cp : cps) {
        BallReal m = fx.mod.M_of(cp.t);
        if (cp.retained) {
            CHECK(mpfr_equal_p(m.mid(), cp.v.mid()));
            CHECK(mpfr_equal_p(m.rad(), cp.v.rad()));
        }
        CHECK(compare(m, cp.v) != Ordering::Greater);  // M(t_n) <= v_n for all n
    }
}

TEST_CASE("M: boundary value, monotonicity, depth guard") {
    Fx fx;
    BallReal at1 = fx.mod.M_of(BallReal::from_long(1, 128));
    CHECK(at1.contains_zero());
    CHECK(at1.rad_double() < 1e-30);

    // strictly decreasing along a sorted mesh (double mirror)
    double t0 = fx.mod.control_points().front().t.mid_double();
    double tl = fx.mod.smallest_t_double();
    std::vector<double> mesh;
    for (int i = 0; i < 1000; ++i) {
        double f = (i + 0.5) / 1000.0;
        mesh.push_back(std::exp(std::log(tl * 2) * (1 - f) + std::log(0.999) * f));
    }
    std::sort(mesh.begin(), mesh.end());
    double prev = 1e300;
    for (double t : mesh) {
        double m = fx.mod.M_of_double(t);
        CHECK(m < prev);
        prev = m;
    }
    (void)t0;

    // certified on ball pairs
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        double a = std::exp(std::log(tl * 2) +
                            (std::log(0.98) - std::log(tl * 2)) *
                                (static_cast<double>(rng() >> 11) * 0x1p-53));
        double b = a * (1.01 + (static_cast<double>(rng() >> 11) * 0x1p-53));
        if (b >= 1) continue;
        BallReal ma = fx.mod.M_of(BallReal::from_double(a, 128));
        BallReal mb = fx.mod.M_of(BallReal::from_double(b, 128));
        CHECK(compare(ma, mb) == Ordering::Greater);
    }

    CHECK_THROWS_AS(fx.mod.M_of(BallReal::from_double(tl * 0x1p-30, 128)), DepthExceeded);
    CHECK_THROWS_AS(fx.mod.M_of_double(tl * 0x1p-30), DepthExceeded);
}
