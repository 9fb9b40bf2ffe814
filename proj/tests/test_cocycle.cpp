#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sturmlab/cocycle.hpp"
#include "sturmlab/families.hpp"

using namespace sturmlab;

namespace {

struct Fx {
    std::shared_ptr<const AlphaSpec> alpha = AlphaSpec::parse("gold2");
    HermanParams hp = HermanParams::from_gamma(2.0);
    CocycleSpec herman = herman_cocycle(hp, alpha);

    CirclePoint zero() const {
        DyadicAffine z;
        z.base = BallReal::from_long(0, 64);
        return CirclePoint::from_affine(z, alpha, 128);
    }
};

double mat_dist(const Mat2d& A, const Mat2d& B) { return (A - B).frobenius(); }

}  // namespace

TEST_CASE("empty product is the identity") {
    Fx fx;
    Mat2d P = cocycle_product(fx.herman, fx.zero(), 0);
    CHECK(mat_dist(P, Mat2d::identity()) == 0.0);
}

TEST_CASE("cocycle identity A^{(m+n)}(x) = A^{(m)}(T^n x) A^{(n)}(x)") {
    Fx fx;
    std::mt19937_64 rng(3);
    for (int i = 0; i < 40; ++i) {
        long m = static_cast<long>(rng() % 20);
        long n = static_cast<long>(rng() % 20);
        double x0 = static_cast<double>(rng() >> 11) * 0x1p-53;
        CirclePoint x = CirclePoint::from_affine(
            {BallReal::from_double(x0, 64), 0}, fx.alpha, 128);
        CirclePoint Tn = x;
        for (long k = 0; k < n; ++k) Tn = Tn.rotated();
        Mat2d lhs = cocycle_product(fx.herman, x, m + n);
        Mat2d rhs = cocycle_product(fx.herman, Tn, m) * cocycle_product(fx.herman, x, n);
        CHECK(mat_dist(lhs, rhs) < 1e-9 * std::max(1.0, lhs.frobenius()));
    }
}

TEST_CASE("determinants multiply: |det A^{(n)} - 1| stays tiny") {
    Fx fx;
    Mat2d P = cocycle_product(fx.herman, fx.zero(), 200);
    CHECK(std::abs(P.det() - 1.0) < 1e-9);
}

TEST_CASE("product collapse at quarter-turn base points, ball mode") {
    Fx fx;
    for (long n = 0; n <= 6; ++n) {
        DyadicAffine base;
        base.base = BallReal::from_ratio(1, 4, 64);
        base.steps = -n;
        CirclePoint x0 = CirclePoint::from_affine(base, fx.alpha, 128);
        Mat2b P = cocycle_product_ball(fx.herman, x0, 2 * n, 128);
        DyadicAffine img;
        img.base = BallReal::from_long(0, 64);
        img.steps = -n;
        Mat2b T = Mat2b::rotation(CirclePoint::from_affine(img, fx.alpha, 128).rep());
        if (n % 2 == 1) T = T.scaled(BallReal::from_long(-1, 64));
        BallReal res = (P - T).frobenius();
        CHECK(res.contains_zero());
        CHECK(res.hi_double() < 1e-20);
    }
}

TEST_CASE("birkhoff: isometries give 0, constant hyperbolic gives log 3") {
    Fx fx;
    CocycleSpec rot;
    rot.base = BaseMap::Rotation;
    rot.alpha = fx.alpha;
    rot.gen_fast = [](double x) { return Mat2d::rotation(x); };
    rot.gen = [](const CirclePoint& x) { return Mat2d::rotation(x.rep().mid_double()); };
    const long N = 100000;
    BirkhoffResult r = birkhoff_exponent(rot, fx.zero(), N);
    CHECK(std::abs(r.value) <= 10.0 / N);

    CocycleSpec cst;
    cst.base = BaseMap::Rotation;
    cst.alpha = fx.alpha;
    cst.gen_fast = [](double) { return Mat2d::diag(3.0, 1.0 / 3.0); };
    cst.gen = [](const CirclePoint&) { return Mat2d::diag(3.0, 1.0 / 3.0); };
    BirkhoffResult rc = birkhoff_exponent(cst, fx.zero(), 1000000);
    CHECK(std::abs(rc.value - std::log(3.0)) < 1e-9);        // no overflow at 10^6
    CHECK(std::abs(rc.second_exponent + std::log(3.0)) < 1e-9);
}

TEST_CASE("birkhoff: the two internal variants agree on shipped generators") {
    Fx fx;
    const long N = 100000;
    std::mt19937_64 rng(7);
    for (int i = 0; i < 5; ++i) {
        double x0 = static_cast<double>(rng() >> 11) * 0x1p-53;
        BirkhoffResult r = birkhoff_exponent_fast(
            fx.herman.gen_fast, fx.alpha->realize(64).mid_double(), x0, N);
        CHECK(std::abs(r.qr_variant - r.vector_variant) < 5e-3);
        CHECK(std::abs(r.value - fx.hp.c) < 5e-3);
    }
}

TEST_CASE("periodic exponent: eigenvalue rules") {
    // det 1, trace 2.5: eigenvalues 2 and 1/2, period 1
    CHECK(periodic_exponent({Mat2d{2.5, -1, 1, 0}}, 1) == doctest::Approx(std::log(2.0)));
    // rotation-valued: |trace| <= 2, exactly 0
    CHECK(periodic_exponent({Mat2d::rotation(0.37), Mat2d::rotation(0.11)}, 2) == 0.0);
    // cyclic invariance of the spectral radius
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        std::vector<Mat2d> f;
        for (int k = 0; k < 6; ++k) {
            double a = 0.5 + (static_cast<double>(rng() >> 11) * 0x1p-53);
            f.push_back(Mat2d::diag(a, 1 / a) * Mat2d::rotation(0.1 * k + 0.05 * i));
        }
        std::vector<Mat2d> g(f.begin() + 1, f.end());
        g.push_back(f.front());
        CHECK(periodic_exponent(f, 6) == doctest::Approx(periodic_exponent(g, 6)).epsilon(1e-10));
    }
}

TEST_CASE("periodic exponent verifies the cycle") {
    Fx fx;
    CocycleSpec dbl;
    dbl.base = BaseMap::Doubling;
    dbl.alpha = fx.alpha;
    dbl.gen = [](const CirclePoint&) { return Mat2d::identity(); };
    std::vector<CirclePoint> good = {CirclePoint::from_rational({1, 3}, 128),
                                     CirclePoint::from_rational({2, 3}, 128)};
    CHECK(periodic_exponent(dbl, good) == 0.0);
    std::vector<CirclePoint> bad = {CirclePoint::from_rational({1, 3}, 128),
                                    CirclePoint::from_rational({1, 5}, 128)};
    CHECK_THROWS_AS(periodic_exponent(dbl, bad), NotPeriodic);
}

TEST_CASE("kingman upper bound: exact cases and Herman decrease") {
    Fx fx;
    auto sampler = [](uint64_t i) { return uniform_from_index(2024, i); };

    CocycleSpec cst;
    cst.base = BaseMap::Rotation;
    cst.alpha = fx.alpha;
    cst.gen_fast = [](double) { return Mat2d::diag(3.0, 1.0 / 3.0); };
    for (long n : {1L, 7L}) {
        KingmanResult r = kingman_upper_bound(cst, sampler, n, 200);
        CHECK(std::abs(r.estimate - std::log(3.0)) < 1e-12);
        CHECK(r.std_error < 1e-12);
    }

    CocycleSpec rot;
    rot.base = BaseMap::Rotation;
    rot.alpha = fx.alpha;
    rot.gen_fast = [](double x) { return Mat2d::rotation(x); };
    KingmanResult rr = kingman_upper_bound(rot, sampler, 50, 200);
    CHECK(std::abs(rr.estimate) < 1e-12);

    // ||A(x)|| = gamma for every x, so n = 1 integrates to log 2 exactly
    KingmanResult k1 = kingman_upper_bound(fx.herman, sampler, 1, 400);
    CHECK(std::abs(k1.estimate - std::log(2.0)) < 1e-12);
    KingmanResult k10 = kingman_upper_bound(fx.herman, sampler, 10, 400);
    KingmanResult k100 = kingman_upper_bound(fx.herman, sampler, 100, 400);
    CHECK(k10.estimate < k1.estimate + 3 * k10.std_error);
    CHECK(k100.estimate < k10.estimate + 3 * (k10.std_error + k100.std_error));
    CHECK(k100.estimate > fx.hp.c - 3 * k100.std_error);
    // deterministic regardless of threading
    KingmanResult k100s = kingman_upper_bound(fx.herman, sampler, 100, 400, false);
    CHECK(k100.estimate == k100s.estimate);
}
