#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sturmlab/ball.hpp"

using namespace sturmlab;

TEST_CASE("arithmetic encloses exact rational results") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 2000; ++i) {
        long long an = static_cast<long long>(rng() % 20001) - 10000;
        long long ad = 1 + static_cast<long long>(rng() % 999);
        long long bn = static_cast<long long>(rng() % 20001) - 10000;
        long long bd = 1 + static_cast<long long>(rng() % 999);
        BallReal a = BallReal::from_ratio(an, ad, 96);
        BallReal b = BallReal::from_ratio(bn, bd, 96);

        // exact sum as a ratio, realized at much higher precision
        __int128 sn = static_cast<__int128>(an) * bd + static_cast<__int128>(bn) * ad;
        BallReal exact = BallReal::from_ratio(static_cast<long long>(sn), ad * bd, 512);
        CHECK(add(a, b).contains(exact));

        __int128 pn = static_cast<__int128>(an) * bn;
        BallReal exactp =
            BallReal::from_ratio(static_cast<long long>(pn), ad * bd, 512);
        CHECK(mul(a, b).contains(exactp));
    }
}

TEST_CASE("enclosure soundness: higher precision nests inside lower") {
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 10000; ++i) {
        long long n = static_cast<long long>(rng() % 1000000) + 1;
        long long d = static_cast<long long>(rng() % 1000000) + 1;
        BallReal coarse = sqrt(BallReal::from_ratio(n, d, 64));
        BallReal fine = sqrt(BallReal::from_ratio(n, d, 256));
        CHECK(coarse.contains(fine));
    }
}

TEST_CASE("comparison decides only disjoint enclosures") {
    BallReal a = BallReal::from_ratio(1, 3, 128);
    BallReal b = BallReal::from_ratio(2, 3, 128);
    CHECK(compare(a, b) == Ordering::Less);
    CHECK(compare(b, a) == Ordering::Greater);

    // fat balls overlapping: undecidable
    BallReal wide = a.widened(BallReal::from_ratio(1, 2, 64));
    CHECK(compare(wide, b) == Ordering::Undecidable);
}

TEST_CASE("floor and ceil certify only away from integers") {
    BallReal x = BallReal::from_ratio(7, 2, 128);  // 3.5
    REQUIRE(x.floor_exact());
    CHECK(*x.floor_exact() == 3);
    CHECK(*x.ceil_exact() == 4);

    BallReal three = BallReal::from_long(3, 128).widened(BallReal::from_ratio(1, 1000, 64));
    CHECK(!three.floor_exact());  // straddles the integer 3

    BallReal exact_three = BallReal::from_long(3, 128);
    REQUIRE(exact_three.floor_exact());
    CHECK(*exact_three.floor_exact() == 3);
}

TEST_CASE("doubling is exact: scaling by powers of two keeps the radius shape") {
    BallReal x = BallReal::from_ratio(1, 3, 128);
    BallReal y = mul_pow2(x, 1);
    BallReal exact = BallReal::from_ratio(2, 3, 512);
    CHECK(y.contains(exact));
    CHECK(y.rad_double() == doctest::Approx(2 * x.rad_double()).epsilon(1e-12));
}

TEST_CASE("trig enclosures contain reference values") {
    // cos(2 pi / 3) = -1/2, sin(2 pi / 4) = 1
    BallReal c = cos2pi(BallReal::from_ratio(1, 3, 160));
    CHECK(c.contains(BallReal::from_ratio(-1, 2, 512)));
    BallReal s = sin2pi(BallReal::from_ratio(1, 4, 160));
    CHECK(s.contains(BallReal::from_long(1, 512)));
}

TEST_CASE("log, exp, sqrt round-trips stay inside widened enclosures") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        long long n = static_cast<long long>(rng() % 1000) + 1;
        BallReal x = BallReal::from_ratio(n, 97, 128);
        BallReal y = exp(log(x));
        CHECK(y.contains(x.round_to(512)));
        BallReal z = mul(sqrt(x), sqrt(x));
        CHECK(z.contains(x.round_to(512)));
    }
}
