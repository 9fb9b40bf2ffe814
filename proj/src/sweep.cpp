#include "sturmlab/sweep.hpp"

#include <cmath>

#include "sturmlab/cocycle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sturmlab {

SweepRecord sweep_one(const AssembledCocycle& A, const PeriodicOrbit& orbit) {
    SweepRecord r;
    r.orbit_id = orbit.id();
    r.period = orbit.period;
    const long prec = A.gaps().stairs().policy().start_bits;
    try {
        HittingDecomposition hd = hitting_decomposition(orbit, A.gaps());
        if (hd.boundary_failure) {
            r.skipped = true;
            r.skip_reason = "orbit point on an undecidable gap boundary";
            return r;
        }
        r.mu_num = hd.mu_I0.num;
        r.mu_den = hd.mu_I0.den;
        std::vector<Mat2d> factors;
        factors.reserve(orbit.period);
        for (const Rational& p : orbit.points)
            factors.push_back(A.eval(CirclePoint::from_rational(p, prec)));
        r.lambda1 = periodic_exponent(factors, orbit.period);
        double mu = static_cast<double>(r.mu_num) / static_cast<double>(r.mu_den);
        r.bound = A.modulation().eps_double() * std::sqrt(mu);
        r.margin = r.bound - r.lambda1;
    } catch (const EvaluationUndecidable& e) {
        r.skipped = true;
        r.skip_reason = e.what();
    } catch (const DepthExceeded& e) {
        r.skipped = true;
        r.skip_reason = e.what();
    }
    return r;
}

std::vector<SweepRecord> sweep_orbits(const AssembledCocycle& A,
                                      const std::vector<PeriodicOrbit>& orbits,
                                      bool parallel) {
    std::vector<SweepRecord> out(orbits.size());
    // warm the shared caches before going parallel (single-writer contract)
    A.gaps().warm(A.gaps().default_depth());
    const long count = static_cast<long>(orbits.size());
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (long i = 0; i < count; ++i) out[i] = sweep_one(A, orbits[i]);
    return out;
}

std::vector<SweepRecord> sweep_orbits_serial(const AssembledCocycle& A,
                                             const std::vector<PeriodicOrbit>& orbits) {
    std::vector<SweepRecord> out;
    out.reserve(orbits.size());
    for (const PeriodicOrbit& o : orbits) out.push_back(sweep_one(A, o));
    return out;
}

CirclePoint traversal_sample(const GapTable& gaps, long n, long m, double frac, long prec) {
    auto stairs = gaps.stairs_ptr();
    auto lift = [stairs, n, m, frac](long p) {
        auto left = [&](long k, long q) {
            DyadicAffine a;
            a.base = BallReal::from_long(0, 64);
            a.steps = -k;
            return stairs->eval(a, /*lower=*/true, q);
        };
        // z in I_{m+1} + 1/2 subset I_0 at arc position frac
        BallReal x = add(left(m + 1, p),
                         mul(BallReal::from_double(frac, p), BallReal::pow2(-(m + 2), 64)));
        x = add(x, BallReal::from_ratio(1, 2, p));
        x = reduce_mod1(x);
        // pull back through the tower bijections D: I_k -> I_{k-1}
        for (long k = 1; k <= n; ++k) {
            BallReal off = reduce_mod1(sub(x, reduce_mod1(left(k - 1, p))));
            x = add(reduce_mod1(left(k, p)), mul_pow2(off, -1));
            x = reduce_mod1(x);
        }
        return x;
    };
    return CirclePoint::from_realizer(lift, prec);
}

TraversalReport verify_gap_traversal(const AssembledCocycle& A, long n, long m,
                                     long samples) {
    TraversalReport rep;
    rep.n = n;
    rep.m = m;
    rep.worst_margin = 1e300;
    const long prec = std::max<long>(A.gaps().stairs().policy().start_bits, 192);
    const double eps = A.modulation().eps_double();
    const double bound = eps * std::sqrt(static_cast<double>(n + m + 2) / 2.0);
    const long s = ell(n);

    for (long i = 0; i < samples; ++i) {
        double frac = (2.0 * i + 1.0) / (2.0 * samples);
        CirclePoint x = traversal_sample(A.gaps(), n, m, frac, prec);

        // forward orbit points D^j x, j = 0..n+1
        std::vector<CirclePoint> fwd;
        fwd.push_back(x);
        for (long j = 0; j < n + 1; ++j) fwd.push_back(fwd.back().doubled());

        TraversalSample ts;
        GapClassification land = A.gaps().classify(fwd[n + 1]);
        ts.landing_checked = land.in_gap() && land.gap_index == m;

        // matrices in climbing order: A(x_0) A(x_1) ... A(x_n), x_k = D^{n-k} x
        std::vector<Mat2d> mats(n + 1);
        for (long k = 0; k <= n; ++k) mats[k] = A.eval(fwd[n - k]);
        Mat2d P = Mat2d::identity();
        for (long k = 0; k <= n; ++k) P = P * mats[k];
        ts.log_norm = std::log(P.op_norm());
        ts.bound = bound;
        ts.ok = ts.log_norm <= bound + 1e-12;
        ts.t = A.modulation().phi(A.gaps().classify(fwd[n])).mid_double();

        // block decomposition n_1 = 0, n_j = j^4 - 2, n_{s+1} = n + 1
        std::vector<long> nj(s + 2);
        nj[1] = 0;
        for (long j = 2; j <= s; ++j) nj[j] = j * j * j * j - 2;
        nj[s + 1] = n + 1;
        for (long j = 1; j <= s; ++j) {
            BlockReport br;
            br.j = j;
            br.lo = nj[j];
            br.hi = nj[j + 1];
            Mat2d B = Mat2d::identity();
            for (long k = br.lo; k < br.hi; ++k) B = B * mats[k];
            br.log_norm = std::log(B.op_norm());
            br.log_bound = A.modulation().M_of_double(ts.t / j);
            ts.blocks.push_back(br);
        }

        if (!ts.ok) ++rep.violations;
        rep.worst_margin = std::min(rep.worst_margin, ts.bound - ts.log_norm);
        rep.samples.push_back(std::move(ts));
    }
    return rep;
}

namespace {

ResidualRow k_point_residual(const GapTable& gaps, const BallReal& u, long prec) {
    const Staircase& st = gaps.stairs();
    CirclePoint x = gaps.sample_nu(u, prec);
    CirclePoint Dx = x.doubled();

    // h(Dx) and R(h(x)) through the factor map
    CirclePoint hDx = st.factor(Dx, /*use_pedigree=*/true);
    CirclePoint Rhx = st.factor(x, /*use_pedigree=*/true).rotated();
    BallReal res1 = circle_distance(hDx, Rhx);

    // the substance behind the provenance step: pi(2 F(u)) = pi(F(u + alpha)),
    // both sides evaluated independently
    DyadicAffine shifted;
    shifted.base = u;
    shifted.steps = 1;
    BallReal lhs = reduce_mod1(mul_pow2(st.eval({u, 0}, false, prec), 1));
    BallReal rhs = reduce_mod1(st.eval(shifted, false, prec));
    BallReal res2 = circle_distance(lhs, rhs);

    ResidualRow row;
    row.kind = "K";
    BallReal res = max_enclosure(res1, res2);
    row.radius = res.rad_double() + std::abs(res.mid_double());
    row.contains_zero = res1.contains_zero() && res2.contains_zero();
    return row;
}

ResidualRow gap_point_residual(const GapTable& gaps, long n, double frac, long prec) {
    auto stairs = gaps.stairs_ptr();
    auto lift = [stairs, n, frac](long p) {
        DyadicAffine a;
        a.base = BallReal::from_long(0, 64);
        a.steps = -n;
        BallReal left = stairs->eval(a, /*lower=*/true, p);
        return add(left, mul(BallReal::from_double(frac, p), BallReal::pow2(-(n + 1), 64)));
    };
    CirclePoint x = CirclePoint::from_realizer(lift, prec);
    CirclePoint Dx = x.doubled();

    GapClassification cx = gaps.classify(x);
    GapClassification cDx = gaps.classify(Dx);
    ResidualRow row;
    row.kind = "gap" + std::to_string(n);
    if (!cx.in_gap() || cx.gap_index != n || !cDx.in_gap() || cDx.gap_index != n - 1) {
        row.contains_zero = false;
        row.radius = 1.0;
        return row;
    }
    // h is constant pi(-k alpha) on I_k; the residual compares the cached
    // constants through the rotation
    DyadicAffine hn;
    hn.base = BallReal::from_long(0, 64);
    hn.steps = -n;
    CirclePoint hx = CirclePoint::from_affine(hn, stairs->alpha(), prec);
    DyadicAffine hm;
    hm.base = BallReal::from_long(0, 64);
    hm.steps = -(n - 1);
    CirclePoint hDx = CirclePoint::from_affine(hm, stairs->alpha(), prec);
    BallReal res = circle_distance(hDx, hx.rotated());
    row.radius = res.rad_double() + std::abs(res.mid_double());
    row.contains_zero = res.contains_zero();
    return row;
}

}  // namespace

BallReal filtered_nu_parameter(const GapTable& gaps, uint64_t seed, uint64_t index,
                               long depth, long* rejections) {
    // keep u clear of the h-images of gaps 0..depth (the points -j alpha);
    // this is a throughput heuristic, certification still happens downstream
    const double w = 0x1p-9;
    double alpha = gaps.stairs().alpha()->realize(64).mid_double();
    for (uint64_t attempt = 0;; ++attempt) {
        double u = uniform_from_index(seed, index * 1024 + attempt);
        bool ok = true;
        double img = 0.0;  // frac(-j alpha) built incrementally
        for (long j = 0; j <= depth && ok; ++j) {
            double d = std::abs(u - img);
            d = std::min(d, 1.0 - d);
            if (d < w) ok = false;
            img -= alpha;
            if (img < 0) img += 1.0;
        }
        if (ok) return BallReal::from_double(u, 64);
        if (rejections) ++*rejections;
    }
}

std::vector<ResidualRow> semiconjugacy_residuals(const GapTable& gaps, long count,
                                                 uint64_t seed, bool parallel) {
    std::vector<ResidualRow> out(count);
    gaps.warm(gaps.default_depth());
    const long prec = gaps.stairs().policy().start_bits;
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (long i = 0; i < count; ++i) {
        if (i % 2 == 0) {
            BallReal u = filtered_nu_parameter(gaps, seed, static_cast<uint64_t>(i), 0);
            out[i] = k_point_residual(gaps, u, prec);
        } else {
            long n = 1 + (i / 2) % 30;
            double frac = 0.04 + 0.92 * uniform_from_index(seed ^ 0xabcdef, i);
            out[i] = gap_point_residual(gaps, n, frac, prec);
        }
    }
    return out;
}

std::vector<ResidualRow> semiconjugacy_residuals_serial(const GapTable& gaps, long count,
                                                        uint64_t seed) {
    std::vector<ResidualRow> out;
    out.reserve(count);
    gaps.warm(gaps.default_depth());
    const long prec = gaps.stairs().policy().start_bits;
    for (long i = 0; i < count; ++i) {
        if (i % 2 == 0) {
            BallReal u = filtered_nu_parameter(gaps, seed, static_cast<uint64_t>(i), 0);
            out.push_back(k_point_residual(gaps, u, prec));
        } else {
            long n = 1 + (i / 2) % 30;
            double frac = 0.04 + 0.92 * uniform_from_index(seed ^ 0xabcdef, i);
            out.push_back(gap_point_residual(gaps, n, frac, prec));
        }
    }
    return out;
}

}  // namespace sturmlab
