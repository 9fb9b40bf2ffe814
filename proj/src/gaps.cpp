#include "sturmlab/gaps.hpp"

#include <algorithm>

namespace sturmlab {

GapTable::GapTable(std::shared_ptr<const Staircase> stairs, long default_depth)
    : stairs_(std::move(stairs)), default_depth_(default_depth) {}

GapTable::Gap GapTable::build_gap(long n) const {
    const long prec = stairs_->policy().start_bits;
    DyadicAffine arg;
    arg.base = BallReal::from_long(0, 64);
    arg.steps = -n;
    Gap g;
    g.n = n;
    g.left = stairs_->stair_point(arg, prec, /*lower=*/true);
    g.right = stairs_->stair_point(arg, prec, /*lower=*/false);
    auto st = stairs_;
    g.center = CirclePoint::from_realizer(
        [st, arg, n](long p) {
            DyadicAffine a = arg;
            return add(st->eval(a, /*lower=*/true, p),
                       BallReal::pow2(-(n + 2), 64));
        },
        prec);
    g.half_length = BallReal::pow2(-(n + 2), 64);
    return g;
}

GapTable::Gap GapTable::gap(long n) const {
    std::lock_guard<std::mutex> lk(mu_);
    while (static_cast<long>(gaps_.size()) <= n) gaps_.push_back(build_gap(gaps_.size()));
    return gaps_[n];
}

void GapTable::warm(long depth) const { (void)gap(depth); }

GapClassification GapTable::classify(const CirclePoint& x, long max_depth) const {
    if (max_depth < 0) max_depth = default_depth_;
    const PrecisionPolicy& pol = stairs_->policy();
    for (long n = 0; n <= max_depth; ++n) {
        Gap g = gap(n);
        Refiner rd;
        if (x.refinable()) {
            CirclePoint xc = x;
            CirclePoint cc = g.center;
            rd = [xc, cc](long p) {
                return circle_distance(xc.refined(p).rep(), cc.refined(p).rep());
            };
        } else {
            CirclePoint cc = g.center;
            BallReal xr = x.rep();
            rd = [xr, cc](long p) { return circle_distance(xr, cc.refined(p).rep()); };
        }
        BallReal d = circle_distance(x, g.center);
        Ordering o = certified_compare(d, rd, g.half_length, {}, pol);
        if (o == Ordering::Less) {
            GapClassification c;
            c.verdict = GapClassification::Verdict::InGap;
            c.gap_index = n;
            // distance to the nearest endpoint: half-length minus center distance
            BallReal dd = rd ? rd(std::max(pol.start_bits, d.prec())) : d;
            c.boundary_distance =
                max_enclosure(sub(g.half_length, dd), BallReal::from_long(0, 64));
            return c;
        }
        if (o == Ordering::Undecidable) {
            GapClassification c;
            c.verdict = GapClassification::Verdict::OnBoundary;
            c.gap_index = n;
            return c;
        }
    }
    GapClassification c;
    c.verdict = GapClassification::Verdict::InK;
    c.checked_depth = max_depth;
    return c;
}

BallReal GapTable::endpoint_min_distance(long k) const {
    Gap g0 = gap(0);
    Gap gk = gap(k);
    const PrecisionPolicy& pol = stairs_->policy();
    BallReal best;
    bool first = true;
    for (const CirclePoint* v : {&gk.left, &gk.right})
        for (const CirclePoint* e : {&g0.left, &g0.right}) {
            // refine both sides together until the distance enclosure is
            // relatively tight; the strictness decisions downstream compare
            // deltas spanning many scales
            CirclePoint a = *v, b = *e;
            long p = pol.start_bits;
            BallReal d = circle_distance(a, b);
            while (!pol.exhausted(p)) {
                double mid = std::abs(d.mid_double());
                double rad = d.rad_double();
                if (rad == 0.0 || (mid > 0 && rad < mid * 0x1p-40)) break;
                p = pol.next(p);
                a = a.refined(p);
                b = b.refined(p);
                d = circle_distance(a, b);
            }
            best = first ? d : min_enclosure(best, d);
            first = false;
        }
    return mul_long(best, 4);
}

GapTable::DeltaEntry GapTable::delta(long n) const {
    if (n < 1) throw ConfigError("delta(n) needs n >= 1");
    {
        std::lock_guard<std::mutex> lk(mu_);
        if (static_cast<long>(deltas_.size()) >= n) return deltas_[n - 1];
    }
    // build outside the lock, one step at a time (idempotent)
    const PrecisionPolicy& pol = stairs_->policy();
    for (;;) {
        long have;
        {
            std::lock_guard<std::mutex> lk(mu_);
            have = static_cast<long>(deltas_.size());
            if (have >= n) return deltas_[n - 1];
        }
        long k = have + 1;
        BallReal cand = endpoint_min_distance(k);
        DeltaEntry e;
        if (k == 1) {
            e.value = cand;
            e.strict_drop = true;
        } else {
            DeltaEntry prev;
            {
                std::lock_guard<std::mutex> lk(mu_);
                prev = deltas_[k - 2];
            }
            Ordering o = certified_compare(cand, {}, prev.value, {}, pol);
            e.strict_drop = (o == Ordering::Less);
            e.value = e.strict_drop ? cand : min_enclosure(prev.value, cand);
        }
        std::lock_guard<std::mutex> lk(mu_);
        if (static_cast<long>(deltas_.size()) == k - 1) deltas_.push_back(e);
    }
}

CirclePoint GapTable::sample_nu(const BallReal& dyadic_u, long prec) const {
    DyadicAffine u;
    u.base = dyadic_u;
    u.steps = 0;
    return stairs_->stair_point(u, prec, /*lower=*/false);
}

}  // namespace sturmlab
