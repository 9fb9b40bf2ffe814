#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "sturmlab/circle.hpp"
#include "sturmlab/staircase.hpp"

namespace sturmlab {

// Result of locating a circle point relative to the gaps I_n and the
// Cantor set K. OnBoundary is surfaced whenever the endpoint comparison
// stays undecidable at the precision cap; callers exclude such points.
struct GapClassification {
    enum class Verdict { InGap, InK, OnBoundary };
    Verdict verdict = Verdict::InK;
    long gap_index = -1;           // InGap / OnBoundary
    long checked_depth = 0;        // InK: gaps 0..depth are excluded
    BallReal boundary_distance;    // InGap: distance to the nearest endpoint

    bool in_gap() const { return verdict == Verdict::InGap; }
    bool in_K() const { return verdict == Verdict::InK; }
    bool boundary() const { return verdict == Verdict::OnBoundary; }
};

// The gaps I_n = pi((f(-n alpha), F(-n alpha))), each an open arc of length
// 2^{-n-1}. Endpoints are staircase values cached per precision level;
// classification scans n = 0, 1, 2, ... and stops at max_depth, leaving
// uncovered mass 2^{-max_depth-1}.
class GapTable {
public:
    explicit GapTable(std::shared_ptr<const Staircase> stairs, long default_depth = 60);

    struct Gap {
        long n = 0;
        CirclePoint left;     // pi(f(-n alpha))
        CirclePoint right;    // pi(F(-n alpha))
        CirclePoint center;
        BallReal half_length; // exact 2^{-n-2}
    };

    const Staircase& stairs() const { return *stairs_; }
    const std::shared_ptr<const Staircase>& stairs_ptr() const { return stairs_; }
    long default_depth() const { return default_depth_; }

    // Gaps are built lazily under a lock and never mutated afterwards.
    // Drivers that run parallel sweeps call warm() first.
    Gap gap(long n) const;
    void warm(long depth) const;

    GapClassification classify(const CirclePoint& x, long max_depth = -1) const;

    // delta(n) = min_{1<=k<=n} min over endpoints v of I_k of 4 d(v, dI_0);
    // strict_drop records a certified strict decrease at step n (needed to
    // decide which modulation control points are realizable).
    struct DeltaEntry {
        BallReal value;
        bool strict_drop = false;
    };
    DeltaEntry delta(long n) const;

    // nu-sampler: pi(F(u)) for exact dyadic u in [0,1)
    CirclePoint sample_nu(const BallReal& dyadic_u, long prec) const;

private:
    std::shared_ptr<const Staircase> stairs_;
    long default_depth_;
    mutable std::mutex mu_;
    mutable std::vector<Gap> gaps_;
    mutable std::vector<DeltaEntry> deltas_;  // deltas_[k] = delta(k+1)

    Gap build_gap(long n) const;
    BallReal endpoint_min_distance(long k) const;  // min over 4 endpoint pairs
};

}  // namespace sturmlab
