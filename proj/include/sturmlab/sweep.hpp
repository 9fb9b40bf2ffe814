#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sturmlab/families.hpp"
#include "sturmlab/orbits.hpp"

namespace sturmlab {

// One row of the orbit sweep: exponent against the sqrt bound. margin must
// come out >= -1e-9 on every record.
struct SweepRecord {
    std::string orbit_id;
    long period = 0;
    long long mu_num = 0, mu_den = 1;
    double lambda1 = 0;
    double bound = 0;   // eps * sqrt(mu(I_0))
    double margin = 0;  // bound - lambda1
    bool skipped = false;
    std::string skip_reason;
};

// Kernels come in a serial reference and an OpenMP flavor; results are
// written into per-index slots, so both produce byte-identical records.
std::vector<SweepRecord> sweep_orbits(const AssembledCocycle& A,
                                      const std::vector<PeriodicOrbit>& orbits,
                                      bool parallel);
std::vector<SweepRecord> sweep_orbits_serial(const AssembledCocycle& A,
                                             const std::vector<PeriodicOrbit>& orbits);

SweepRecord sweep_one(const AssembledCocycle& A, const PeriodicOrbit& orbit);

// Gap-traversal verification for the key bound
//   log ||A^(n+1)(x)|| <= eps sqrt((n+m+2)/2)  on  x in I_n n D^{-(n+1)}(I_m).
// Samples are produced by pulling interior points of I_{m+1} + 1/2 back
// through the tower bijections D: I_k -> I_{k-1}.
struct BlockReport {
    long j = 0;           // block index, 1-based
    long lo = 0, hi = 0;  // covers x_k for k in [lo, hi)
    double log_norm = 0;  // log ||P_j||
    double log_bound = 0; // M(t/j)
};

struct TraversalSample {
    double t = 0;              // phi value of the tower (constant along it)
    double log_norm = 0;       // log ||A^(n+1)(x)||
    double bound = 0;          // eps sqrt((n+m+2)/2)
    bool ok = false;           // log_norm <= bound
    bool landing_checked = false;  // D^(n+1) x certified inside I_m
    std::vector<BlockReport> blocks;
};

struct TraversalReport {
    long n = 0, m = 0;
    std::vector<TraversalSample> samples;
    long violations = 0;
    double worst_margin = 0;  // min over samples of bound - log_norm
};

TraversalReport verify_gap_traversal(const AssembledCocycle& A, long n, long m, long samples);

// sample x in I_n with D^{n+1} x in I_m, at arc position frac of the
// target window (frac in (0,1))
CirclePoint traversal_sample(const GapTable& gaps, long n, long m, double frac, long prec);

// Semiconjugacy residual d(h(Dx), R(h(x))) on points off I_0. K-points come
// from the nu-sampler (staircase provenance), gap points from gap interiors.
struct ResidualRow {
    std::string kind;   // "K" or "gap<n>"
    double radius = 0;  // enclosure radius of the residual
    bool contains_zero = false;
};
std::vector<ResidualRow> semiconjugacy_residuals(const GapTable& gaps, long count,
                                                 uint64_t seed, bool parallel);
std::vector<ResidualRow> semiconjugacy_residuals_serial(const GapTable& gaps, long count,
                                                        uint64_t seed);

// Draw a dyadic u whose rotation image stays certifiable: u at circle
// distance >= 2^-9 from the h-images of gaps 0..depth. Deterministic.
BallReal filtered_nu_parameter(const GapTable& gaps, uint64_t seed, uint64_t index,
                               long depth, long* rejections = nullptr);

}  // namespace sturmlab
