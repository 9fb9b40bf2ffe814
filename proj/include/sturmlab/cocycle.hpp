#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "sturmlab/circle.hpp"
#include "sturmlab/mat2.hpp"

namespace sturmlab {

enum class BaseMap { Doubling, Rotation };

// A linear cocycle over the doubling map or an irrational rotation. The
// generator is deterministic: same point, same precision, same matrix.
struct CocycleSpec {
    BaseMap base = BaseMap::Rotation;
    std::shared_ptr<const AlphaSpec> alpha;              // rotation angle
    std::function<Mat2d(const CirclePoint&)> gen;        // double mode
    std::function<Mat2b(const CirclePoint&, long)> gen_ball;  // optional
    std::function<Mat2d(double)> gen_fast;               // optional, x in [0,1)

    CirclePoint step(const CirclePoint& x) const {
        return base == BaseMap::Doubling ? x.doubled() : x.rotated();
    }
};

// ordered product A(T^{n-1}x) ... A(x); the empty product is the identity
Mat2d cocycle_product(const CocycleSpec& spec, CirclePoint x, long n);
Mat2b cocycle_product_ball(const CocycleSpec& spec, CirclePoint x, long n, long prec);

// Birkhoff-type top-exponent estimate over one orbit, by tracked-frame
// renormalization (the raw product is never formed). Reports both the
// vector-tracking and the QR-frame variants; `value` is the QR figure.
struct BirkhoffResult {
    double value = 0;
    double vector_variant = 0;
    double qr_variant = 0;
    double second_exponent = 0;  // QR log r22 mean
    long iters = 0;
};
BirkhoffResult birkhoff_exponent(const CocycleSpec& spec, const CirclePoint& x0, long N);
// fast path for rotation bases with gen_fast installed
BirkhoffResult birkhoff_exponent_fast(const std::function<Mat2d(double)>& gen, double alpha,
                                      double x0, long N);

// (1/k) log(spectral radius) of the period product; exactly 0 for det-1
// products with |trace| <= 2. Throws NotPeriodic unless the orbit cycles.
double periodic_exponent(const CocycleSpec& spec, const std::vector<CirclePoint>& orbit);
double periodic_exponent(const std::vector<Mat2d>& period_product_factors, long k);

// Monte-Carlo estimate of (1/n) Integral log || A^(n) || d(mu) with standard
// error; sampler draws the base point for one sample (index-seeded, so the
// estimate is deterministic and independent of thread count).
struct KingmanResult {
    double estimate = 0;
    double std_error = 0;
    long n = 0;
    long samples = 0;
};
KingmanResult kingman_upper_bound(const CocycleSpec& spec,
                                  const std::function<double(uint64_t)>& sampler, long n,
                                  long samples, bool parallel = true);

// deterministic uniform dyadic in [0,1) from a 64-bit index and seed
double uniform_from_index(uint64_t seed, uint64_t index);

}  // namespace sturmlab
