#include "sturmlab/cocycle.hpp"

#include <cmath>

#include "sturmlab/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sturmlab {

Mat2d cocycle_product(const CocycleSpec& spec, CirclePoint x, long n) {
    Mat2d P = Mat2d::identity();
    for (long k = 0; k < n; ++k) {
        P = spec.gen(x) * P;
        x = spec.step(x);
    }
    return P;
}

Mat2b cocycle_product_ball(const CocycleSpec& spec, CirclePoint x, long n, long prec) {
    if (!spec.gen_ball) throw ConfigError("cocycle has no ball-mode generator");
    x = x.refined(prec);
    Mat2b P = Mat2b::identity(prec);
    for (long k = 0; k < n; ++k) {
        P = spec.gen_ball(x, prec) * P;
        x = spec.step(x);
    }
    return P;
}

namespace {

struct FrameState {
    // orthonormal frame columns (q11,q21), (q12,q22)
    double q11 = 1, q21 = 0, q12 = 0, q22 = 1;
    double log_r11 = 0, log_r22 = 0;
    // tracked unit vector
    double v1 = 0.6401843996644799, v2 = 0.7682212798426384;  // fixed generic direction
    double log_v = 0;

    void push(const Mat2d& A) {
        // vector tracking
        double w1 = A.a * v1 + A.b * v2;
        double w2 = A.c * v1 + A.d * v2;
        double nw = std::hypot(w1, w2);
        log_v += std::log(nw);
        v1 = w1 / nw;
        v2 = w2 / nw;
        // QR frame
        double b11 = A.a * q11 + A.b * q21;
        double b21 = A.c * q11 + A.d * q21;
        double b12 = A.a * q12 + A.b * q22;
        double b22 = A.c * q12 + A.d * q22;
        double r11 = std::hypot(b11, b21);
        log_r11 += std::log(r11);
        q11 = b11 / r11;
        q21 = b21 / r11;
        double r12 = q11 * b12 + q21 * b22;
        double c12 = b12 - r12 * q11;
        double c22 = b22 - r12 * q21;
        double r22 = std::hypot(c12, c22);
        log_r22 += std::log(r22);
        q12 = c12 / r22;
        q22 = c22 / r22;
    }
};

}  // namespace

BirkhoffResult birkhoff_exponent_fast(const std::function<Mat2d(double)>& gen, double alpha,
                                      double x0, long N) {
    FrameState fs;
    double x = x0 - std::floor(x0);
    for (long k = 0; k < N; ++k) {
        fs.push(gen(x));
        x += alpha;
        if (x >= 1.0) x -= 1.0;
    }
    BirkhoffResult r;
    r.iters = N;
    r.qr_variant = fs.log_r11 / N;
    r.vector_variant = fs.log_v / N;
    r.second_exponent = fs.log_r22 / N;
    r.value = r.qr_variant;
    return r;
}

BirkhoffResult birkhoff_exponent(const CocycleSpec& spec, const CirclePoint& x0, long N) {
    if (spec.base == BaseMap::Rotation && spec.gen_fast && spec.alpha) {
        double a = spec.alpha->realize(64).mid_double();
        return birkhoff_exponent_fast(spec.gen_fast, a, x0.rep().mid_double(), N);
    }
    FrameState fs;
    CirclePoint x = x0;
    for (long k = 0; k < N; ++k) {
        fs.push(spec.gen(x));
        x = spec.step(x);
    }
    BirkhoffResult r;
    r.iters = N;
    r.qr_variant = fs.log_r11 / N;
    r.vector_variant = fs.log_v / N;
    r.second_exponent = fs.log_r22 / N;
    r.value = r.qr_variant;
    return r;
}

double periodic_exponent(const std::vector<Mat2d>& factors, long k) {
    Mat2d P = Mat2d::identity();
    for (const Mat2d& A : factors) P = A * P;
    double det = P.det();
    double tr = P.trace();
    // elliptic / parabolic SL(2) products have spectral radius exactly 1
    if (std::abs(det - 1.0) <= 1e-9 && std::abs(tr) <= 2.0 + 1e-12) return 0.0;
    double rho = P.spectral_radius();
    return std::log(std::max(rho, 1e-300)) / static_cast<double>(k);
}

double periodic_exponent(const CocycleSpec& spec, const std::vector<CirclePoint>& orbit) {
    if (orbit.empty()) throw NotPeriodic("empty orbit");
    const long k = static_cast<long>(orbit.size());
    // cycle check: step(orbit[i]) == orbit[i+1 mod k], exact on rationals
    for (long i = 0; i < k; ++i) {
        const CirclePoint& cur = orbit[i];
        const CirclePoint& nxt = orbit[(i + 1) % k];
        CirclePoint stepped = spec.step(cur);
        if (stepped.rational() && nxt.rational()) {
            if (!(*stepped.rational() == *nxt.rational()))
                throw NotPeriodic("orbit step mismatch at index " + std::to_string(i));
        } else {
            BallReal d = circle_distance(stepped, nxt);
            if (!d.contains_zero())
                throw NotPeriodic("orbit step distance off zero at index " + std::to_string(i));
        }
    }
    std::vector<Mat2d> factors;
    factors.reserve(k);
    for (const CirclePoint& p : orbit) factors.push_back(spec.gen(p));
    return periodic_exponent(factors, k);
}

double uniform_from_index(uint64_t seed, uint64_t index) {
    // splitmix64 on (seed, index); top 53 bits as a dyadic in [0,1)
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    return static_cast<double>(z >> 11) * 0x1p-53;
}

KingmanResult kingman_upper_bound(const CocycleSpec& spec,
                                  const std::function<double(uint64_t)>& sampler, long n,
                                  long samples, bool parallel) {
    std::vector<double> vals(samples);
    double alpha = spec.alpha ? spec.alpha->realize(64).mid_double() : 0.0;

#pragma omp parallel for schedule(static) if (parallel)
    for (long s = 0; s < samples; ++s) {
        double x = sampler(static_cast<uint64_t>(s));
        // log ||A^(n)(x)|| by renormalized full-matrix product
        Mat2d P = Mat2d::identity();
        double log_scale = 0;
        for (long k = 0; k < n; ++k) {
            Mat2d A = spec.gen_fast ? spec.gen_fast(x)
                                    : spec.gen(CirclePoint::from_ball(
                                          BallReal::from_double(x, 64)));
            P = A * P;
            double f = P.frobenius();
            if (f > 1e100 || f < 1e-100) {
                log_scale += std::log(f);
                P = P.scaled(1.0 / f);
            }
            if (spec.base == BaseMap::Rotation) {
                x += alpha;
                if (x >= 1.0) x -= 1.0;
            } else {
                x *= 2;
                if (x >= 1.0) x -= 1.0;
            }
        }
        vals[s] = (std::log(P.op_norm()) + log_scale) / static_cast<double>(n);
    }

    double mean = 0;
    for (double v : vals) mean += v;
    mean /= samples;
    double var = 0;
    for (double v : vals) var += (v - mean) * (v - mean);
    var = samples > 1 ? var / (samples - 1) : 0.0;

    KingmanResult r;
    r.estimate = mean;
    r.std_error = std::sqrt(var / samples);
    r.n = n;
    r.samples = samples;
    return r;
}

}  // namespace sturmlab
