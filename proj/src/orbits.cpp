#include "sturmlab/orbits.hpp"

#include <algorithm>

namespace sturmlab {

namespace {

long long rotate_word(long long w, long k, long by) {
    long long mask = (1LL << k) - 1;
    return ((w << by) | (w >> (k - by))) & mask;
}

long long canonical_rotation(long long w, long k) {
    long long best = w;
    for (long i = 1; i < k; ++i) best = std::min(best, rotate_word(w, k, i));
    return best;
}

long exact_period_of(long long w, long k) {
    for (long d = 1; d < k; ++d)
        if (k % d == 0 && rotate_word(w, k, d) == w) return d;
    return k;
}

}  // namespace

std::string PeriodicOrbit::word() const {
    std::string s;
    for (long i = period - 1; i >= 0; --i) s += ((necklace >> i) & 1) ? '1' : '0';
    return s;
}

std::string PeriodicOrbit::id() const {
    if (mechanical)
        return "mech_" + std::to_string(slope.num) + "_" + std::to_string(slope.den);
    return "nk" + std::to_string(period) + "_" + std::to_string(necklace);
}

std::vector<PeriodicOrbit> enumerate_orbits(long max_period) {
    if (max_period < 1 || max_period > 16)
        throw ConfigError("enumerate_orbits: period cap is 16");
    std::vector<PeriodicOrbit> out;
    for (long k = 1; k <= max_period; ++k) {
        long long top = (1LL << k) - 1;  // excludes the all-ones word
        for (long long j = 0; j < top; ++j) {
            if (canonical_rotation(j, k) != j) continue;
            if (exact_period_of(j, k) != k) continue;
            PeriodicOrbit o;
            o.period = k;
            o.necklace = j;
            o.base = Rational(j, top);
            for (long i = 0; i < k; ++i)
                o.points.push_back(Rational(rotate_word(j, k, i), top));
            out.push_back(std::move(o));
        }
    }
    return out;
}

long long exact_period_orbit_count(long k) {
    // (1/k) sum_{d | k} mu(d) 2^{k/d}; the all-ones adjustment only hits k = 1
    auto mobius = [](long n) {
        long m = 1;
        for (long p = 2; p * p <= n; ++p)
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) return 0L;
                m = -m;
            }
        if (n > 1) m = -m;
        return m;
    };
    long long s = 0;
    for (long d = 1; d <= k; ++d)
        if (k % d == 0) s += mobius(d) * (1LL << (k / d));
    long long count = s / k;
    return k == 1 ? count - 1 : count;  // {0} and {1} coincide on the circle
}

std::string mechanical_word(const Rational& pq) {
    if (!(pq.num > 0 && pq.num < pq.den)) throw ConfigError("mechanical slope needs 0 < p/q < 1");
    std::string w;
    for (long long n = 0; n < pq.den; ++n) {
        long long d = ((n + 1) * pq.num) / pq.den - (n * pq.num) / pq.den;
        w += d ? '1' : '0';
    }
    return w;
}

PeriodicOrbit mechanical_orbit(const Rational& pq) {
    std::string w = mechanical_word(pq);
    long long j = 0;
    for (char ch : w) j = (j << 1) | (ch == '1' ? 1 : 0);
    long k = static_cast<long>(w.size());
    long long den = (1LL << k) - 1;
    PeriodicOrbit o;
    o.period = k;
    o.necklace = j;
    o.base = Rational(j, den);
    for (long i = 0; i < k; ++i) {
        // rotation by i bits == multiplication by 2^i mod (2^k - 1)
        long long ji = static_cast<long long>((static_cast<__int128>(j) << i) % den);
        o.points.push_back(Rational(ji, den));
    }
    o.mechanical = true;
    o.slope = pq;
    return o;
}

HittingDecomposition hitting_decomposition(const PeriodicOrbit& orbit, const GapTable& gaps) {
    HittingDecomposition h;
    const long prec = gaps.stairs().policy().start_bits;
    for (const Rational& p : orbit.points) {
        GapClassification c = gaps.classify(CirclePoint::from_rational(p, prec));
        if (c.boundary()) {
            h.boundary_failure = true;
            h.gap_index.push_back(-2);
            continue;
        }
        h.gap_index.push_back(c.in_gap() ? c.gap_index : -1);
    }
    if (h.boundary_failure) return h;
    for (long i = 0; i < orbit.period; ++i)
        if (h.gap_index[i] == 0) h.hit_times.push_back(i);
    h.mu_I0 = Rational(static_cast<long long>(h.hit_times.size()), orbit.period);
    const long m = static_cast<long>(h.hit_times.size());
    for (long i = 0; i < m; ++i) {
        long cur = h.hit_times[i];
        long nxt = i + 1 < m ? h.hit_times[i + 1] : h.hit_times[0] + orbit.period;
        h.block_lengths.push_back(nxt - cur);
    }
    return h;
}

}  // namespace sturmlab
