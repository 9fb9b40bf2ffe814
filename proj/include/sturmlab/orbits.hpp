#pragma once

#include <string>
#include <vector>

#include "sturmlab/gaps.hpp"
#include "sturmlab/rational.hpp"

namespace sturmlab {

// A periodic orbit of the doubling map, identified with a binary necklace:
// the base point j/(2^k - 1) has itinerary equal to the k-bit word of j read
// MSB first, repeated. Canonical form = lexicographically least rotation.
struct PeriodicOrbit {
    long period = 1;
    long long necklace = 0;        // canonical word as a k-bit integer
    Rational base;                 // j / (2^k - 1)
    std::vector<Rational> points;  // D^i(base), exact
    bool mechanical = false;
    Rational slope;                // p/q when mechanical

    std::string word() const;
    std::string id() const;
};

// One canonical representative per orbit of exact period <= max_period.
// The all-ones word is the same circle point as 0 and is not duplicated.
std::vector<PeriodicOrbit> enumerate_orbits(long max_period);

// number of orbits of exact period k (Lyndon-word count), for cross-checks
long long exact_period_orbit_count(long k);

// The period-q orbit whose itinerary is the lower mechanical word of slope
// p/q: digits floor((n+1)p/q) - floor(np/q), n = 0..q-1.
PeriodicOrbit mechanical_orbit(const Rational& pq);
std::string mechanical_word(const Rational& pq);

// Hitting-time structure of an orbit relative to I_0.
struct HittingDecomposition {
    std::vector<long> gap_index;     // classification of each orbit point
    std::vector<long> hit_times;     // i with points[i] in I_0, within one period
    std::vector<long> block_lengths; // n_i = k_{i+1} - k_i, cyclically
    Rational mu_I0;                  // exact (#hits)/period
    bool boundary_failure = false;   // some point classified OnBoundary
};
HittingDecomposition hitting_decomposition(const PeriodicOrbit& orbit, const GapTable& gaps);

}  // namespace sturmlab
