#pragma once

namespace sturmlab {

// Working-precision policy for certified comparisons. Undecidable
// comparisons double the bits and retry until max_bits.
struct PrecisionPolicy {
    long start_bits = default_precision();
    long max_bits = 1L << 14;

    // Default comes from the STURMLAB_PRECISION environment variable
    // (clamped to [64, 1<<20]), else 128.
    static long default_precision();

    long next(long bits) const { return bits * 2 > max_bits ? max_bits : bits * 2; }
    bool exhausted(long bits) const { return bits >= max_bits; }
};

}  // namespace sturmlab
