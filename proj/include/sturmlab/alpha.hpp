#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sturmlab/ball.hpp"
#include "sturmlab/rational.hpp"

namespace sturmlab {

// The rotation number alpha. Three kinds:
//   quadratic surd   (a + b*sqrt(d))/c          -- exact, irrational
//   continued fraction [a0; a1, ..., ak, ak, ...] (final quotient repeats)
//   decimal literal                              -- rational, flagged unsafe
//
// Preset strings: "gold2" = (3-sqrt(5))/2, "surd:a,b,c,d", "cf:a0,a1,...",
// anything else parses as a decimal literal.
class AlphaSpec {
public:
    enum class Kind { Surd, ContinuedFraction, Decimal };

    static std::shared_ptr<const AlphaSpec> parse(const std::string& s);
    static std::shared_ptr<const AlphaSpec> surd(long long a, long long b, long long c,
                                                 long long d);
    static std::shared_ptr<const AlphaSpec> continued_fraction(std::vector<long long> digits);
    static std::shared_ptr<const AlphaSpec> decimal(const std::string& literal);

    Kind kind() const { return kind_; }
    bool irrational() const { return kind_ != Kind::Decimal; }
    const std::string& description() const { return desc_; }

    // Enclosure of alpha at the requested precision. Exact for surd and
    // continued-fraction kinds (no truncation: the repeating tail is folded
    // through its closed form).
    BallReal realize(long prec) const;

    // Continued-fraction digits a0..a_{count-1}. Rejects decimal kind.
    std::vector<long long> cf_digits(int count) const;

    // All convergents p/q with q <= max_q, in order. Rejects decimal kind.
    std::vector<Rational> convergents(long long max_q) const;

private:
    Kind kind_;
    std::string desc_;
    // surd state, canonical (P + sqrt(D))/Q with Q | D - P^2
    long long P_ = 0, D_ = 0, Q_ = 1;
    // cf state
    std::vector<long long> digits_;
    // decimal state
    std::string literal_;

    AlphaSpec() = default;
    void validate_range() const;
};

}  // namespace sturmlab
