#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "sturmlab/emit.hpp"
#include "sturmlab/families.hpp"
#include "sturmlab/sweep.hpp"

namespace sturmlab {

// One bag of knobs for the CLI and the drivers. The constraint c > eps > 0
// is enforced at validation time; the seed fully determines every
// Monte-Carlo output.
struct RunConfig {
    std::string alpha_str = "gold2";
    long precision = 0;           // 0 = default policy
    long max_precision = 1 << 14;
    std::string epsilon_str = "0.1";
    std::optional<double> c;
    std::optional<double> gamma;  // mutually exclusive with c
    std::string family = "stress";
    long depth = 30;
    long gap_depth = 60;
    long mod_depth = 64;
    long period_max = 14;
    long iters = 1000000;
    long samples = 100;
    std::uint64_t seed = 20250916;
    std::string out;
    std::string format = "csv";
    bool parallel = true;

    double epsilon() const { return std::stod(epsilon_str); }
    HermanParams herman() const;
    PrecisionPolicy policy() const;
    void validate() const;
};

// All contexts wired to one alpha and one precision policy.
struct Lab {
    RunConfig cfg;
    std::shared_ptr<const AlphaSpec> alpha;
    std::shared_ptr<const Staircase> stairs;
    std::shared_ptr<const GapTable> gaps;
    std::shared_ptr<const Modulation> modulation;
    HermanParams herman;
    std::shared_ptr<const BFamily> family;
    std::shared_ptr<const AssembledCocycle> assembled;

    static Lab build(const RunConfig& cfg);

    Meta base_meta(const std::string& subcommand) const;
};

}  // namespace sturmlab
