#include "sturmlab/lab.hpp"

#include <cmath>

namespace sturmlab {

HermanParams RunConfig::herman() const {
    if (c && gamma) throw ConfigError("--c and --gamma are mutually exclusive");
    if (gamma) return HermanParams::from_gamma(*gamma);
    if (c) return HermanParams::from_c(*c);
    return HermanParams::from_gamma(2.0);  // c = log(5/4)
}

PrecisionPolicy RunConfig::policy() const {
    PrecisionPolicy p;
    if (precision > 0) p.start_bits = precision;
    p.max_bits = std::max(max_precision, p.start_bits);
    return p;
}

void RunConfig::validate() const {
    HermanParams hp = herman();
    double eps = epsilon();
    if (!(eps > 0)) throw ConfigError("epsilon must be positive");
    if (!(hp.c > eps)) throw ConfigError("parameters need c > epsilon > 0 (c = " +
                                         std::to_string(hp.c) + ", eps = " +
                                         std::to_string(eps) + ")");
    if (format != "csv" && format != "json") throw ConfigError("format must be csv|json");
    family_kind_from_string(family);
    if (period_max < 1 || period_max > 16) throw ConfigError("period-max must be in 1..16");
}

Lab Lab::build(const RunConfig& cfg) {
    cfg.validate();
    Lab lab;
    lab.cfg = cfg;
    lab.alpha = AlphaSpec::parse(cfg.alpha_str);
    lab.stairs = std::make_shared<Staircase>(lab.alpha, cfg.policy());
    lab.gaps = std::make_shared<GapTable>(lab.stairs, cfg.gap_depth);
    lab.modulation = std::make_shared<Modulation>(lab.gaps, cfg.epsilon_str, cfg.mod_depth);
    lab.herman = cfg.herman();
    lab.family = std::make_shared<BFamily>(family_kind_from_string(cfg.family), lab.herman,
                                           lab.modulation);
    lab.assembled = std::make_shared<AssembledCocycle>(*lab.family, lab.gaps);
    return lab;
}

Meta Lab::base_meta(const std::string& subcommand) const {
    Meta m;
    m.add("tool", "sturmlab 0.1.0");
    m.add("subcommand", subcommand);
    m.add("alpha", alpha->description());
    m.add("precision", std::to_string(cfg.policy().start_bits));
    m.add("max_precision", std::to_string(cfg.policy().max_bits));
    m.add("epsilon", cfg.epsilon_str);
    m.add("c", fmt_double(herman.c));
    m.add("gamma", fmt_double(herman.gamma));
    m.add("family", cfg.family);
    m.add("seed", std::to_string(cfg.seed));
    m.add("iters", std::to_string(cfg.iters));
    m.add("samples", std::to_string(cfg.samples));
    m.add("depth", std::to_string(cfg.depth));
    return m;
}

}  // namespace sturmlab
