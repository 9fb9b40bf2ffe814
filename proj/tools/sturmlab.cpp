#include <CLI11.hpp>

#include "sturmlab/runners.hpp"

using namespace sturmlab;

int main(int argc, char** argv) {
    CLI::App app{"sturmlab: a numerical laboratory for an SL(2,R) cocycle over the "
                 "doubling map with one isolated exponent"};
    app.require_subcommand(1);

    RunConfig cfg;
    bool mechanical = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--alpha", cfg.alpha_str,
                        "rotation number: gold2 | cf:a0,a1,... | surd:a,b,c,d | decimal");
        sub->add_option("--precision", cfg.precision, "working precision in bits");
        sub->add_option("--max-precision", cfg.max_precision, "escalation cap in bits");
        sub->add_option("--epsilon", cfg.epsilon_str, "the small exponent bound");
        sub->add_option("--c", cfg.c, "prescribed exponent (excludes --gamma)");
        sub->add_option("--gamma", cfg.gamma, "diagonal parameter > 1 (excludes --c)");
        sub->add_option("--family", cfg.family, "bounded family realization: pure|stress");
        sub->add_option("--depth", cfg.depth, "emission / verification depth");
        sub->add_option("--period-max", cfg.period_max, "largest orbit period in sweeps");
        sub->add_option("--iters", cfg.iters, "orbit length for exponent estimates");
        sub->add_option("--samples", cfg.samples, "sample count per cell / grid size");
        sub->add_option("--seed", cfg.seed, "RNG seed (fully determines output)");
        sub->add_option("--out", cfg.out, "output path (default stdout)");
        sub->add_option("--format", cfg.format, "csv|json");
        sub->add_flag("--serial", [&cfg](int64_t) { cfg.parallel = false; },
                      "disable OpenMP parallelism");
    };

    CLI::App* s_stair = app.add_subcommand("staircase", "emit (y, h_tilde(y)) on a grid");
    CLI::App* s_gaps = app.add_subcommand("gaps", "emit gap endpoints and lengths");
    CLI::App* s_phi = app.add_subcommand("phi", "emit (x, phi, psi) over the first gaps");
    CLI::App* s_herman =
        app.add_subcommand("herman-check", "exponent estimate and product-collapse identity");
    CLI::App* s_family =
        app.add_subcommand("family-audit", "product bound audit for the B family");
    CLI::App* s_lemma =
        app.add_subcommand("lemma-key", "gap traversal bound over (n, m) cells");
    CLI::App* s_sweep = app.add_subcommand("sweep", "periodic-orbit exponent sweep");
    s_sweep->add_flag("--mechanical", mechanical,
                      "include mechanical orbits of the convergents (q <= 34)");
    CLI::App* s_sturm =
        app.add_subcommand("sturmian-exponent", "rotation-side exponent of the assembled cocycle");
    CLI::App* s_demo =
        app.add_subcommand("demo-shift", "two-symbol locally constant example");

    for (CLI::App* sub :
         {s_stair, s_gaps, s_phi, s_herman, s_family, s_lemma, s_sweep, s_sturm, s_demo})
        add_common(sub);

    CLI11_PARSE(app, argc, argv);

    try {
        if (s_stair->parsed()) return run::staircase(cfg);
        if (s_gaps->parsed()) return run::gaps(cfg);
        if (s_phi->parsed()) return run::phi(cfg);
        if (s_herman->parsed()) return run::herman_check(cfg);
        if (s_family->parsed()) return run::family_audit(cfg);
        if (s_lemma->parsed()) return run::lemma_key(cfg);
        if (s_sweep->parsed()) return run::sweep(cfg, mechanical);
        if (s_sturm->parsed()) return run::sturmian_exponent(cfg);
        if (s_demo->parsed()) return run::demo_shift(cfg);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
