#pragma once

#include <string>

#include "sturmlab/lab.hpp"

namespace sturmlab::run {

// Each runner renders its table (respecting cfg.format/cfg.out) and returns
// a process exit code: 0 clean, 1 when any in-run assertion failed. The
// rendered text is also returned through `rendered` when non-null, which is
// what the determinism tests compare.
int staircase(const RunConfig& cfg, std::string* rendered = nullptr);
int gaps(const RunConfig& cfg, std::string* rendered = nullptr);
int phi(const RunConfig& cfg, std::string* rendered = nullptr);
int herman_check(const RunConfig& cfg, std::string* rendered = nullptr);
int family_audit(const RunConfig& cfg, std::string* rendered = nullptr);
int lemma_key(const RunConfig& cfg, std::string* rendered = nullptr);
int sweep(const RunConfig& cfg, bool mechanical, std::string* rendered = nullptr);
int sturmian_exponent(const RunConfig& cfg, std::string* rendered = nullptr);
int demo_shift(const RunConfig& cfg, std::string* rendered = nullptr);

}  // namespace sturmlab::run
