#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sturmlab/ball.hpp"

namespace sturmlab {

// Deterministic text emission: identical config + seed must give
// byte-identical files, so every number goes through one formatter and
// parallel producers fill index-addressed rows.
std::string fmt_double(double v);
std::string fmt_ball(const BallReal& b, int digits = 40);

struct Meta {
    std::vector<std::pair<std::string, std::string>> kv;
    void add(const std::string& k, const std::string& v) { kv.emplace_back(k, v); }
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string render_csv(const Meta& meta, const Table& t);
std::string render_json(const Meta& meta, const Table& t);

// path empty = stdout
void write_output(const std::string& path, const std::string& content);

}  // namespace sturmlab
