#include "sturmlab/emit.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include <json.hpp>

namespace sturmlab {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_ball(const BallReal& b, int digits) {
    char* ms = nullptr;
    mpfr_asprintf(&ms, "%.*Rg", digits, b.mid());
    std::string out(ms);
    mpfr_free_str(ms);
    return out;
}

std::string render_csv(const Meta& meta, const Table& t) {
    std::string out;
    for (const auto& [k, v] : meta.kv) out += "# " + k + ": " + v + "\n";
    for (size_t i = 0; i < t.header.size(); ++i)
        out += (i ? "," : "") + t.header[i];
    out += "\n";
    for (const auto& row : t.rows) {
        for (size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + row[i];
        out += "\n";
    }
    return out;
}

std::string render_json(const Meta& meta, const Table& t) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json m = nlohmann::ordered_json::object();
    for (const auto& [k, v] : meta.kv) m[k] = v;
    j["meta"] = m;
    j["columns"] = t.header;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) rows.push_back(row);
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << content;
}

}  // namespace sturmlab
