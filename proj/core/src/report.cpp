#include "nashforge/report.hpp"

#include <cstdio>

#include "json.hpp"

namespace nashforge {

std::string fnv1a_hash(const std::string& bytes) {
    unsigned long long h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a:%016llx", h);
    return buf;
}

namespace {

nlohmann::ordered_json to_json(const EvidenceValue& v) {
    nlohmann::ordered_json j;
    std::visit([&](const auto& x) { j = x; }, v);
    return j;
}

}  // namespace

std::string emit_json(const Report& r) {
    nlohmann::ordered_json j;
    j["task"] = r.task;
    j["input_hash"] = r.input_hash;
    j["characteristic"] = r.characteristic;
    j["dim"] = r.dim;
    j["order"] = r.order;
    j["evidence"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : r.evidence) j["evidence"][key] = to_json(value);
    j["verdict"] = r.verdict;
    j["caveats"] = r.caveats;
    j["ms"] = 0;
    return j.dump(2) + "\n";
}

std::string emit_text(const Report& r) {
    std::string out;
    out += "== " + r.task + " ==\n";
    out += "input hash:     " + r.input_hash + "\n";
    out += "characteristic: " + std::to_string(r.characteristic) + "\n";
    out += "dim:            " + std::to_string(r.dim) + "\n";
    out += "order:          " + std::to_string(r.order) + "\n";
    out += "verdict:        " + r.verdict + "\n";
    out += "evidence:\n";
    for (const auto& [key, value] : r.evidence)
        out += "  " + key + ": " + to_json(value).dump() + "\n";
    if (!r.caveats.empty()) {
        out += "caveats:\n";
        for (const auto& c : r.caveats) out += "  - " + c + "\n";
    }
    out += "time:           " + std::to_string(r.ms) + " ms\n";
    return out;
}

}  // namespace nashforge
