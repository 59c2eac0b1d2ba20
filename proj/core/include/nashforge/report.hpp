#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace nashforge {

// One evidence entry: scalars, flags, generator lists, or matrices of
// canonical polynomial strings. Kept as a plain variant so this header stays
// dependency-free; JSON rendering is an implementation detail of emit_json.
using EvidenceValue = std::variant<long, bool, std::string, std::vector<long>,
                                   std::vector<std::string>, std::vector<std::vector<std::string>>>;

struct Report {
    std::string task;
    std::string input_hash;  // fnv1a over the exact input bytes
    long characteristic = 0;
    int dim = 0;
    int order = 0;  // task order / Frobenius power; 0 when not applicable
    std::vector<std::pair<std::string, EvidenceValue>> evidence;
    std::string verdict;
    std::vector<std::string> caveats;
    long ms = 0;  // wall time; serialized as 0 in JSON so reruns are byte-identical
};

// 64-bit FNV-1a of the raw bytes, formatted "fnv1a:<16 hex digits>".
std::string fnv1a_hash(const std::string& bytes);

// Canonical JSON document (fixed key order, two-space indent, trailing
// newline). Identical reports serialize to identical bytes; ms is emitted as 0.
std::string emit_json(const Report& r);

// Human-readable rendering of the same content, including the measured time.
std::string emit_text(const Report& r);

}  // namespace nashforge
