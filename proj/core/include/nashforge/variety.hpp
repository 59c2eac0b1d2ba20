#pragma once

#include <string>
#include <vector>

#include "nashforge/ideal.hpp"

namespace nashforge {

// Parsed and validated task input: a ring, an ideal whose study point has been
// translated to the origin, and optionally a finite matrix group and per-file
// task defaults. `raw` keeps the exact file bytes for content hashing.
struct VarietyInput {
    FieldSpec field;
    RingPtr ring;
    Ideal ideal;
    std::vector<Scalar> point;  // study point in the input coordinates; empty = origin
    std::vector<std::vector<std::vector<Scalar>>> group_mats;  // empty = no [group] block
    std::string task_kind;  // [task] defaults; empty / 0 when absent
    int order = 0;
    int cutoff = 0;
    std::string source;  // file name used in error messages
    std::string raw;
};

// Input grammar (line-oriented; '#' starts a comment; see README for the EBNF):
//
//   [variety]
//   char  = 0                  # 0 for the rationals, else a prime < 2^31
//   vars  = x, y
//   ideal = x^3 - y^2          # repeatable, and ';' separates generators
//   point = 0, 0               # optional rational coordinates, default origin
//
//   [group]                    # optional: every element, identity included
//   matrix = 1, 0; 0, 1        # rows ';'-separated, entries ','-separated
//   matrix = -1, 0; 0, -1
//
//   [task]                     # optional per-file defaults
//   kind   = nash-check
//   order  = 1
//   cutoff = 8
//
// Generators must vanish at the study point; the ideal is rewritten in
// coordinates centered there. Errors carry source:line positions.
VarietyInput parse_variety_text(const std::string& text, const std::string& source);
VarietyInput parse_variety_file(const std::string& path);

}  // namespace nashforge
