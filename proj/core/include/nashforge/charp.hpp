#pragma once

#include <string>
#include <vector>

#include "nashforge/groebner.hpp"
#include "nashforge/ideal.hpp"

namespace nashforge {

// Presentation of R^(1/q), q = p^e, as a module over R = S/I: one free
// generator per exponent box monomial x^(a/q), a in [0,q)^nvars, and one
// relation row per (ideal generator, box monomial) pair.
struct FrobeniusPresentation {
    long q = 1;
    std::vector<Monomial> basis;  // box exponents, first coordinate fastest
    PolyMatrix rows;              // q-th root expansions of x^beta * f_j
};

// Requires a prime field. e >= 1.
FrobeniusPresentation frobenius_pushforward(const Ideal& I, int e);

struct KunzResult {
    std::string verdict;  // REGULAR | SINGULAR
    long q = 1;
    size_t generators = 0;  // q^nvars
    long target_rank = 0;   // q^dim, the free rank forced at a regular point
    size_t rank_at_origin = 0;
    long rank_generic = -1;  // -1: not needed, origin rank already decided
    int dim = 0;
};

// Regularity at the origin via freeness of R^(1/q) (rank certificates on the
// presentation matrix). I must be prime.
KunzResult kunz_regularity(const Ideal& I, int e);

struct FedderResult {
    std::string verdict;  // F_PURE | NOT_F_PURE
    Polynomial witness;   // element of (I^[p] : I) not in m^[p]; zero when none
};

// Fedder's criterion at the origin: F-pure iff (I^[p] : I) is not contained in
// the p-th bracket power of the maximal ideal.
FedderResult fedder_fpure(const Ideal& I);

struct SmoothnessResult {
    std::string verdict;  // SMOOTH | SINGULAR
    size_t jacobian_rank_at_origin = 0;
    size_t expected_corank = 0;  // nvars - dim
    int dim = 0;
};

// Jacobian criterion at the origin.
SmoothnessResult jacobian_smoothness(const Ideal& I);

}  // namespace nashforge
