#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nashforge/groebner.hpp"
#include "nashforge/ideal.hpp"
#include "nashforge/polynomial.hpp"

namespace nashforge {

// Differential operator sum_alpha g_alpha D^(alpha), where D^(alpha) is the
// divided-power basis operator sending x^beta to C(beta, alpha) x^(beta-alpha).
// Parts are sorted by alpha (enumeration order), zero coefficients dropped.
struct DiffOp {
    RingPtr ring;
    std::vector<std::pair<Monomial, Polynomial>> parts;

    static DiffOp identity(const RingPtr& ring);

    int order() const;  // max |alpha| present, -1 when zero
    bool is_zero() const;
    Polynomial apply(const Polynomial& f) const;
    std::string to_string() const;  // e.g. "3*x^2*D[1,0] + D[0,0]"
};

// Generators, as a module over the coordinate ring, of the operators of order
// <= n preserving I (delta(I) inside I). Coefficients are reduced mod I;
// canonical, deterministic list.
std::vector<DiffOp> idealizer_operators(const Ideal& I, int n);

struct DiffPowerResult {
    Ideal power;  // the n-th differential power of the origin's maximal ideal, as an ideal containing I
    long codim = 0;  // dim_K of the quotient by it
    std::vector<DiffOp> ops;  // the order <= n-1 operators used
};

// n-th differential power of the maximal ideal at the origin of V(I).
// Every generator of I must vanish at the origin. n >= 1.
DiffPowerResult differential_power(const Ideal& I, int n);

struct PairingResult {
    std::vector<DiffOp> ops;          // operators of order <= n-1
    std::vector<Monomial> monomials;  // standard monomials of the n-th differential power
    std::vector<std::vector<Scalar>> matrix;  // constant term of op_i applied to mono_j
    size_t rank = 0;
};

// Pairing between low-order operators and the quotient by the n-th
// differential power; full rank certifies non-degeneracy.
PairingResult diff_pairing(const Ideal& I, int n);

struct CoreChainResult {
    std::vector<Ideal> powers;  // differential powers 1..upto
    std::vector<long> codims;
    std::string verdict;  // CORE_STABILIZED | CORE_ZERO_LIKELY | CHAIN_INCONCLUSIVE
};

// Descending chain of differential powers of the maximal ideal; verdict
// CORE_STABILIZED when the last two coincide, CORE_ZERO_LIKELY when the
// codimension grew strictly at every step, CHAIN_INCONCLUSIVE otherwise.
CoreChainResult differential_core_chain(const Ideal& I, int upto);

// Certified lower bound for the codimension of the n-th differential power,
// computed by bounded-degree linear algebra only (no Groebner bases). The
// bound is monotone in the degree cutoff; cutoff < 0 picks a default.
long jets_codim_lower_bound(const Ideal& I, int n, int cutoff);

// Default cutoff used by jets_codim_lower_bound.
int jets_default_cutoff(const Ideal& I, int n);

}  // namespace nashforge
