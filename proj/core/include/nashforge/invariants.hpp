#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nashforge/diffops.hpp"
#include "nashforge/ideal.hpp"

namespace nashforge {

// Finite linear group action on the polynomial ring: one invertible matrix per
// element, identity included, closed under products and inverses. The group
// order must be invertible in the coefficient field.
struct GroupAction {
    RingPtr ring;
    std::vector<std::vector<std::vector<Scalar>>> mats;  // row-major square matrices

    size_t order() const { return mats.size(); }
};

// Validates the axioms and the non-modular requirement; throws
// std::invalid_argument / UnsupportedScopeError with a witness otherwise.
GroupAction make_group_action(const RingPtr& ring,
                              std::vector<std::vector<std::vector<Scalar>>> mats);

// Averaging projector onto the invariants.
Polynomial reynolds(const GroupAction& G, const Polynomial& f);

// Index of a non-identity element fixing a hyperplane (rank(g - id) <= 1),
// or -1 when the action is free in codimension one ("small").
int find_pseudo_reflection(const GroupAction& G);

// Minimal homogeneous generators of the invariant ring, found degree by degree
// up to the group-order bound. Deterministic: monic, sorted by (degree, order).
std::vector<Polynomial> invariant_generators(const GroupAction& G);

struct InvariantPresentation {
    std::vector<Polynomial> gens;  // invariant generators in the original variables
    RingPtr uring;                 // one fresh variable per generator
    Ideal relations;               // kernel of uring -> invariants, u_i -> gens[i]
};

InvariantPresentation invariant_presentation(const GroupAction& G);

struct QuotientDiffResult {
    int order = 0;  // n
    long eta_codim = 0;   // dim_K of the invariant ring modulo the (n+1)-st differential power
    long bound = 0;       // C(n + dim, dim) with dim = nvars
    long crosscheck_codim = 0;  // same value along the presentation-ideal route
    std::string verdict;        // NOT_ISO | NO_OBSTRUCTION
    InvariantPresentation presentation;
};

// Obstruction test for the order-n Nash modification of a linear quotient
// singularity: compares the codimension of the (n+1)-st differential power of
// the invariant ring's maximal ideal against the smooth value. The action must
// have no pseudo-reflections.
QuotientDiffResult quotient_diff_power_dims(const GroupAction& G, int n);

}  // namespace nashforge
