#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nashforge/groebner.hpp"
#include "nashforge/ideal.hpp"

namespace nashforge {

// Presentation of the module of principal parts of order n for R = S/I:
// one free generator per column monomial (the truncated Taylor basis), one
// relation row per (ideal generator, shift monomial) pair.
struct PPartsPresentation {
    int order = 0;
    std::vector<Monomial> cols;  // |alpha| <= order, enumeration order
    PolyMatrix raw_rows;         // coefficient of z^col in z^shift * shifted generator
    PolyMatrix rows;             // same, reduced mod I, zero rows dropped
    size_t generic_rank = 0;     // rank of the module over the fraction field
    int dim = 0;                 // Krull dimension of R
    long expected_rank = 0;      // C(order + dim, dim)
};

PPartsPresentation principal_parts(const Ideal& I, int n);

struct TorsionResult {
    Polynomial multiplier;  // element inverted to kill torsion (vanishes on the singular locus)
    int stabilized_at = 0;  // colon iterations until the chain stopped
    bool torsion_free = false;
    std::vector<VecPoly> witnesses;  // classes generating the torsion, empty when free
    Submodule relations;             // rows + I * S^N
    Submodule saturated;             // (relations : multiplier^infinity)
};

// Torsion submodule of the principal parts module, found by saturating the
// relation module at an element cutting out the singular locus. multiplier may
// be zero to let the routine pick a nonzero Jacobian minor. I must be prime.
TorsionResult pparts_torsion(const Ideal& I, const PPartsPresentation& P,
                             const Polynomial& multiplier);

struct FreeRankResult {
    long primary = 0;       // dim_K R / (differential power of order n+1)
    long expected = 0;      // C(n + dim, dim)
    size_t generic_rank = 0;
    bool structural_free = false;  // torsion-free quotient certified free of expected rank
    int dim = 0;
};

// Rank of the maximal free direct summand of the principal parts module at the
// origin, with an independent structural certificate.
FreeRankResult pparts_free_rank(const Ideal& I, int n);

// i-th Fitting ideal of the module presented by `rows` on `gens` free
// generators: the ideal of (gens - i)-minors, reduced mod I. Fitt_i = (1) for
// i >= gens, and the zero ideal when more than rows.size() minors are needed
// (in particular Fitt_i = 0 for i < 0 with a nonempty presentation demand).
Ideal fitting_ideal(const PolyMatrix& rows, size_t gens, long i, const Ideal& I);

struct NashCheckResult {
    std::string verdict;  // NOT_ISO | ISO_CERTIFIED | NO_OBSTRUCTION
    FreeRankResult free_rank;
    std::vector<std::string> caveats;
    // certification evidence (hypersurface route), empty otherwise
    std::vector<Polynomial> fitting_gens;  // nonzero reduced minors of the relation matrix
    long fitting_local_gens = -1;          // dim_K J/mJ at the origin, -1 when not computed
    // when ISO_CERTIFIED: a minor whose residue spans J/mJ (local generator)
    std::optional<Polynomial> principal_witness;
};

// Can the order-n Nash modification be an isomorphism above the origin?
// NOT_ISO is a proof of obstruction; ISO_CERTIFIED additionally certifies the
// Fitting ideal is locally principal (hypersurfaces only); NO_OBSTRUCTION means
// the free-rank test passed but no certificate was attempted.
// certify=true demands the certificate and throws UnsupportedScopeError when
// the input is out of its scope.
NashCheckResult nash_isomorphism_check(const Ideal& I, int n, bool certify);

// Largest minor size cap before certification degrades to NO_OBSTRUCTION.
constexpr unsigned long long kFittingMinorCap = 20000;

}  // namespace nashforge
