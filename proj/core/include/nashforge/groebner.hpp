#pragma once

#include <optional>
#include <vector>

#include "nashforge/ideal.hpp"
#include "nashforge/polynomial.hpp"

namespace nashforge {

// Reduction-step budget, per thread. Every cancellation in a division step and
// every queued S-pair costs one tick; exhaustion raises BudgetExceededError.
class Budget {
public:
    static constexpr unsigned long kDefault = 10'000'000;
    static void reset(unsigned long limit = kDefault);
    static void tick();
    static unsigned long used();
    static unsigned long limit();
};

// Element of a free module S^k, stored densely by component.
struct VecPoly {
    RingPtr ring;
    std::vector<Polynomial> c;

    VecPoly() = default;
    VecPoly(RingPtr r, size_t rank);
    static VecPoly unit(const RingPtr& r, size_t rank, size_t comp);
    static VecPoly unit_times(const RingPtr& r, size_t rank, size_t comp, const Polynomial& f);

    size_t rank() const { return c.size(); }
    bool is_zero() const;

    VecPoly operator+(const VecPoly& o) const;
    VecPoly operator-(const VecPoly& o) const;
    VecPoly scaled(const Scalar& s) const;
    VecPoly times_term(const Monomial& m, const Scalar& s) const;

    bool operator==(const VecPoly& o) const;
    int cmp(const VecPoly& o) const;
    std::string to_string() const;
};

enum class ModOrderKind { PositionOverTerm, TermOverPosition };

// Module monomial order built over the ring's order. PositionOverTerm makes
// lower component indices dominate, which is the elimination shape used for
// syzygy extraction.
struct ModTerm {
    size_t comp;
    Monomial mono;
};

struct ModuleOrder {
    ModOrderKind kind = ModOrderKind::PositionOverTerm;
    MonomialOrder mono;

    int cmp(const ModTerm& a, const ModTerm& b) const;
};

ModTerm leading_modterm(const VecPoly& v, const ModuleOrder& ord);
Scalar leading_modcoeff(const VecPoly& v, const ModuleOrder& ord);

// --- module-level engine ---------------------------------------------------

VecPoly module_normal_form(VecPoly f, const std::vector<VecPoly>& basis, const ModuleOrder& ord);

// Reduced, monic, canonically sorted basis.
std::vector<VecPoly> module_groebner(std::vector<VecPoly> gens, const ModuleOrder& ord);

// Submodule of S^rank with a cached canonical basis.
class Submodule {
public:
    Submodule() = default;
    Submodule(RingPtr ring, size_t rank, std::vector<VecPoly> gens,
              ModOrderKind kind = ModOrderKind::PositionOverTerm);

    const RingPtr& ring() const { return ring_; }
    size_t rank() const { return rank_; }
    const std::vector<VecPoly>& gens() const { return gens_; }
    ModuleOrder order() const;

    const std::vector<VecPoly>& groebner() const;
    VecPoly nf(const VecPoly& v) const;
    bool contains(const VecPoly& v) const;
    bool equals(const Submodule& o) const;

private:
    RingPtr ring_;
    size_t rank_ = 0;
    std::vector<VecPoly> gens_;
    ModOrderKind kind_ = ModOrderKind::PositionOverTerm;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

// Generators of the syzygy module of the given elements of S^k.
std::vector<VecPoly> syzygies(const std::vector<VecPoly>& gens, const RingPtr& ring, size_t rank);

// Kernel of S^a -> S^b / <rels>, v |-> sum v_i cols_i.
Submodule module_kernel(const std::vector<VecPoly>& cols, const std::vector<VecPoly>& rels,
                        const RingPtr& ring, size_t b);

// Kernel of S^a -> (S/I)^b given the b x a matrix A.
Submodule kernel_of_quotient_map(const std::vector<std::vector<Polynomial>>& A, const Ideal& I);

// (0 : c^infinity) inside S^rank / <rels>: ascending chain (rels : c^t), with the
// index where it stabilizes.
struct SaturationResult {
    Submodule saturated;  // (rels : c^t_stab) as a submodule of S^rank
    int stabilized_at = 0;
};
SaturationResult saturate_zero(const Submodule& rels, const Polynomial& c);

// --- ideal-level operations ------------------------------------------------

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, const RingPtr& ring);

// quotient and remainder of division by a single polynomial; remainder must
// vanish for exact_divide.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
// (I : J); J must contain a nonzero generator.
Ideal ideal_colon(const Ideal& I, const Ideal& J);

// I ∩ K[kept variables]; drop lists variable indices to eliminate.
Ideal eliminate(const Ideal& I, const std::vector<size_t>& drop);

// dim_K S^k/<N> (per-component staircase count); nullopt when infinite.
std::optional<long> k_dimension(const Submodule& N);
// dim_K S/I
std::optional<long> k_dimension(const Ideal& I);

// Krull dimension of S/I via independent sets of the leading-term ideal.
// -1 for the unit ideal.
int krull_dimension(const Ideal& I);

// Ascending list of monomials outside lt(I); requires finite codimension.
std::vector<Monomial> standard_monomials(const Ideal& I);

// --- matrices over S reduced mod I -----------------------------------------

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Rank over Frac(S/I); I must be prime (domain promise, unchecked).
size_t rank_mod_ideal(const PolyMatrix& M, const Ideal& I);

// Rank of the scalar matrix of constant terms.
size_t rank_at_origin(const PolyMatrix& M, const FieldSpec& F);

// All k x k minors (unreduced). Deterministic enumeration order.
std::vector<Polynomial> matrix_minors(const PolyMatrix& M, size_t k, const RingPtr& ring);

// Number of k x k minors without enumerating them.
unsigned long long count_minors(size_t rows, size_t cols, size_t k);

}  // namespace nashforge
