#include "nashforge/invariants.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "nashforge/errors.hpp"
#include "nashforge/linalg.hpp"

namespace nashforge {

namespace {

using Matrix = std::vector<std::vector<Scalar>>;

bool is_identity(const Matrix& M) {
    for (size_t i = 0; i < M.size(); ++i)
        for (size_t j = 0; j < M.size(); ++j) {
            if (i == j && !M[i][j].is_one()) return false;
            if (i != j && !M[i][j].is_zero()) return false;
        }
    return true;
}

Matrix multiply(const Matrix& A, const Matrix& B, const FieldSpec& F) {
    size_t n = A.size();
    Matrix C(n, std::vector<Scalar>(n, Scalar::zero(F)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (A[i][k].is_zero()) continue;
            for (size_t j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
        }
    return C;
}

bool same_matrix(const Matrix& A, const Matrix& B) {
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < A.size(); ++j)
            if (A[i][j] != B[i][j]) return false;
    return true;
}

size_t matrix_rank(const Matrix& M, const FieldSpec& F) {
    ScalarMatrix A(F, M.size(), M.size());
    for (size_t i = 0; i < M.size(); ++i)
        for (size_t j = 0; j < M.size(); ++j) A.at(i, j) = M[i][j];
    return A.rank();
}

std::string describe_matrix(const Matrix& M) {
    std::string s;
    for (size_t i = 0; i < M.size(); ++i) {
        if (i) s += "; ";
        for (size_t j = 0; j < M.size(); ++j) {
            if (j) s += ",";
            s += M[i][j].to_string();
        }
    }
    return s;
}

}  // namespace

GroupAction make_group_action(const RingPtr& ring,
                              std::vector<std::vector<std::vector<Scalar>>> mats) {
    const FieldSpec& F = ring->field;
    size_t n = ring->nvars();
    if (mats.empty()) throw std::invalid_argument("group action needs at least the identity");
    for (const auto& M : mats) {
        if (M.size() != n)
            throw std::invalid_argument("group matrix size does not match the variable count");
        for (const auto& row : M)
            if (row.size() != n)
                throw std::invalid_argument("group matrix is not square");
        if (matrix_rank(M, F) != n)
            throw std::invalid_argument("group matrix is singular: " + describe_matrix(M));
    }
    for (size_t a = 0; a < mats.size(); ++a)
        for (size_t b = a + 1; b < mats.size(); ++b)
            if (same_matrix(mats[a], mats[b]))
                throw std::invalid_argument("group element listed twice: " +
                                            describe_matrix(mats[a]));
    bool has_id = false;
    for (const auto& M : mats) has_id = has_id || is_identity(M);
    if (!has_id) throw std::invalid_argument("group element list is missing the identity");
    for (const auto& A : mats)
        for (const auto& B : mats) {
            Matrix P = multiply(A, B, F);
            bool found = false;
            for (const auto& M : mats) found = found || same_matrix(M, P);
            if (!found)
                throw std::invalid_argument("group element list is not closed under products; "
                                            "missing " +
                                            describe_matrix(P));
        }
    if (F.is_prime_field() && static_cast<long>(mats.size()) % F.p == 0)
        throw UnsupportedScopeError("group order divisible by the characteristic",
                                    std::to_string(mats.size()) + " in " + F.describe());
    return GroupAction{ring, std::move(mats)};
}

Polynomial reynolds(const GroupAction& G, const Polynomial& f) {
    const RingPtr& ring = G.ring;
    Polynomial acc(ring);
    for (const auto& M : G.mats) {
        std::vector<Polynomial> images;
        images.reserve(ring->nvars());
        for (size_t i = 0; i < ring->nvars(); ++i) {
            Polynomial img(ring);
            for (size_t j = 0; j < ring->nvars(); ++j) {
                if (M[i][j].is_zero()) continue;
                img += Polynomial::variable(ring, j).scaled(M[i][j]);
            }
            images.push_back(std::move(img));
        }
        acc += f.substitute(images);
    }
    return acc.scaled(Scalar::from_int(ring->field, static_cast<long>(G.order())).inverse());
}

int find_pseudo_reflection(const GroupAction& G) {
    const FieldSpec& F = G.ring->field;
    size_t n = G.ring->nvars();
    for (size_t g = 0; g < G.mats.size(); ++g) {
        if (is_identity(G.mats[g])) continue;
        Matrix M = G.mats[g];
        for (size_t i = 0; i < n; ++i) M[i][i] -= Scalar::one(F);
        if (matrix_rank(M, F) <= 1) return static_cast<int>(g);
    }
    return -1;
}

std::vector<Polynomial> invariant_generators(const GroupAction& G) {
    const RingPtr& ring = G.ring;
    size_t nv = ring->nvars();
    long bound = static_cast<long>(G.order());  // Noether degree bound, valid when |G| is a unit

    std::vector<std::vector<Polynomial>> graded(bound + 1);  // invariant space bases per degree
    std::vector<Polynomial> gens;

    for (long t = 1; t <= bound; ++t) {
        std::vector<Monomial> monos = monomials_of_degree(nv, static_cast<int>(t));
        std::map<std::vector<int>, size_t> col;
        for (size_t i = 0; i < monos.size(); ++i) col.emplace(monos[i].e, i);
        auto vectorize = [&](const Polynomial& f) {
            std::map<size_t, Scalar> v;
            for (const auto& term : f.terms()) v.emplace(col.at(term.mono.e), term.coeff);
            return v;
        };

        SparseRank vt(ring->field);
        for (const auto& m : monos) {
            Polynomial r = reynolds(G, Polynomial::monomial(ring, m));
            if (r.is_zero()) continue;
            if (vt.add_row(vectorize(r))) graded[t].push_back(r);
        }

        SparseRank dec(ring->field);
        for (long a = 1; a < t; ++a)
            for (const auto& u : graded[a])
                for (const auto& v : graded[t - a]) dec.add_row(vectorize(u * v));
        for (const auto& w : graded[t])
            if (dec.add_row(vectorize(w))) gens.push_back(w.monic());
    }
    return gens;
}

InvariantPresentation invariant_presentation(const GroupAction& G) {
    const RingPtr& ring = G.ring;
    size_t nv = ring->nvars();
    InvariantPresentation out;
    out.gens = invariant_generators(G);

    std::vector<std::string> unames;
    for (const char* prefix : {"u", "w", "inv"}) {
        unames.clear();
        bool clash = false;
        for (size_t i = 0; i < out.gens.size() && !clash; ++i) {
            std::string name = prefix + std::to_string(i + 1);
            if (ring->var_index(name) >= 0) clash = true;
            unames.push_back(name);
        }
        if (!clash) break;
    }

    std::vector<std::string> big_vars = ring->vars;
    big_vars.insert(big_vars.end(), unames.begin(), unames.end());
    RingPtr big = make_ring(ring->field, big_vars);
    std::vector<int> into_big(nv);
    for (size_t i = 0; i < nv; ++i) into_big[i] = static_cast<int>(i);

    std::vector<Polynomial> rel_gens;
    for (size_t i = 0; i < out.gens.size(); ++i)
        rel_gens.push_back(Polynomial::variable(big, nv + i) - out.gens[i].map_into(big, into_big));

    std::vector<size_t> drop(nv);
    for (size_t i = 0; i < nv; ++i) drop[i] = i;
    out.relations = eliminate(Ideal(big, std::move(rel_gens)), drop);
    out.uring = out.relations.ring();
    return out;
}

QuotientDiffResult quotient_diff_power_dims(const GroupAction& G, int n) {
    if (n < 1) throw std::invalid_argument("order must be >= 1");
    if (G.order() == 1)
        throw UnsupportedScopeError("trivial group action",
                                    "the quotient inequality needs a non-trivial group");
    int refl = find_pseudo_reflection(G);
    if (refl >= 0)
        throw UnsupportedScopeError("action has a pseudo-reflection",
                                    "element #" + std::to_string(refl) + ": " +
                                        describe_matrix(G.mats[refl]));

    const RingPtr& ring = G.ring;
    size_t nv = ring->nvars();
    QuotientDiffResult out;
    out.order = n;
    out.presentation = invariant_presentation(G);

    long bound = 1;
    for (int i = 1; i <= static_cast<int>(nv); ++i) bound = bound * (n + i) / i;
    out.bound = bound;  // C(n + nvars, nvars)

    // invariants modulo the (n+1)-st power of the ambient maximal ideal,
    // carved out by elimination
    std::vector<std::string> big_vars = ring->vars;
    size_t m = out.presentation.gens.size();
    for (size_t i = 0; i < m; ++i) big_vars.push_back(out.presentation.uring->vars[i]);
    RingPtr big = make_ring(ring->field, big_vars);
    std::vector<int> into_big(nv);
    for (size_t i = 0; i < nv; ++i) into_big[i] = static_cast<int>(i);

    std::vector<Polynomial> gens;
    for (const auto& mono : monomials_of_degree(nv, n + 1)) {
        Monomial lifted(big->nvars());
        for (size_t i = 0; i < nv; ++i) lifted.e[i] = mono.e[i];
        gens.push_back(Polynomial::monomial(big, lifted));
    }
    for (size_t i = 0; i < m; ++i)
        gens.push_back(Polynomial::variable(big, nv + i) -
                       out.presentation.gens[i].map_into(big, into_big));
    std::vector<size_t> drop(nv);
    for (size_t i = 0; i < nv; ++i) drop[i] = i;
    Ideal eta_preimage = eliminate(Ideal(big, std::move(gens)), drop);
    auto codim = k_dimension(eta_preimage);
    if (!codim) throw std::logic_error("invariant quotient unexpectedly infinite-dimensional");
    out.eta_codim = *codim;

    // independent route: differential power computed on the presentation
    out.crosscheck_codim = differential_power(out.presentation.relations, n + 1).codim;

    out.verdict = out.eta_codim < out.bound ? "NOT_ISO" : "NO_OBSTRUCTION";
    return out;
}

}  // namespace nashforge
