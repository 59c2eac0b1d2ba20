// Certified lower bound for differential-power codimension via bounded-degree
// linear algebra. Independent of the Groebner machinery by design: the only
// shared ingredients are polynomials and exact scalars, so this can serve as a
// cross-check for the normal-form route.
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nashforge/diffops.hpp"
#include "nashforge/errors.hpp"
#include "nashforge/groebner.hpp"

namespace nashforge {

namespace {

using Expo = std::vector<int>;
using SparseVec = std::map<Expo, Scalar>;

SparseVec to_sparse(const Polynomial& f) {
    SparseVec v;
    for (const auto& t : f.terms()) v.emplace(t.mono.e, t.coeff);
    return v;
}

// Echelonized span with full forward reduction; leading entry = lexicographically
// smallest exponent present. Deterministic given insertion order.
class EchelonSpan {
public:
    // Fully reduce v against the stored pivots.
    SparseVec reduce(SparseVec v) const {
        auto it = v.begin();
        while (it != v.end()) {
            auto p = pivots_.find(it->first);
            if (p == pivots_.end()) {
                ++it;
                continue;
            }
            Scalar factor = it->second;
            const Expo lead = it->first;
            for (const auto& [e, c] : p->second) {
                Budget::tick();
                auto slot = v.find(e);
                if (slot == v.end()) {
                    Scalar nv = Scalar::zero(factor.field()) - factor * c;
                    if (!nv.is_zero()) v.emplace(e, nv);
                } else {
                    slot->second = slot->second - factor * c;
                    if (slot->second.is_zero()) v.erase(slot);
                }
            }
            // the lead cancels against the pivot's implicit monic entry
            v.erase(lead);
            it = v.upper_bound(lead);
        }
        return v;
    }

    // Returns true when v enlarged the span.
    bool insert(SparseVec v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        Scalar inv = v.begin()->second.inverse();
        Expo lead = v.begin()->first;
        SparseVec row;
        for (auto& [e, c] : v)
            if (!(e == lead)) row.emplace(e, c * inv);
        pivots_.emplace(std::move(lead), std::move(row));
        return true;
    }

    size_t dim() const { return pivots_.size(); }

private:
    // lead exponent -> rest of the monic row (lead entry itself implicit 1)
    std::map<Expo, SparseVec> pivots_;
};

// Same incremental-rank idea over vectors keyed by (test index, exponent).
class KeyedRank {
public:
    using Key = std::pair<size_t, Expo>;
    using Vec = std::map<Key, Scalar>;

    bool add(Vec v) {
        auto it = v.begin();
        while (it != v.end()) {
            auto p = pivots_.find(it->first);
            if (p == pivots_.end()) {
                ++it;
                continue;
            }
            Scalar factor = it->second;
            const Key lead = it->first;
            for (const auto& [k, c] : p->second) {
                Budget::tick();
                auto slot = v.find(k);
                if (slot == v.end()) {
                    Scalar nv = Scalar::zero(factor.field()) - factor * c;
                    if (!nv.is_zero()) v.emplace(k, nv);
                } else {
                    slot->second = slot->second - factor * c;
                    if (slot->second.is_zero()) v.erase(slot);
                }
            }
            v.erase(lead);
            it = v.upper_bound(lead);
        }
        if (v.empty()) return false;
        Scalar inv = v.begin()->second.inverse();
        Key lead = v.begin()->first;
        Vec row;
        for (auto& [k, c] : v)
            if (!(k == lead)) row.emplace(k, c * inv);
        pivots_.emplace(std::move(lead), std::move(row));
        return true;
    }

    size_t rank() const { return pivots_.size(); }

private:
    std::map<Key, Vec> pivots_;
};

int max_generator_degree(const std::vector<Polynomial>& gens) {
    int d = 0;
    for (const auto& g : gens) d = std::max(d, g.degree());
    return d;
}

}  // namespace

int jets_default_cutoff(const Ideal& I, int n) {
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens())
        if (!g.is_zero()) gens.push_back(g);
    return n + max_generator_degree(gens) + 3;
}

long jets_codim_lower_bound(const Ideal& I, int n, int cutoff) {
    if (n < 1) throw std::invalid_argument("differential power index must be >= 1");
    const RingPtr& ring = I.ring();
    const FieldSpec& F = ring->field;
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) {
        if (g.is_zero()) continue;
        if (!g.constant_term().is_zero())
            throw std::invalid_argument(
                "expected every input generator to vanish at the origin; offending generator: " +
                g.to_string());
        gens.push_back(g);
    }

    size_t nv = ring->nvars();
    std::vector<Monomial> alphas = monomials_up_to_degree(nv, n - 1);
    if (gens.empty()) return static_cast<long>(alphas.size());

    int D = cutoff >= 0 ? cutoff : jets_default_cutoff(I, n);
    int maxf = max_generator_degree(gens);
    if (D < n + maxf)
        throw std::invalid_argument("jet cutoff must be at least " + std::to_string(n + maxf) +
                                    " (order plus max generator degree)");
    int E = D + (n - 1) + maxf;

    // Degree-bounded slice of the ideal, echelonized once.
    EchelonSpan span;
    for (const auto& f : gens) {
        int room = E - f.degree();
        if (room < 0) continue;
        for (const auto& gamma : monomials_up_to_degree(nv, room))
            span.insert(to_sparse(f.times_term(gamma, Scalar::one(F))));
    }

    // Test elements x^beta f_j, |beta| <= n-1 (enough for operators of order <= n-1).
    std::vector<Polynomial> tests;
    for (const auto& f : gens)
        for (const auto& beta : alphas) tests.push_back(f.times_term(beta, Scalar::one(F)));

    // Row of the constraint system for one unknown coefficient c_{alpha,mu}:
    // residuals of x^mu D^(alpha)(test_t) modulo the ideal slice, stacked over t.
    auto unknown_row = [&](const Monomial& alpha, const Monomial& mu) {
        KeyedRank::Vec row;
        for (size_t t = 0; t < tests.size(); ++t) {
            Polynomial contrib =
                apply_divided_power(alpha, tests[t]).times_term(mu, Scalar::one(F));
            for (auto& [e, c] : span.reduce(to_sparse(contrib)))
                row.emplace(KeyedRank::Key{t, e}, c);
        }
        return row;
    };

    std::vector<Monomial> mus = monomials_up_to_degree(nv, D);
    KeyedRank full, tail;
    for (const auto& alpha : alphas)
        for (const auto& mu : mus) {
            KeyedRank::Vec row = unknown_row(alpha, mu);
            full.add(row);
            if (mu.degree() > 0) tail.add(std::move(row));
        }

    long p = static_cast<long>(alphas.size());  // projection coordinates c_{alpha,0}
    return p - static_cast<long>(full.rank()) + static_cast<long>(tail.rank());
}

}  // namespace nashforge
