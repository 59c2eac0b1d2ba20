#include "nashforge/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <mutex>
#include <stdexcept>

#include "nashforge/errors.hpp"
#include "nashforge/linalg.hpp"

namespace nashforge {

// --- budget -----------------------------------------------------------------

namespace {
thread_local unsigned long g_budget_limit = Budget::kDefault;
thread_local unsigned long g_budget_used = 0;
}  // namespace

void Budget::reset(unsigned long limit) {
    g_budget_limit = limit;
    g_budget_used = 0;
}

void Budget::tick() {
    if (++g_budget_used > g_budget_limit)
        throw BudgetExceededError("reduction-step budget of " + std::to_string(g_budget_limit) +
                                  " exhausted");
}

unsigned long Budget::used() { return g_budget_used; }
unsigned long Budget::limit() { return g_budget_limit; }

// --- VecPoly ----------------------------------------------------------------

VecPoly::VecPoly(RingPtr r, size_t rank) : ring(std::move(r)), c(rank, Polynomial(ring)) {}

VecPoly VecPoly::unit(const RingPtr& r, size_t rank, size_t comp) {
    return unit_times(r, rank, comp, Polynomial::constant(r, 1));
}

VecPoly VecPoly::unit_times(const RingPtr& r, size_t rank, size_t comp, const Polynomial& f) {
    VecPoly v(r, rank);
    assert(comp < rank);
    v.c[comp] = f;
    return v;
}

bool VecPoly::is_zero() const {
    for (const auto& p : c)
        if (!p.is_zero()) return false;
    return true;
}

VecPoly VecPoly::operator+(const VecPoly& o) const {
    assert(c.size() == o.c.size());
    VecPoly r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

VecPoly VecPoly::operator-(const VecPoly& o) const {
    assert(c.size() == o.c.size());
    VecPoly r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
}

VecPoly VecPoly::scaled(const Scalar& s) const {
    VecPoly r = *this;
    for (auto& p : r.c) p = p.scaled(s);
    return r;
}

VecPoly VecPoly::times_term(const Monomial& m, const Scalar& s) const {
    VecPoly r = *this;
    for (auto& p : r.c) p = p.times_term(m, s);
    return r;
}

bool VecPoly::operator==(const VecPoly& o) const {
    if (c.size() != o.c.size()) return false;
    for (size_t i = 0; i < c.size(); ++i)
        if (!(c[i] == o.c[i])) return false;
    return true;
}

int VecPoly::cmp(const VecPoly& o) const {
    assert(c.size() == o.c.size());
    for (size_t i = 0; i < c.size(); ++i) {
        int d = c[i].cmp(o.c[i]);
        if (d != 0) return d;
    }
    return 0;
}

std::string VecPoly::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) out += ", ";
        out += c[i].to_string();
    }
    return out + ")";
}

// --- module order -----------------------------------------------------------

int ModuleOrder::cmp(const ModTerm& a, const ModTerm& b) const {
    if (kind == ModOrderKind::PositionOverTerm) {
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;  // lower component dominates
        return mono.cmp(a.mono, b.mono);
    }
    int c = mono.cmp(a.mono, b.mono);
    if (c != 0) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
}

ModTerm leading_modterm(const VecPoly& v, const ModuleOrder& ord) {
    bool found = false;
    ModTerm best{0, Monomial()};
    for (size_t i = 0; i < v.c.size(); ++i) {
        if (v.c[i].is_zero()) continue;
        ModTerm t{i, v.c[i].leading_monomial()};
        if (!found || ord.cmp(t, best) > 0) {
            best = t;
            found = true;
        }
        if (ord.kind == ModOrderKind::PositionOverTerm && found) break;  // first nonzero wins
    }
    if (!found) throw std::logic_error("leading term of zero module element");
    return best;
}

Scalar leading_modcoeff(const VecPoly& v, const ModuleOrder& ord) {
    ModTerm t = leading_modterm(v, ord);
    return v.c[t.comp].leading_coeff();
}

// --- normal form ------------------------------------------------------------

namespace {

struct BasisView {
    const std::vector<VecPoly>* basis;
    std::vector<ModTerm> leads;
    std::vector<Scalar> lcs;

    BasisView(const std::vector<VecPoly>& b, const ModuleOrder& ord) : basis(&b) {
        leads.reserve(b.size());
        lcs.reserve(b.size());
        for (const auto& g : b) {
            leads.push_back(leading_modterm(g, ord));
            lcs.push_back(g.c[leads.back().comp].leading_coeff());
        }
    }
};

}  // namespace

VecPoly module_normal_form(VecPoly f, const std::vector<VecPoly>& basis, const ModuleOrder& ord) {
    if (basis.empty()) return f;
    BasisView view(basis, ord);
    VecPoly rem(f.ring, f.rank());
    while (!f.is_zero()) {
        ModTerm t = leading_modterm(f, ord);
        Scalar coeff = f.c[t.comp].leading_coeff();
        bool reduced = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (view.leads[i].comp != t.comp || !view.leads[i].mono.divides(t.mono)) continue;
            Monomial shift = t.mono.divide(view.leads[i].mono);
            Scalar factor = coeff / view.lcs[i];
            f = f - basis[i].times_term(shift, factor);
            Budget::tick();
            reduced = true;
            break;
        }
        if (!reduced) {
            // move the irreducible leading term to the remainder
            Polynomial mono_term = Polynomial::term(f.ring, t.mono, coeff);
            rem.c[t.comp] += mono_term;
            f.c[t.comp] -= mono_term;
            Budget::tick();
        }
    }
    return rem;
}

// --- Buchberger -------------------------------------------------------------

namespace {

struct GbEntry {
    VecPoly g;
    ModTerm lead;
    Scalar lc;
    int sugar;
    bool single_component;
};

bool single_component(const VecPoly& v) {
    int nonzero = 0;
    for (const auto& p : v.c)
        if (!p.is_zero()) ++nonzero;
    return nonzero <= 1;
}

struct Pair {
    size_t i, j;
    Monomial lcm;
    int sugar;
    bool alive = true;
};

VecPoly s_vector(const GbEntry& a, const GbEntry& b, const Monomial& lcm) {
    Monomial ua = lcm.divide(a.lead.mono);
    Monomial ub = lcm.divide(b.lead.mono);
    return a.g.times_term(ua, a.lc.inverse()) - b.g.times_term(ub, b.lc.inverse());
}

std::vector<VecPoly> autoreduce(std::vector<VecPoly> basis, const ModuleOrder& ord) {
    // interreduce to the unique reduced basis, then sort ascending by lead
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            std::vector<VecPoly> others;
            others.reserve(basis.size() - 1);
            for (size_t j = 0; j < basis.size(); ++j)
                if (j != i) others.push_back(basis[j]);
            VecPoly h = module_normal_form(basis[i], others, ord);
            if (h.is_zero()) {
                basis.erase(basis.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
            h = h.scaled(leading_modcoeff(h, ord).inverse());
            if (!(h == basis[i])) {
                basis[i] = h;
                changed = true;
            }
        }
    }
    std::sort(basis.begin(), basis.end(), [&](const VecPoly& a, const VecPoly& b) {
        ModTerm ta = leading_modterm(a, ord), tb = leading_modterm(b, ord);
        int c = ord.cmp(ta, tb);
        if (c != 0) return c < 0;
        return a.cmp(b) < 0;
    });
    return basis;
}

}  // namespace

std::vector<VecPoly> module_groebner(std::vector<VecPoly> gens, const ModuleOrder& ord) {
    std::vector<GbEntry> G;
    auto push_entry = [&](VecPoly v, int sugar) {
        ModTerm lt = leading_modterm(v, ord);
        Scalar lc = v.c[lt.comp].leading_coeff();
        bool sc = single_component(v);
        G.push_back(GbEntry{std::move(v), lt, lc, sugar, sc});
    };

    for (auto& g : gens) {
        if (g.is_zero()) continue;
        int sugar = 0;
        for (const auto& p : g.c) sugar = std::max(sugar, p.degree());
        push_entry(std::move(g), sugar);
    }
    if (G.empty()) return {};

    std::vector<Pair> pairs;
    auto queue_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            if (G[i].lead.comp != G[j].lead.comp) continue;
            Monomial lcm = Monomial::lcm(G[i].lead.mono, G[j].lead.mono);
            int sug = std::max(G[i].sugar + lcm.degree() - G[i].lead.mono.degree(),
                               G[j].sugar + lcm.degree() - G[j].lead.mono.degree());
            pairs.push_back(Pair{i, j, std::move(lcm), sug});
            Budget::tick();
        }
    };
    for (size_t j = 0; j < G.size(); ++j) queue_pairs_for(j);

    auto pending = [&](size_t a, size_t b) {
        for (const auto& p : pairs)
            if (p.alive && ((p.i == a && p.j == b) || (p.i == b && p.j == a))) return true;
        return false;
    };

    const MonomialOrder& mord = ord.mono;
    for (;;) {
        // sugar-first selection, ties by lcm then index: deterministic
        size_t best = pairs.size();
        for (size_t k = 0; k < pairs.size(); ++k) {
            if (!pairs[k].alive) continue;
            if (best == pairs.size()) {
                best = k;
                continue;
            }
            const Pair &a = pairs[k], &b = pairs[best];
            if (a.sugar != b.sugar) {
                if (a.sugar < b.sugar) best = k;
                continue;
            }
            int c = mord.cmp(a.lcm, b.lcm);
            if (c < 0 || (c == 0 && (a.i < b.i || (a.i == b.i && a.j < b.j)))) best = k;
        }
        if (best == pairs.size()) break;
        Pair pr = pairs[best];
        pairs[best].alive = false;

        const GbEntry &gi = G[pr.i], &gj = G[pr.j];
        // product criterion, valid when both elements live in one component
        if (gi.single_component && gj.single_component &&
            gi.lead.mono.coprime(gj.lead.mono))
            continue;
        // chain criterion
        bool skip = false;
        for (size_t l = 0; l < G.size() && !skip; ++l) {
            if (l == pr.i || l == pr.j || G[l].lead.comp != gi.lead.comp) continue;
            if (G[l].lead.mono.divides(pr.lcm) && !pending(pr.i, l) && !pending(pr.j, l))
                skip = true;
        }
        if (skip) continue;

        VecPoly h = module_normal_form(s_vector(gi, gj, pr.lcm), [&] {
            std::vector<VecPoly> plain;
            plain.reserve(G.size());
            for (const auto& e : G) plain.push_back(e.g);
            return plain;
        }(), ord);
        if (h.is_zero()) continue;
        h = h.scaled(leading_modcoeff(h, ord).inverse());
        push_entry(std::move(h), pr.sugar);
        queue_pairs_for(G.size() - 1);
    }

    std::vector<VecPoly> basis;
    basis.reserve(G.size());
    for (auto& e : G) basis.push_back(std::move(e.g));
    return autoreduce(std::move(basis), ord);
}

// --- Submodule --------------------------------------------------------------

struct Submodule::Cache {
    std::once_flag flag;
    std::vector<VecPoly> basis;
};

Submodule::Submodule(RingPtr ring, size_t rank, std::vector<VecPoly> gens, ModOrderKind kind)
    : ring_(std::move(ring)),
      rank_(rank),
      gens_(std::move(gens)),
      kind_(kind),
      cache_(std::make_shared<Cache>()) {
    for (const auto& g : gens_) assert(g.rank() == rank_);
}

ModuleOrder Submodule::order() const { return ModuleOrder{kind_, ring_->order}; }

const std::vector<VecPoly>& Submodule::groebner() const {
    std::call_once(cache_->flag, [this] { cache_->basis = module_groebner(gens_, order()); });
    return cache_->basis;
}

VecPoly Submodule::nf(const VecPoly& v) const {
    return module_normal_form(v, groebner(), order());
}

bool Submodule::contains(const VecPoly& v) const { return nf(v).is_zero(); }

bool Submodule::equals(const Submodule& o) const {
    const auto& a = groebner();
    const auto& b = o.groebner();
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

// --- syzygies and kernels ---------------------------------------------------

std::vector<VecPoly> syzygies(const std::vector<VecPoly>& gens, const RingPtr& ring,
                              size_t rank) {
    size_t m = gens.size();
    size_t big = rank + m;
    std::vector<VecPoly> embedded;
    embedded.reserve(m);
    for (size_t i = 0; i < m; ++i) {
        VecPoly h(ring, big);
        assert(gens[i].rank() == rank);
        for (size_t c = 0; c < rank; ++c) h.c[c] = gens[i].c[c];
        h.c[rank + i] = Polynomial::constant(ring, 1);
        embedded.push_back(std::move(h));
    }
    ModuleOrder ord{ModOrderKind::PositionOverTerm, ring->order};
    std::vector<VecPoly> gb = module_groebner(std::move(embedded), ord);
    std::vector<VecPoly> result;
    for (const auto& v : gb) {
        bool in_tail = true;
        for (size_t c = 0; c < rank && in_tail; ++c)
            if (!v.c[c].is_zero()) in_tail = false;
        if (!in_tail) continue;
        VecPoly s(ring, m);
        for (size_t i = 0; i < m; ++i) s.c[i] = v.c[rank + i];
        result.push_back(std::move(s));
    }
    return result;
}

Submodule module_kernel(const std::vector<VecPoly>& cols, const std::vector<VecPoly>& rels,
                        const RingPtr& ring, size_t b) {
    std::vector<VecPoly> all = cols;
    all.insert(all.end(), rels.begin(), rels.end());
    std::vector<VecPoly> syz = syzygies(all, ring, b);
    size_t a = cols.size();
    std::vector<VecPoly> kernel;
    for (const auto& s : syz) {
        VecPoly v(ring, a);
        for (size_t i = 0; i < a; ++i) v.c[i] = s.c[i];
        if (!v.is_zero()) kernel.push_back(std::move(v));
    }
    return Submodule(ring, a, std::move(kernel));
}

Submodule kernel_of_quotient_map(const PolyMatrix& A, const Ideal& I) {
    const RingPtr& ring = I.ring();
    size_t b = A.size();
    size_t a = b == 0 ? 0 : A[0].size();
    std::vector<VecPoly> cols;
    cols.reserve(a);
    for (size_t j = 0; j < a; ++j) {
        VecPoly col(ring, b);
        for (size_t r = 0; r < b; ++r) {
            assert(A[r].size() == a);
            col.c[r] = A[r][j];
        }
        cols.push_back(std::move(col));
    }
    std::vector<VecPoly> rels;
    for (const auto& f : I.gens()) {
        if (f.is_zero()) continue;
        for (size_t r = 0; r < b; ++r) rels.push_back(VecPoly::unit_times(ring, b, r, f));
    }
    return module_kernel(cols, rels, ring, b);
}

SaturationResult saturate_zero(const Submodule& rels, const Polynomial& c) {
    if (c.is_zero()) throw std::invalid_argument("saturation multiplier must be nonzero");
    const RingPtr& ring = rels.ring();
    size_t k = rels.rank();
    Submodule current = rels;
    int t = 0;
    for (;;) {
        std::vector<VecPoly> cols;
        cols.reserve(k);
        for (size_t i = 0; i < k; ++i) cols.push_back(VecPoly::unit_times(ring, k, i, c));
        Submodule next = module_kernel(cols, current.groebner(), ring, k);
        if (next.equals(current)) return SaturationResult{current, t};
        current = next;
        ++t;
    }
}

// --- ideal-level wrappers ---------------------------------------------------

namespace {

VecPoly wrap1(const Polynomial& f) {
    VecPoly v(f.ring(), 1);
    v.c[0] = f;
    return v;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
    if (basis.empty()) return f;
    std::vector<VecPoly> b;
    b.reserve(basis.size());
    for (const auto& g : basis)
        if (!g.is_zero()) b.push_back(wrap1(g));
    if (b.empty()) return f;
    ModuleOrder ord{ModOrderKind::PositionOverTerm, f.ring()->order};
    return module_normal_form(wrap1(f), b, ord).c[0];
}

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, const RingPtr& ring) {
    std::vector<VecPoly> wrapped;
    for (const auto& g : gens)
        if (!g.is_zero()) wrapped.push_back(wrap1(g));
    ModuleOrder ord{ModOrderKind::PositionOverTerm, ring->order};
    std::vector<VecPoly> gb = module_groebner(std::move(wrapped), ord);
    std::vector<Polynomial> out;
    out.reserve(gb.size());
    for (auto& v : gb) out.push_back(std::move(v.c[0]));
    return out;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    Polynomial q(f.ring());
    Polynomial r = f;
    while (!r.is_zero()) {
        if (!g.leading_monomial().divides(r.leading_monomial()))
            throw std::logic_error("exact_divide: " + g.to_string() + " does not divide " +
                                   f.to_string());
        Monomial m = r.leading_monomial().divide(g.leading_monomial());
        Scalar s = r.leading_coeff() / g.leading_coeff();
        q += Polynomial::term(f.ring(), m, s);
        r -= g.times_term(m, s);
        Budget::tick();
    }
    return q;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    std::vector<Polynomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return Ideal(a.ring(), std::move(gens));
}

namespace {

// Extended ring with a fresh dominating variable "@t" in front.
struct TExtension {
    RingPtr ext;
    std::vector<int> fwd;  // original var i -> i + 1

    explicit TExtension(const RingPtr& base) {
        std::vector<std::string> vars;
        vars.push_back("@t");
        for (const auto& v : base->vars) vars.push_back(v);
        ext = make_ring(base->field, std::move(vars), MonomialOrder::block(1));
        fwd.resize(base->nvars());
        for (size_t i = 0; i < fwd.size(); ++i) fwd[i] = static_cast<int>(i) + 1;
    }
};

Polynomial project_out_prefix(const Polynomial& f, const RingPtr& target, size_t prefix) {
    std::vector<Term> ts;
    for (const auto& t : f.terms()) {
        Monomial m(target->nvars());
        for (size_t i = 0; i < prefix; ++i) assert(t.mono.e[i] == 0);
        for (size_t i = prefix; i < t.mono.e.size(); ++i) m.e[i - prefix] = t.mono.e[i];
        ts.push_back(Term{std::move(m), t.coeff});
    }
    return Polynomial::from_terms(target, std::move(ts));
}

bool free_of_prefix(const Polynomial& f, size_t prefix) {
    for (const auto& t : f.terms())
        for (size_t i = 0; i < prefix; ++i)
            if (t.mono.e[i]) return false;
    return true;
}

}  // namespace

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
    const RingPtr& ring = a.ring();
    TExtension X(ring);
    Polynomial t = Polynomial::variable(X.ext, 0);
    Polynomial one_minus_t = Polynomial::constant(X.ext, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens())
        if (!f.is_zero()) gens.push_back(t * f.map_into(X.ext, X.fwd));
    for (const auto& g : b.gens())
        if (!g.is_zero()) gens.push_back(one_minus_t * g.map_into(X.ext, X.fwd));
    std::vector<Polynomial> gb = groebner_basis(gens, X.ext);
    std::vector<Polynomial> kept;
    for (const auto& h : gb)
        if (free_of_prefix(h, 1)) kept.push_back(project_out_prefix(h, ring, 1));
    return Ideal(ring, std::move(kept));
}

Ideal ideal_colon(const Ideal& I, const Ideal& J) {
    std::vector<Polynomial> nz;
    for (const auto& g : J.gens())
        if (!g.is_zero()) nz.push_back(g);
    if (nz.empty()) throw std::invalid_argument("colon by the zero ideal");
    bool first = true;
    Ideal acc;
    for (const auto& g : nz) {
        Ideal cap = ideal_intersection(I, Ideal(I.ring(), {g}));
        std::vector<Polynomial> quot;
        for (const auto& h : cap.gens())
            if (!h.is_zero()) quot.push_back(exact_divide(h, g));
        Ideal colon_g(I.ring(), std::move(quot));
        acc = first ? colon_g : ideal_intersection(acc, colon_g);
        first = false;
    }
    return Ideal(I.ring(), groebner_basis(acc.gens(), I.ring()));
}

Ideal eliminate(const Ideal& I, const std::vector<size_t>& drop) {
    const RingPtr& ring = I.ring();
    if (drop.empty()) return I;
    std::vector<size_t> dropped = drop;
    std::sort(dropped.begin(), dropped.end());
    dropped.erase(std::unique(dropped.begin(), dropped.end()), dropped.end());
    for (size_t d : dropped)
        if (d >= ring->nvars()) throw std::invalid_argument("eliminate: bad variable index");

    std::vector<bool> is_dropped(ring->nvars(), false);
    for (size_t d : dropped) is_dropped[d] = true;

    std::vector<std::string> perm_vars;
    std::vector<int> fwd(ring->nvars(), -1);
    for (size_t d : dropped) {
        fwd[d] = static_cast<int>(perm_vars.size());
        perm_vars.push_back(ring->vars[d]);
    }
    std::vector<std::string> kept_names;
    for (size_t i = 0; i < ring->nvars(); ++i) {
        if (is_dropped[i]) continue;
        fwd[i] = static_cast<int>(perm_vars.size());
        perm_vars.push_back(ring->vars[i]);
        kept_names.push_back(ring->vars[i]);
    }
    RingPtr perm = make_ring(ring->field, perm_vars,
                             MonomialOrder::block(static_cast<int>(dropped.size())));
    std::vector<Polynomial> gens;
    for (const auto& f : I.gens())
        if (!f.is_zero()) gens.push_back(f.map_into(perm, fwd));
    std::vector<Polynomial> gb = groebner_basis(gens, perm);

    RingPtr result_ring = make_ring(ring->field, kept_names);
    std::vector<Polynomial> kept;
    for (const auto& h : gb)
        if (free_of_prefix(h, dropped.size()))
            kept.push_back(project_out_prefix(h, result_ring, dropped.size()));
    return Ideal(result_ring, std::move(kept));
}

// --- dimensions -------------------------------------------------------------

namespace {

// staircase of one component: monomials not divisible by any lead; nullopt = infinite
std::optional<std::vector<Monomial>> staircase(const std::vector<Monomial>& leads,
                                               size_t nvars) {
    for (const auto& m : leads)
        if (m.is_one()) return std::vector<Monomial>{};
    std::vector<int> bound(nvars, -1);
    for (const auto& m : leads) {
        int support = -1;
        bool pure = true;
        for (size_t i = 0; i < nvars; ++i) {
            if (m.e[i] == 0) continue;
            if (support >= 0) {
                pure = false;
                break;
            }
            support = static_cast<int>(i);
        }
        if (pure && support >= 0) {
            int& b = bound[static_cast<size_t>(support)];
            if (b < 0 || m.e[static_cast<size_t>(support)] < b)
                b = m.e[static_cast<size_t>(support)];
        }
    }
    for (size_t i = 0; i < nvars; ++i)
        if (bound[i] < 0) return std::nullopt;

    std::vector<Monomial> cells;
    Monomial cur(nvars);
    for (;;) {
        bool standard = true;
        for (const auto& m : leads)
            if (m.divides(cur)) {
                standard = false;
                break;
            }
        if (standard) cells.push_back(cur);
        // odometer over the box [0, bound_i)
        size_t pos = 0;
        while (pos < nvars) {
            if (++cur.e[pos] < bound[pos]) break;
            cur.e[pos] = 0;
            ++pos;
        }
        if (pos == nvars) break;
    }
    return cells;
}

}  // namespace

std::optional<long> k_dimension(const Ideal& I) {
    if (I.contains_one()) return 0;
    std::vector<Monomial> leads;
    for (const auto& g : I.groebner()) leads.push_back(g.leading_monomial());
    auto cells = staircase(leads, I.ring()->nvars());
    if (!cells) return std::nullopt;
    return static_cast<long>(cells->size());
}

std::optional<long> k_dimension(const Submodule& N) {
    size_t nvars = N.ring()->nvars();
    ModuleOrder ord = N.order();
    std::vector<std::vector<Monomial>> leads(N.rank());
    for (const auto& g : N.groebner()) {
        ModTerm t = leading_modterm(g, ord);
        leads[t.comp].push_back(t.mono);
    }
    long total = 0;
    for (size_t c = 0; c < N.rank(); ++c) {
        auto cells = staircase(leads[c], nvars);
        if (!cells) return std::nullopt;
        total += static_cast<long>(cells->size());
    }
    return total;
}

std::vector<Monomial> standard_monomials(const Ideal& I) {
    std::vector<Monomial> leads;
    if (I.contains_one()) return {};
    for (const auto& g : I.groebner()) leads.push_back(g.leading_monomial());
    auto cells = staircase(leads, I.ring()->nvars());
    if (!cells) throw std::logic_error("standard_monomials: quotient is infinite-dimensional");
    std::sort(cells->begin(), cells->end(), [&](const Monomial& a, const Monomial& b) {
        return I.ring()->order.less(a, b);
    });
    return *cells;
}

int krull_dimension(const Ideal& I) {
    size_t n = I.ring()->nvars();
    if (n > 24) throw std::invalid_argument("krull_dimension: too many variables");
    std::vector<Monomial> leads;
    for (const auto& g : I.groebner()) leads.push_back(g.leading_monomial());
    int best = -1;
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        int size = __builtin_popcountl(mask);
        if (size <= best) continue;
        bool independent = true;
        for (const auto& m : leads) {
            bool inside = true;
            for (size_t i = 0; i < n && inside; ++i)
                if (m.e[i] && !(mask & (1UL << i))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return best;
}

// --- matrices over S --------------------------------------------------------

size_t rank_mod_ideal(const PolyMatrix& M, const Ideal& I) {
    if (M.empty() || M[0].empty()) return 0;
    size_t rows = M.size(), cols = M[0].size();
    std::vector<std::vector<Polynomial>> W(rows);
    for (size_t r = 0; r < rows; ++r) {
        assert(M[r].size() == cols);
        W[r].reserve(cols);
        for (const auto& f : M[r]) W[r].push_back(I.nf(f));
    }
    std::vector<bool> used(rows, false);
    size_t rank = 0;
    for (size_t c = 0; c < cols; ++c) {
        // pivot: fewest terms, then lowest row index
        size_t pivot = rows;
        for (size_t r = 0; r < rows; ++r) {
            if (used[r] || W[r][c].is_zero()) continue;
            if (pivot == rows || W[r][c].term_count() < W[pivot][c].term_count()) pivot = r;
        }
        if (pivot == rows) continue;
        used[pivot] = true;
        ++rank;
        for (size_t r = 0; r < rows; ++r) {
            if (used[r] || W[r][c].is_zero()) continue;
            // row_r <- pivot_entry * row_r - entry * row_pivot, reduced mod I
            Polynomial entry = W[r][c];
            for (size_t j = 0; j < cols; ++j) {
                if (j == c) {
                    W[r][j] = Polynomial(I.ring());
                    continue;
                }
                W[r][j] = I.nf(W[pivot][c] * W[r][j] - entry * W[pivot][j]);
                Budget::tick();
            }
        }
    }
    return rank;
}

size_t rank_at_origin(const PolyMatrix& M, const FieldSpec& F) {
    if (M.empty() || M[0].empty()) return 0;
    ScalarMatrix A(F, M.size(), M[0].size());
    for (size_t r = 0; r < M.size(); ++r)
        for (size_t c = 0; c < M[r].size(); ++c) A.at(r, c) = M[r][c].constant_term();
    return A.rank();
}

namespace {

Polynomial det_recursive(const PolyMatrix& M, const std::vector<size_t>& rows,
                         const std::vector<size_t>& cols, const RingPtr& ring) {
    size_t k = rows.size();
    if (k == 0) return Polynomial::constant(ring, 1);
    if (k == 1) return M[rows[0]][cols[0]];
    Polynomial acc(ring);
    std::vector<size_t> sub_rows(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < k; ++j) {
        if (M[rows[0]][cols[j]].is_zero()) continue;
        std::vector<size_t> sub_cols;
        sub_cols.reserve(k - 1);
        for (size_t l = 0; l < k; ++l)
            if (l != j) sub_cols.push_back(cols[l]);
        Polynomial minor = det_recursive(M, sub_rows, sub_cols, ring);
        Polynomial contrib = M[rows[0]][cols[j]] * minor;
        acc = (j % 2 == 0) ? acc + contrib : acc - contrib;
        Budget::tick();
    }
    return acc;
}

void combinations(size_t n, size_t k, const std::function<void(const std::vector<size_t>&)>& fn) {
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    for (;;) {
        fn(idx);
        size_t pos = k;
        while (pos > 0) {
            --pos;
            if (idx[pos] != pos + n - k) break;
            if (pos == 0) return;
        }
        if (idx[pos] == pos + n - k) return;
        ++idx[pos];
        for (size_t l = pos + 1; l < k; ++l) idx[l] = idx[l - 1] + 1;
    }
}

}  // namespace

std::vector<Polynomial> matrix_minors(const PolyMatrix& M, size_t k, const RingPtr& ring) {
    std::vector<Polynomial> out;
    if (k == 0) {
        out.push_back(Polynomial::constant(ring, 1));
        return out;
    }
    if (M.empty() || M.size() < k || M[0].size() < k) return out;
    combinations(M.size(), k, [&](const std::vector<size_t>& rows) {
        combinations(M[0].size(), k, [&](const std::vector<size_t>& cols) {
            out.push_back(det_recursive(M, rows, cols, ring));
        });
    });
    return out;
}

unsigned long long count_minors(size_t rows, size_t cols, size_t k) {
    auto choose = [](size_t n, size_t r) -> unsigned long long {
        if (r > n) return 0;
        unsigned long long acc = 1;
        for (size_t i = 1; i <= r; ++i) {
            acc = acc * (n - r + i) / i;
            if (acc > (1ULL << 62)) return 1ULL << 62;
        }
        return acc;
    };
    unsigned long long a = choose(rows, k), b = choose(cols, k);
    if (a == 0 || b == 0) return 0;
    if (a > (1ULL << 31) || b > (1ULL << 31)) return 1ULL << 62;
    return a * b;
}

}  // namespace nashforge
