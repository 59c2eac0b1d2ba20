#include "nashforge/diffops.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "nashforge/errors.hpp"
#include "nashforge/linalg.hpp"

namespace nashforge {

DiffOp DiffOp::identity(const RingPtr& ring) {
    DiffOp d{ring, {}};
    d.parts.emplace_back(Monomial(ring->nvars()), Polynomial::constant(ring, 1));
    return d;
}

int DiffOp::order() const {
    int n = -1;
    for (const auto& [alpha, g] : parts)
        if (!g.is_zero()) n = std::max(n, alpha.degree());
    return n;
}

bool DiffOp::is_zero() const {
    for (const auto& [alpha, g] : parts)
        if (!g.is_zero()) return false;
    return true;
}

Polynomial DiffOp::apply(const Polynomial& f) const {
    Polynomial out(ring);
    for (const auto& [alpha, g] : parts) {
        if (g.is_zero()) continue;
        out += g * apply_divided_power(alpha, f);
    }
    return out;
}

std::string DiffOp::to_string() const {
    if (parts.empty()) return "0";
    std::string out;
    for (const auto& [alpha, g] : parts) {
        if (g.is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string coeff = g.to_string();
        if (coeff.find(' ') != std::string::npos) coeff = "(" + coeff + ")";
        std::string op = "D[";
        for (size_t i = 0; i < alpha.e.size(); ++i) {
            if (i) op += ",";
            op += std::to_string(alpha.e[i]);
        }
        op += "]";
        out += (coeff == "1") ? op : coeff + "*" + op;
    }
    return out.empty() ? "0" : out;
}

// --- idealizer --------------------------------------------------------------

namespace {

void require_origin_on_variety(const Ideal& I) {
    for (const auto& g : I.gens())
        if (!g.is_zero() && !g.constant_term().is_zero())
            throw std::invalid_argument(
                "expected every input generator to vanish at the origin; offending generator: " +
                g.to_string());
}

}  // namespace

std::vector<DiffOp> idealizer_operators(const Ideal& I, int n) {
    if (n < 0) throw std::invalid_argument("operator order must be nonnegative");
    const RingPtr& ring = I.ring();
    std::vector<Monomial> alphas = monomials_up_to_degree(ring->nvars(), n);
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens())
        if (!g.is_zero()) gens.push_back(g);

    if (gens.empty()) {
        // every operator preserves the zero ideal; basis vectors generate
        std::vector<DiffOp> ops;
        for (const auto& alpha : alphas) {
            DiffOp d{ring, {}};
            d.parts.emplace_back(alpha, Polynomial::constant(ring, 1));
            ops.push_back(std::move(d));
        }
        return ops;
    }

    // rows: test elements x^beta f_j, |beta| <= n; columns: candidate D^(alpha)
    std::vector<Monomial> betas = monomials_up_to_degree(ring->nvars(), n);
    PolyMatrix A;
    for (const auto& f : gens)
        for (const auto& beta : betas) {
            Polynomial test = f.times_term(beta, Scalar::one(ring->field));
            std::vector<Polynomial> row;
            row.reserve(alphas.size());
            for (const auto& alpha : alphas) row.push_back(apply_divided_power(alpha, test));
            A.push_back(std::move(row));
        }

    Submodule kernel = kernel_of_quotient_map(A, I);
    std::vector<DiffOp> ops;
    for (const auto& v : kernel.groebner()) {
        DiffOp d{ring, {}};
        for (size_t k = 0; k < alphas.size(); ++k) {
            Polynomial g = I.nf(v.c[k]);
            if (!g.is_zero()) d.parts.emplace_back(alphas[k], std::move(g));
        }
        if (!d.is_zero()) ops.push_back(std::move(d));
    }
    // coefficient reduction can merge distinct kernel generators
    std::sort(ops.begin(), ops.end(), [](const DiffOp& a, const DiffOp& b) {
        if (a.parts.size() != b.parts.size()) return a.parts.size() < b.parts.size();
        for (size_t i = 0; i < a.parts.size(); ++i) {
            if (a.parts[i].first != b.parts[i].first)
                return a.parts[i].first.e < b.parts[i].first.e;
            int c = a.parts[i].second.cmp(b.parts[i].second);
            if (c != 0) return c < 0;
        }
        return false;
    });
    ops.erase(std::unique(ops.begin(), ops.end(),
                          [](const DiffOp& a, const DiffOp& b) {
                              return a.parts.size() == b.parts.size() &&
                                     std::equal(a.parts.begin(), a.parts.end(), b.parts.begin(),
                                                [](const auto& x, const auto& y) {
                                                    return x.first == y.first &&
                                                           x.second == y.second;
                                                });
                          }),
              ops.end());
    return ops;
}

// --- differential powers ----------------------------------------------------

namespace {

Ideal maximal_ideal_power_plus(const Ideal& I, int n) {
    const RingPtr& ring = I.ring();
    std::vector<Polynomial> gens;
    for (const auto& m : monomials_of_degree(ring->nvars(), n))
        gens.push_back(Polynomial::monomial(ring, m));
    for (const auto& g : I.gens())
        if (!g.is_zero()) gens.push_back(g);
    return Ideal(ring, std::move(gens));
}

}  // namespace

DiffPowerResult differential_power(const Ideal& I, int n) {
    if (n < 1) throw std::invalid_argument("differential power index must be >= 1");
    require_origin_on_variety(I);
    const RingPtr& ring = I.ring();

    std::vector<DiffOp> ops = idealizer_operators(I, n - 1);

    // The power sits between m^n + I and m; compute the quotient of the former
    // and cut it down by the constant-term conditions const(op(f)) = 0.
    Ideal base = maximal_ideal_power_plus(I, n);
    std::vector<Monomial> std_monos = standard_monomials(base);
    std::vector<Monomial> unknowns;  // degree >= 1 (membership in m is automatic)
    for (const auto& m : std_monos)
        if (m.degree() >= 1) unknowns.push_back(m);

    ScalarMatrix C(ring->field, ops.size(), unknowns.size());
    for (size_t i = 0; i < ops.size(); ++i)
        for (size_t j = 0; j < unknowns.size(); ++j)
            C.at(i, j) = ops[i].apply(Polynomial::monomial(ring, unknowns[j])).constant_term();

    std::vector<Polynomial> extra;
    for (const auto& v : C.null_space()) {
        Polynomial f(ring);
        for (size_t j = 0; j < unknowns.size(); ++j)
            if (!v[j].is_zero()) f += Polynomial::term(ring, unknowns[j], v[j]);
        if (!f.is_zero()) extra.push_back(f.monic());
    }

    std::vector<Polynomial> gens = base.gens();
    gens.insert(gens.end(), extra.begin(), extra.end());
    Ideal power(ring, groebner_basis(gens, ring));

    DiffPowerResult out;
    auto codim = k_dimension(power);
    if (!codim) throw std::logic_error("differential power has infinite codimension");
    out.power = std::move(power);
    out.codim = *codim;
    out.ops = std::move(ops);
    return out;
}

PairingResult diff_pairing(const Ideal& I, int n) {
    DiffPowerResult dp = differential_power(I, n);
    PairingResult out;
    out.ops = std::move(dp.ops);
    out.monomials = standard_monomials(dp.power);
    const RingPtr& ring = I.ring();
    ScalarMatrix M(ring->field, out.ops.size(), out.monomials.size());
    out.matrix.assign(out.ops.size(), std::vector<Scalar>());
    for (size_t i = 0; i < out.ops.size(); ++i) {
        for (size_t j = 0; j < out.monomials.size(); ++j) {
            Scalar v = out.ops[i].apply(Polynomial::monomial(ring, out.monomials[j])).constant_term();
            M.at(i, j) = v;
            out.matrix[i].push_back(v);
        }
    }
    out.rank = M.rank();
    return out;
}

CoreChainResult differential_core_chain(const Ideal& I, int upto) {
    if (upto < 2) throw std::invalid_argument("core chain needs at least two steps");
    CoreChainResult out;
    for (int n = 1; n <= upto; ++n) {
        DiffPowerResult dp = differential_power(I, n);
        out.powers.push_back(dp.power);
        out.codims.push_back(dp.codim);
    }
    size_t N = out.powers.size();
    if (out.powers[N - 1].equals(out.powers[N - 2])) {
        out.verdict = "CORE_STABILIZED";
        return out;
    }
    bool strict = true;
    for (size_t i = 0; i + 1 < N; ++i)
        if (out.codims[i] >= out.codims[i + 1]) strict = false;
    out.verdict = strict ? "CORE_ZERO_LIKELY" : "CHAIN_INCONCLUSIVE";
    return out;
}

}  // namespace nashforge
