#include "nashforge/monomial.hpp"

#include <cassert>
#include <numeric>

namespace nashforge {

int Monomial::degree() const { return std::accumulate(e.begin(), e.end(), 0); }

bool Monomial::is_one() const {
    for (int x : e)
        if (x) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    assert(e.size() == o.e.size());
    Monomial r(e.size());
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] + o.e[i];
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    assert(e.size() == o.e.size());
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

Monomial Monomial::divide(const Monomial& o) const {
    assert(o.divides(*this));
    Monomial r(e.size());
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] - o.e[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    assert(a.e.size() == b.e.size());
    Monomial r(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    assert(a.e.size() == b.e.size());
    Monomial r(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] < b.e[i] ? a.e[i] : b.e[i];
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] && o.e[i]) return false;
    return true;
}

namespace {

// grevlex on the slice [lo, hi): higher degree wins; on ties the smaller exponent
// in the last differing position wins.
int grevlex_cmp_slice(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
    int da = 0, db = 0;
    for (size_t i = lo; i < hi; ++i) {
        da += a.e[i];
        db += b.e[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = hi; i > lo; --i) {
        int d = a.e[i - 1] - b.e[i - 1];
        if (d != 0) return d > 0 ? -1 : 1;
    }
    return 0;
}

int lex_cmp(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i) {
        int d = a.e[i] - b.e[i];
        if (d != 0) return d > 0 ? 1 : -1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
    assert(a.e.size() == b.e.size());
    switch (kind) {
        case OrderKind::GrevLex:
            return grevlex_cmp_slice(a, b, 0, a.e.size());
        case OrderKind::Lex:
            return lex_cmp(a, b);
        case OrderKind::Block: {
            size_t split = static_cast<size_t>(block_split);
            int c = grevlex_cmp_slice(a, b, 0, split);
            if (c != 0) return c;
            return grevlex_cmp_slice(a, b, split, a.e.size());
        }
    }
    return 0;
}

namespace {

void enumerate_degree(size_t nvars, int d, size_t pos, Monomial& cur, std::vector<Monomial>& out) {
    if (pos + 1 == nvars) {
        cur.e[pos] = d;
        out.push_back(cur);
        cur.e[pos] = 0;
        return;
    }
    for (int k = d; k >= 0; --k) {
        cur.e[pos] = k;
        enumerate_degree(nvars, d - k, pos + 1, cur, out);
    }
    cur.e[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(size_t nvars, int d) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (d == 0) out.push_back(Monomial(size_t{0}));
        return out;
    }
    Monomial cur(nvars);
    enumerate_degree(nvars, d, 0, cur, out);
    return out;
}

std::vector<Monomial> monomials_up_to_degree(size_t nvars, int d) {
    std::vector<Monomial> out;
    for (int t = 0; t <= d; ++t) {
        auto level = monomials_of_degree(nvars, t);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace nashforge
