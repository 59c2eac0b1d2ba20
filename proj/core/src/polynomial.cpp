#include "nashforge/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

#include "nashforge/errors.hpp"

namespace nashforge {

int PolyRing::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr make_ring(FieldSpec field, std::vector<std::string> vars, MonomialOrder order) {
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw ParseError("duplicate variable name: " + vars[i]);
    auto r = std::make_shared<PolyRing>();
    r->field = field;
    r->vars = std::move(vars);
    r->order = order;
    return r;
}

RingPtr reorder_ring(const RingPtr& ring, MonomialOrder order) {
    auto r = std::make_shared<PolyRing>(*ring);
    r->order = order;
    return r;
}

void Polynomial::normalize() {
    auto cmp_desc = [this](const Term& a, const Term& b) {
        return ring_->order.greater(a.mono, b.mono);
    };
    std::sort(terms_.begin(), terms_.end(), cmp_desc);
    size_t w = 0;
    for (size_t i = 0; i < terms_.size();) {
        size_t j = i;
        Scalar acc = terms_[i].coeff;
        while (++j < terms_.size() && terms_[j].mono == terms_[i].mono) acc += terms_[j].coeff;
        if (!acc.is_zero()) terms_[w++] = Term{terms_[i].mono, acc};
        i = j;
    }
    terms_.resize(w);
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial f(std::move(ring));
    for (auto& t : terms) assert(t.mono.nvars() == f.ring_->nvars());
    f.terms_ = std::move(terms);
    f.normalize();
    return f;
}

Polynomial Polynomial::constant(const RingPtr& ring, const Scalar& c) {
    Polynomial f(ring);
    if (!c.is_zero()) f.terms_.push_back(Term{Monomial(ring->nvars()), c});
    return f;
}

Polynomial Polynomial::constant(const RingPtr& ring, long c) {
    return constant(ring, Scalar::from_int(ring->field, c));
}

Polynomial Polynomial::term(const RingPtr& ring, const Monomial& m, const Scalar& c) {
    Polynomial f(ring);
    if (!c.is_zero()) f.terms_.push_back(Term{m, c});
    return f;
}

Polynomial Polynomial::monomial(const RingPtr& ring, const Monomial& m) {
    return term(ring, m, Scalar::one(ring->field));
}

Polynomial Polynomial::variable(const RingPtr& ring, size_t i) {
    assert(i < ring->nvars());
    Monomial m(ring->nvars());
    m.e[i] = 1;
    return monomial(ring, m);
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

const Term& Polynomial::leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

Scalar Polynomial::constant_term() const {
    for (const auto& t : terms_)
        if (t.mono.is_one()) return t.coeff;
    return Scalar::zero(ring_->field);
}

Scalar Polynomial::coeff_of(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return Scalar::zero(ring_->field);
}

Polynomial Polynomial::operator-() const {
    Polynomial f = *this;
    for (auto& t : f.terms_) t.coeff = -t.coeff;
    return f;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    assert(ring_ == o.ring_ || (ring_ && o.ring_ && ring_->vars == o.ring_->vars &&
                                ring_->field == o.ring_->field));
    // merge two sorted term lists
    Polynomial f(ring_ ? ring_ : o.ring_);
    const auto& ord = f.ring_->order;
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ord.cmp(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            f.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            f.terms_.push_back(o.terms_[j++]);
        } else {
            Scalar s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) f.terms_.push_back(Term{terms_[i].mono, s});
            ++i;
            ++j;
        }
    }
    while (i < terms_.size()) f.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) f.terms_.push_back(o.terms_[j++]);
    return f;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial acc(ring_ ? ring_ : o.ring_);
    for (const auto& t : o.terms_) acc += times_term(t.mono, t.coeff);
    return acc;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial f = *this;
    for (auto& t : f.terms_) t.coeff = t.coeff * c;
    return f;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial f = *this;
    for (auto& t : f.terms_) {
        t.mono = t.mono * m;
        t.coeff = t.coeff * c;
    }
    return f;  // multiplying by a monomial preserves the term order
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().inverse());
}

Polynomial Polynomial::pow(int e) const {
    assert(e >= 0);
    Polynomial acc = constant(ring_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

int Polynomial::cmp(const Polynomial& o) const {
    size_t n = std::min(terms_.size(), o.terms_.size());
    for (size_t i = 0; i < n; ++i) {
        int c = ring_->order.cmp(terms_[i].mono, o.terms_[i].mono);
        if (c != 0) return c;
        c = terms_[i].coeff.cmp(o.terms_[i].coeff);
        if (c != 0) return c;
    }
    if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size() ? -1 : 1;
    return 0;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    assert(images.size() == ring_->nvars());
    RingPtr target = images.empty() ? ring_ : images[0].ring();
    Polynomial acc(target);
    for (const auto& t : terms_) {
        Polynomial prod = Polynomial::constant(target, t.coeff);
        for (size_t i = 0; i < images.size(); ++i)
            if (t.mono.e[i]) prod *= images[i].pow(t.mono.e[i]);
        acc += prod;
    }
    return acc;
}

Polynomial Polynomial::map_into(const RingPtr& target, const std::vector<int>& var_map) const {
    assert(var_map.size() == ring_->nvars());
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(target->nvars());
        for (size_t i = 0; i < var_map.size(); ++i) {
            assert(var_map[i] >= 0 && static_cast<size_t>(var_map[i]) < target->nvars());
            m.e[var_map[i]] = t.mono.e[i];
        }
        ts.push_back(Term{std::move(m), t.coeff});
    }
    return from_terms(target, std::move(ts));
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        Scalar c = t.coeff;
        std::string cs = c.to_string();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) {
                out += "-";
                cs = cs.substr(1);
            }
        } else {
            out += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        first = false;
        std::string mono;
        for (size_t i = 0; i < t.mono.e.size(); ++i) {
            if (t.mono.e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->vars[i];
            if (t.mono.e[i] > 1) mono += "^" + std::to_string(t.mono.e[i]);
        }
        if (mono.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += mono;
        } else {
            out += cs + "*" + mono;
        }
    }
    return out;
}

Scalar binomial_in_field(const FieldSpec& F, const Monomial& beta, const Monomial& alpha) {
    assert(beta.nvars() == alpha.nvars());
    Scalar acc = Scalar::one(F);
    for (size_t i = 0; i < beta.nvars(); ++i) {
        if (alpha.e[i] > beta.e[i]) return Scalar::zero(F);
        acc = acc * binomial_scalar(F, static_cast<unsigned long>(beta.e[i]),
                                    static_cast<unsigned long>(alpha.e[i]));
        if (acc.is_zero()) return acc;
    }
    return acc;
}

Polynomial apply_divided_power(const Monomial& alpha, const Polynomial& f) {
    const RingPtr& R = f.ring();
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        if (!alpha.divides(t.mono)) continue;
        Scalar c = t.coeff * binomial_in_field(R->field, t.mono, alpha);
        if (c.is_zero()) continue;
        out.push_back(Term{t.mono.divide(alpha), c});
    }
    return Polynomial::from_terms(R, std::move(out));
}

RingPtr taylor_extended_ring(const RingPtr& base, const std::string& prefix) {
    std::vector<std::string> vars = base->vars;
    for (const auto& v : base->vars) {
        std::string z = prefix + v;
        if (base->var_index(z) >= 0)
            throw ParseError("shift variable name collides with existing variable: " + z);
        vars.push_back(z);
    }
    return make_ring(base->field, std::move(vars), base->order);
}

Polynomial taylor_shift(const Polynomial& f, int n) {
    assert(n >= 0);
    const RingPtr& R = f.ring();
    size_t d = R->nvars();
    RingPtr ext = taylor_extended_ring(R);
    std::vector<Term> out;
    for (const auto& alpha : monomials_up_to_degree(d, n)) {
        Polynomial g = apply_divided_power(alpha, f);
        for (const auto& t : g.terms()) {
            Monomial m(2 * d);
            for (size_t i = 0; i < d; ++i) {
                m.e[i] = t.mono.e[i];
                m.e[d + i] = alpha.e[i];
            }
            out.push_back(Term{std::move(m), t.coeff});
        }
    }
    return Polynomial::from_terms(ext, std::move(out));
}

Polynomial taylor_shift_by_substitution(const Polynomial& f, int n) {
    assert(n >= 0);
    const RingPtr& R = f.ring();
    size_t d = R->nvars();
    RingPtr ext = taylor_extended_ring(R);
    std::vector<Polynomial> images;
    images.reserve(d);
    for (size_t i = 0; i < d; ++i)
        images.push_back(Polynomial::variable(ext, i) + Polynomial::variable(ext, d + i));
    Polynomial g = f.substitute(images);
    // truncate past total z-degree n
    std::vector<Term> kept;
    for (const auto& t : g.terms()) {
        int zdeg = 0;
        for (size_t i = 0; i < d; ++i) zdeg += t.mono.e[d + i];
        if (zdeg <= n) kept.push_back(t);
    }
    return Polynomial::from_terms(ext, std::move(kept));
}

}  // namespace nashforge
