#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nashforge/field.hpp"
#include "nashforge/monomial.hpp"

namespace nashforge {

// Shared context: coefficient field, variable names, active monomial order.
// Polynomials referencing the same ring keep their terms sorted under its order.
struct PolyRing {
    FieldSpec field;
    std::vector<std::string> vars;
    MonomialOrder order;

    size_t nvars() const { return vars.size(); }
    int var_index(const std::string& name) const;  // -1 when absent
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(FieldSpec field, std::vector<std::string> vars,
                  MonomialOrder order = MonomialOrder::grevlex());

// Same field and variables, different order.
RingPtr reorder_ring(const RingPtr& ring, MonomialOrder order);

struct Term {
    Monomial mono;
    Scalar coeff;
};

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
    static Polynomial constant(const RingPtr& ring, const Scalar& c);
    static Polynomial constant(const RingPtr& ring, long c);
    static Polynomial term(const RingPtr& ring, const Monomial& m, const Scalar& c);
    static Polynomial monomial(const RingPtr& ring, const Monomial& m);
    static Polynomial variable(const RingPtr& ring, size_t i);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    size_t term_count() const { return terms_.size(); }

    const Term& leading() const;
    const Monomial& leading_monomial() const { return leading().mono; }
    const Scalar& leading_coeff() const { return leading().coeff; }
    int degree() const;  // total degree, -1 for the zero polynomial
    Scalar constant_term() const;
    Scalar coeff_of(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const Scalar& c) const;
    Polynomial times_term(const Monomial& m, const Scalar& c) const;
    Polynomial monic() const;  // leading coefficient 1; zero stays zero
    Polynomial pow(int e) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Canonical ordering of whole polynomials, used to sort generator lists.
    int cmp(const Polynomial& o) const;

    // x_i -> images[i]; all images share one target ring.
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    // Re-home into a ring whose variable set contains this ring's variables.
    // var_map[i] = index of vars[i] in the target ring.
    Polynomial map_into(const RingPtr& target, const std::vector<int>& var_map) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;  // strictly descending under ring order, no zero coefficients

    void normalize();
};

// Product of per-variable binomials C(beta_i, alpha_i) in F.
Scalar binomial_in_field(const FieldSpec& F, const Monomial& beta, const Monomial& alpha);

// Divided-power operator: sends x^beta to C(beta, alpha) x^(beta - alpha).
Polynomial apply_divided_power(const Monomial& alpha, const Polynomial& f);

// Ring with the shift variables appended: vars, then z-companions (prefix + same name).
RingPtr taylor_extended_ring(const RingPtr& base, const std::string& prefix = "z_");

// f(x + z) truncated past total z-degree n, computed via divided powers:
// sum over |alpha| <= n of D^(alpha)(f) * z^alpha. Lives in taylor_extended_ring(ring of f).
Polynomial taylor_shift(const Polynomial& f, int n);

// Same value computed by direct substitution x_i -> x_i + z_i and truncation.
// Second route kept for cross-checks.
Polynomial taylor_shift_by_substitution(const Polynomial& f, int n);

}  // namespace nashforge
