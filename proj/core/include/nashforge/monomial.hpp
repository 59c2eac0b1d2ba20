#pragma once

#include <string>
#include <vector>

namespace nashforge {

// Exponent vector. Length always equals the ambient variable count of its ring.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(size_t nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    size_t nvars() const { return e.size(); }
    int degree() const;
    bool is_one() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;          // this | o
    Monomial divide(const Monomial& o) const;       // this / o, caller ensures o | this
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

enum class OrderKind { GrevLex, Lex, Block };

// Monomial order. Block compares the first block_split variables (grevlex) first,
// so it eliminates those variables.
struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    int block_split = 0;

    static MonomialOrder grevlex() { return {OrderKind::GrevLex, 0}; }
    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder block(int split) { return {OrderKind::Block, split}; }

    // -1 if a < b, 0 if equal, +1 if a > b
    int cmp(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }
    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && (kind != OrderKind::Block || block_split == o.block_split);
    }
};

// All monomials in nvars variables of total degree exactly d / at most d.
// Deterministic enumeration, ascending degree in the "up to" variant.
std::vector<Monomial> monomials_of_degree(size_t nvars, int d);
std::vector<Monomial> monomials_up_to_degree(size_t nvars, int d);

}  // namespace nashforge
