#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace nashforge {

// Coefficient field: the rationals (p == 0) or a prime field F_p with p < 2^31.
struct FieldSpec {
    long p = 0;

    static FieldSpec rationals() { return FieldSpec{0}; }
    static FieldSpec prime_field(long p);  // throws if p is not prime or out of range

    bool is_prime_field() const { return p > 0; }
    bool operator==(const FieldSpec& o) const { return p == o.p; }
    bool operator!=(const FieldSpec& o) const { return p != o.p; }
    std::string describe() const;
};

bool is_prime_long(long p);

// Exact field element. F_p values are canonical representatives in [0, p);
// rational values are kept gcd-reduced with positive denominator (mpq canonical form).
class Scalar {
public:
    Scalar() : p_(0), fp_(0), rat_(0) {}  // rational zero; use zero(field) when the field matters
    static Scalar zero(const FieldSpec& F);
    static Scalar one(const FieldSpec& F);
    static Scalar from_int(const FieldSpec& F, long v);
    static Scalar from_mpz(const FieldSpec& F, const mpz_class& v);
    // v/w reduced into the field; throws FieldMismatchError when w vanishes mod p.
    static Scalar from_fraction(const FieldSpec& F, const mpz_class& v, const mpz_class& w);

    FieldSpec field() const { return FieldSpec{p_}; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on division by zero
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;
    Scalar pow(long e) const;  // negative exponents go through the inverse

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Total order used only for canonical sorting of outputs, not algebra.
    int cmp(const Scalar& o) const;

    std::string to_string() const;

    // F_p only: value in [0, p).
    long fp_value() const;
    // rationals only
    const mpq_class& rat_value() const;

private:
    long p_;
    long fp_;
    mpq_class rat_;

    void check_same_field(const Scalar& o) const;
};

// C(n, k) reduced into F (exact integer binomial, then reduction; zero for k > n).
Scalar binomial_scalar(const FieldSpec& F, unsigned long n, unsigned long k);

}  // namespace nashforge
