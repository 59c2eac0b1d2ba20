#include "nashforge/field.hpp"

#include <stdexcept>

#include "nashforge/errors.hpp"

namespace nashforge {

bool is_prime_long(long p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime_field(long p) {
    if (p <= 1 || p >= (1L << 31))
        throw ParseError("characteristic must be 0 or a prime below 2^31, got " + std::to_string(p));
    if (!is_prime_long(p))
        throw ParseError("characteristic " + std::to_string(p) + " is not prime");
    return FieldSpec{p};
}

std::string FieldSpec::describe() const {
    return p == 0 ? std::string("QQ") : "GF(" + std::to_string(p) + ")";
}

namespace {

long mod_reduce(long v, long p) {
    long r = v % p;
    return r < 0 ? r + p : r;
}

// ax = 1 mod p via extended Euclid; a in [1, p)
long mod_inverse(long a, long p) {
    long t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        long q = r / new_r;
        long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error("element not invertible mod " + std::to_string(p));
    return mod_reduce(t, p);
}

}  // namespace

Scalar Scalar::zero(const FieldSpec& F) {
    Scalar s;
    s.p_ = F.p;
    return s;
}

Scalar Scalar::one(const FieldSpec& F) { return from_int(F, 1); }

Scalar Scalar::from_int(const FieldSpec& F, long v) {
    Scalar s;
    s.p_ = F.p;
    if (F.p > 0)
        s.fp_ = mod_reduce(v, F.p);
    else
        s.rat_ = v;
    return s;
}

Scalar Scalar::from_mpz(const FieldSpec& F, const mpz_class& v) {
    Scalar s;
    s.p_ = F.p;
    if (F.p > 0) {
        mpz_class r = v % F.p;
        s.fp_ = mod_reduce(r.get_si(), F.p);
    } else {
        s.rat_ = v;
    }
    return s;
}

Scalar Scalar::from_fraction(const FieldSpec& F, const mpz_class& v, const mpz_class& w) {
    if (w == 0) throw FieldMismatchError("zero denominator");
    if (F.p > 0) {
        Scalar den = from_mpz(F, w);
        if (den.is_zero())
            throw FieldMismatchError("denominator " + w.get_str() + " vanishes in " + F.describe());
        return from_mpz(F, v) * den.inverse();
    }
    Scalar s;
    s.p_ = 0;
    s.rat_ = mpq_class(v, w);
    s.rat_.canonicalize();
    return s;
}

bool Scalar::is_zero() const { return p_ > 0 ? fp_ == 0 : rat_ == 0; }
bool Scalar::is_one() const { return p_ > 0 ? fp_ == 1 : rat_ == 1; }

void Scalar::check_same_field(const Scalar& o) const {
    if (p_ != o.p_)
        throw FieldMismatchError("mixed-field arithmetic: " + field().describe() + " vs " +
                                 o.field().describe());
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (p_ > 0)
        s.fp_ = fp_ == 0 ? 0 : p_ - fp_;
    else
        s.rat_ = -rat_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s = *this;
    if (p_ > 0)
        s.fp_ = mod_reduce(fp_ + o.fp_, p_);
    else
        s.rat_ = rat_ + o.rat_;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    Scalar s = *this;
    if (p_ > 0)
        s.fp_ = mod_reduce(fp_ - o.fp_, p_);
    else
        s.rat_ = rat_ - o.rat_;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s = *this;
    if (p_ > 0)
        s.fp_ = mod_reduce(fp_ * o.fp_, p_);  // p < 2^31 keeps the product inside int64
    else
        s.rat_ = rat_ * o.rat_;
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in " + field().describe());
    Scalar s = *this;
    if (p_ > 0)
        s.fp_ = mod_inverse(fp_, p_);
    else
        s.rat_ = 1 / rat_;
    return s;
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc = one(field());
    Scalar base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (p_ != o.p_) return false;
    return p_ > 0 ? fp_ == o.fp_ : rat_ == o.rat_;
}

int Scalar::cmp(const Scalar& o) const {
    check_same_field(o);
    if (p_ > 0) return fp_ < o.fp_ ? -1 : fp_ > o.fp_ ? 1 : 0;
    int c = ::cmp(rat_, o.rat_);
    return c < 0 ? -1 : c > 0 ? 1 : 0;
}

std::string Scalar::to_string() const {
    return p_ > 0 ? std::to_string(fp_) : rat_.get_str();
}

long Scalar::fp_value() const {
    if (p_ == 0) throw std::logic_error("fp_value on rational scalar");
    return fp_;
}

const mpq_class& Scalar::rat_value() const {
    if (p_ != 0) throw std::logic_error("rat_value on prime-field scalar");
    return rat_;
}

Scalar binomial_scalar(const FieldSpec& F, unsigned long n, unsigned long k) {
    if (k > n) return Scalar::zero(F);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Scalar::from_mpz(F, b);
}

}  // namespace nashforge
