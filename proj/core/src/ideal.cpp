#include "nashforge/ideal.hpp"

#include <mutex>

#include "nashforge/groebner.hpp"

namespace nashforge {

struct Ideal::Cache {
    std::once_flag flag;
    std::vector<Polynomial> basis;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {}

const std::vector<Polynomial>& Ideal::groebner() const {
    std::call_once(cache_->flag, [this] { cache_->basis = groebner_basis(gens_, ring_); });
    return cache_->basis;
}

Polynomial Ideal::nf(const Polynomial& f) const { return normal_form(f, groebner()); }

bool Ideal::contains(const Polynomial& f) const { return nf(f).is_zero(); }

bool Ideal::is_zero() const {
    for (const auto& g : gens_)
        if (!g.is_zero()) return false;
    return true;
}

bool Ideal::contains_one() const {
    const auto& gb = groebner();
    return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

bool Ideal::equals(const Ideal& o) const {
    // reduced bases are canonical under a fixed order
    const auto& a = groebner();
    const auto& b = o.groebner();
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

std::vector<std::string> Ideal::gen_strings() const {
    std::vector<std::string> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) out.push_back(g.to_string());
    return out;
}

}  // namespace nashforge
