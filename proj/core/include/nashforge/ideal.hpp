#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nashforge/polynomial.hpp"

namespace nashforge {

// Ideal of S with lazily computed, cached reduced Groebner basis (under the
// ring's order). Values are immutable; copies share the cache.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    static Ideal zero(const RingPtr& ring) { return Ideal(ring, {}); }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }

    const std::vector<Polynomial>& groebner() const;
    Polynomial nf(const Polynomial& f) const;
    bool contains(const Polynomial& f) const;
    bool is_zero() const;
    bool contains_one() const;
    bool equals(const Ideal& o) const;

    std::vector<std::string> gen_strings() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

}  // namespace nashforge
