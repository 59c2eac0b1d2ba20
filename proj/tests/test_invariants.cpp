#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "nashforge/errors.hpp"
#include "nashforge/invariants.hpp"
#include "nashforge/parser.hpp"

using namespace nashforge;

namespace {

RingPtr ring2(const FieldSpec& F) { return make_ring(F, {"x", "y"}); }

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

std::vector<std::vector<Scalar>> mat(const FieldSpec& F, std::vector<std::vector<long>> rows) {
    std::vector<std::vector<Scalar>> m;
    for (auto& row : rows) {
        std::vector<Scalar> r;
        for (long v : row) r.push_back(Scalar::from_int(F, v));
        m.push_back(std::move(r));
    }
    return m;
}

GroupAction pm_id(const FieldSpec& F) {
    auto r = ring2(F);
    return make_group_action(r, {mat(F, {{1, 0}, {0, 1}}), mat(F, {{-1, 0}, {0, -1}})});
}

}  // namespace

TEST_CASE("group axioms are validated") {
    FieldSpec Q = FieldSpec::rationals();
    auto r = ring2(Q);
    // missing inverse / not closed
    CHECK_THROWS_AS(make_group_action(r, {mat(Q, {{1, 0}, {0, 1}}), mat(Q, {{0, 1}, {0, 1}})}),
                    std::invalid_argument);
    // identity must be present
    CHECK_THROWS_AS(make_group_action(r, {mat(Q, {{-1, 0}, {0, -1}})}), std::invalid_argument);
    // modular order is refused: |G| = 2 over F_2
    FieldSpec F2 = FieldSpec::prime_field(2);
    auto r2 = ring2(F2);
    CHECK_THROWS_AS(
        make_group_action(r2, {mat(F2, {{1, 0}, {0, 1}}), mat(F2, {{0, 1}, {1, 0}})}),
        UnsupportedScopeError);
    CHECK(pm_id(Q).order() == 2);
}

TEST_CASE("reynolds is an idempotent projector onto invariants") {
    FieldSpec Q = FieldSpec::rationals();
    GroupAction G = pm_id(Q);
    const RingPtr& r = G.ring;
    Polynomial f = P(r, "x^3 + x^2 - x*y + y");
    Polynomial rf = reynolds(G, f);
    CHECK(reynolds(G, rf) == rf);            // idempotent
    CHECK(rf == P(r, "x^2 - x*y"));          // odd part averaged away
    // invariance under every group element
    for (const auto& g : G.mats) {
        std::vector<Polynomial> images;
        for (size_t i = 0; i < r->nvars(); ++i) {
            Polynomial img(r);
            for (size_t j = 0; j < r->nvars(); ++j)
                img += Polynomial::variable(r, j).scaled(g[i][j]);
            images.push_back(img);
        }
        CHECK(rf.substitute(images) == rf);
    }
    // an invariant is fixed by the projector
    CHECK(reynolds(G, P(r, "x^2 + 3*y^2")) == P(r, "x^2 + 3*y^2"));
}

TEST_CASE("pseudo-reflections are detected and small actions cleared") {
    FieldSpec Q = FieldSpec::rationals();
    auto r = ring2(Q);
    GroupAction refl =
        make_group_action(r, {mat(Q, {{1, 0}, {0, 1}}), mat(Q, {{1, 0}, {0, -1}})});
    CHECK(find_pseudo_reflection(refl) == 1);
    CHECK(find_pseudo_reflection(pm_id(Q)) == -1);
}

TEST_CASE("invariants of the sign action are the quadrics") {
    FieldSpec Q = FieldSpec::rationals();
    auto gens = invariant_generators(pm_id(Q));
    std::vector<std::string> got;
    for (const auto& g : gens) got.push_back(g.to_string());
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<std::string>{"x*y", "x^2", "y^2"});
}

TEST_CASE("reflection group invariants need no relation") {
    FieldSpec Q = FieldSpec::rationals();
    auto r = ring2(Q);
    GroupAction refl =
        make_group_action(r, {mat(Q, {{1, 0}, {0, 1}}), mat(Q, {{1, 0}, {0, -1}})});
    auto gens = invariant_generators(refl);
    std::vector<std::string> got;
    for (const auto& g : gens) got.push_back(g.to_string());
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<std::string>{"x", "y^2"});
    auto pres = invariant_presentation(refl);
    CHECK(pres.relations.is_zero());
}

TEST_CASE("presentation relations vanish under substitution of the generators") {
    for (FieldSpec F : {FieldSpec::rationals(), FieldSpec::prime_field(5)}) {
        auto pres = invariant_presentation(pm_id(F));
        REQUIRE(pres.gens.size() == 3);
        CHECK(pres.uring->nvars() == 3);
        REQUIRE(!pres.relations.is_zero());
        for (const auto& rel : pres.relations.gens()) {
            Polynomial image = rel.substitute(pres.gens);  // u_i -> generator i
            CHECK(image.is_zero());
        }
    }
}

TEST_CASE("quotient differential dimensions fall below the smooth bound") {
    for (FieldSpec F : {FieldSpec::prime_field(5), FieldSpec::rationals()}) {
        GroupAction G = pm_id(F);
        auto r1 = quotient_diff_power_dims(G, 1);
        CHECK(r1.eta_codim == 1);
        CHECK(r1.bound == 3);
        CHECK(r1.crosscheck_codim == 1);
        CHECK(r1.verdict == "NOT_ISO");
        auto r2 = quotient_diff_power_dims(G, 2);
        CHECK(r2.eta_codim == 4);
        CHECK(r2.bound == 6);
        CHECK(r2.crosscheck_codim == 4);
        CHECK(r2.verdict == "NOT_ISO");
    }
}

TEST_CASE("quotient power chain is descending and contains the ordinary powers") {
    FieldSpec Q = FieldSpec::rationals();
    GroupAction G = pm_id(Q);
    // eta-codims for n = 1, 2, 3 via the public entry point
    long prev = 0;
    for (int n = 1; n <= 3; ++n) {
        auto res = quotient_diff_power_dims(G, n);
        CHECK(res.eta_codim >= prev);  // codims of a descending chain of ideals
        CHECK(res.eta_codim < res.bound);
        CHECK(res.crosscheck_codim == res.eta_codim);
        prev = res.eta_codim;
    }
}

TEST_CASE("reflection and trivial actions are refused with witnesses") {
    FieldSpec Q = FieldSpec::rationals();
    auto r = ring2(Q);
    GroupAction refl =
        make_group_action(r, {mat(Q, {{1, 0}, {0, 1}}), mat(Q, {{1, 0}, {0, -1}})});
    try {
        quotient_diff_power_dims(refl, 1);
        FAIL("expected a scope refusal");
    } catch (const UnsupportedScopeError& e) {
        CHECK(!std::string(e.witness).empty());
    }
    GroupAction trivial = make_group_action(r, {mat(Q, {{1, 0}, {0, 1}})});
    CHECK_THROWS_AS(quotient_diff_power_dims(trivial, 1), UnsupportedScopeError);
}
