#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "nashforge/errors.hpp"
#include "nashforge/diffops.hpp"
#include "nashforge/parser.hpp"
#include "nashforge/pparts.hpp"

using namespace nashforge;

namespace {

RingPtr qring(std::vector<std::string> vars = {"x", "y"}) {
    return make_ring(FieldSpec::rationals(), std::move(vars));
}

RingPtr pring(long p, std::vector<std::string> vars = {"x", "y"}) {
    return make_ring(FieldSpec::prime_field(p), std::move(vars));
}

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

Ideal ideal(const RingPtr& r, std::initializer_list<const char*> gens) {
    std::vector<Polynomial> v;
    for (const char* s : gens) v.push_back(parse_polynomial(r, s));
    return Ideal(r, std::move(v));
}

Ideal cuspQ() { return ideal(qring(), {"x^3 - y^2"}); }
Ideal cusp2() { return ideal(pring(2), {"x^3 + y^2"}); }
Ideal quadricQ() { return ideal(qring({"u", "v", "w"}), {"u*w - v^2"}); }
Ideal quadric5() { return ideal(pring(5, {"u", "v", "w"}), {"u*w + 4*v^2"}); }

}  // namespace

TEST_CASE("presentation shape: columns, raw rows, generic rank") {
    auto pres = principal_parts(cuspQ(), 1);
    CHECK(pres.order == 1);
    CHECK(pres.cols.size() == 3);  // 1, x, y
    CHECK(pres.dim == 1);
    CHECK(pres.expected_rank == 2);  // C(1+1, 1)
    CHECK(pres.generic_rank == 2);
    // the first raw row is the generator itself in the constant slot
    REQUIRE(!pres.raw_rows.empty());
    CHECK(pres.raw_rows[0][0] == P(qring(), "x^3 - y^2"));
    // every raw row starts with the shifted generator
    auto pres2 = principal_parts(quadricQ(), 1);
    CHECK(pres2.expected_rank == 3);
    CHECK(pres2.generic_rank == 3);
    CHECK(pres2.raw_rows[0][0] == P(quadricQ().ring(), "u*w - v^2"));
}

TEST_CASE("generic rank always matches the smooth-point value") {
    struct Case { Ideal I; int n; };
    std::vector<Case> cases = {{cuspQ(), 1},   {cuspQ(), 2},  {cusp2(), 1},
                               {cusp2(), 2},   {quadricQ(), 1}, {quadric5(), 1},
                               {ideal(qring(), {"x - y^2"}), 2}};
    for (auto& c : cases) {
        auto pres = principal_parts(c.I, c.n);
        long expected = 1;
        for (int k = 1; k <= c.n; ++k)
            expected = expected * (pres.dim + k) / k;  // C(n + dim, dim)
        CHECK(pres.expected_rank == expected);
        CHECK(static_cast<long>(pres.generic_rank) == expected);
    }
}

TEST_CASE("free rank of the cusp flips with the characteristic") {
    auto fq = pparts_free_rank(cuspQ(), 1);
    CHECK(fq.primary == 1);
    CHECK(fq.expected == 2);
    CHECK(!fq.structural_free);
    auto f2 = pparts_free_rank(cusp2(), 1);
    CHECK(f2.primary == 2);
    CHECK(f2.expected == 2);
    CHECK(f2.structural_free);
    auto f22 = pparts_free_rank(cusp2(), 2);
    CHECK(f22.primary == 3);
    CHECK(f22.expected == 3);
}

TEST_CASE("torsion of the rational cusp is nonempty with an explicit witness") {
    Ideal I = cuspQ();
    auto pres = principal_parts(I, 1);
    auto tor = pparts_torsion(I, pres, Polynomial(I.ring()));
    CHECK(!tor.torsion_free);
    REQUIRE(!tor.witnesses.empty());
    // witnesses are genuine torsion: missed by the relations, killed by a
    // multiplier power matching the colon chain length
    Polynomial killer = tor.multiplier.pow(tor.stabilized_at);
    for (const auto& w : tor.witnesses) {
        CHECK(!tor.relations.contains(w));
        CHECK(tor.saturated.contains(w));
        VecPoly scaled = w;
        for (auto& comp : scaled.c) comp *= killer;
        CHECK(tor.relations.contains(scaled));
    }
    CHECK(tor.stabilized_at >= 1);
}

TEST_CASE("torsion verdict is independent of the admissible multiplier") {
    Ideal I = cuspQ();
    auto pres = principal_parts(I, 1);
    // x^2 and y both cut out the singular locus of the cusp
    auto t1 = pparts_torsion(I, pres, P(I.ring(), "y"));
    auto t2 = pparts_torsion(I, pres, P(I.ring(), "x^2"));
    CHECK(t1.torsion_free == t2.torsion_free);
    CHECK(t1.saturated.equals(t2.saturated));
    Ideal J = quadricQ();
    auto presJ = principal_parts(J, 1);
    auto s1 = pparts_torsion(J, presJ, P(J.ring(), "u"));
    auto s2 = pparts_torsion(J, presJ, P(J.ring(), "w"));
    CHECK(s1.torsion_free);
    CHECK(s2.torsion_free);
    CHECK(s1.saturated.equals(s2.saturated));
}

TEST_CASE("normal quadric is torsion-free over both fields and both orders") {
    for (Ideal I : {quadricQ(), quadric5()}) {
        for (int n : {1, 2}) {
            auto pres = principal_parts(I, n);
            auto tor = pparts_torsion(I, pres, Polynomial(I.ring()));
            CHECK(tor.torsion_free);
            CHECK(tor.witnesses.empty());
        }
    }
}

TEST_CASE("fitting ideal conventions on tiny presentations") {
    auto r = make_ring(FieldSpec::rationals(), {"x"});
    Ideal zero = Ideal::zero(r);
    // R/(x^2): one generator, one relation (x^2)
    PolyMatrix rel = {{P(r, "x^2")}};
    CHECK(fitting_ideal(rel, 1, 0, zero).equals(Ideal(r, {P(r, "x^2")})));
    CHECK(fitting_ideal(rel, 1, 1, zero).contains_one());
    CHECK(fitting_ideal(rel, 1, 5, zero).contains_one());
    // R^2 with no relations: Fitt_2 = R, Fitt_1 = 0
    PolyMatrix none;
    CHECK(fitting_ideal(none, 2, 2, zero).contains_one());
    CHECK(fitting_ideal(none, 2, 1, zero).is_zero());
    CHECK(fitting_ideal(none, 2, -1, zero).is_zero());
}

TEST_CASE("fitting ideal of the square-root module of the char-2 cusp") {
    // R^{1/2} for x^3 + y^2 has 4 generators and the block presentation
    // [[y, x], [x^2, y]] repeated; its second Fitting ideal lands inside m
    auto r = pring(2);
    Ideal I = cusp2();
    PolyMatrix rows = {{P(r, "y"), P(r, "x"), P(r, "0"), P(r, "0")},
                       {P(r, "x^2"), P(r, "y"), P(r, "0"), P(r, "0")},
                       {P(r, "0"), P(r, "0"), P(r, "y"), P(r, "x")},
                       {P(r, "0"), P(r, "0"), P(r, "x^2"), P(r, "y")}};
    Ideal f2 = fitting_ideal(rows, 4, 2, I);
    CHECK(!f2.contains_one());
    for (const char* s : {"y^2", "x*y", "x^2", "x^2*y", "x^3", "x^4"})
        CHECK(f2.contains(P(r, s)));
    CHECK(!f2.contains(P(r, "x")));
    CHECK(!f2.contains(P(r, "y")));
    // Fitt_4 is trivially everything, Fitt_3 is the entry ideal
    CHECK(fitting_ideal(rows, 4, 4, I).contains_one());
    Ideal f3 = fitting_ideal(rows, 4, 3, I);
    CHECK(f3.contains(P(r, "x")));
    CHECK(f3.contains(P(r, "y")));
}

TEST_CASE("nash check certifies the char-2 cusp at both orders") {
    auto res1 = nash_isomorphism_check(cusp2(), 1, true);
    CHECK(res1.verdict == "ISO_CERTIFIED");
    CHECK(res1.free_rank.primary == 2);
    CHECK(res1.fitting_local_gens == 1);
    REQUIRE(res1.principal_witness.has_value());
    CHECK(res1.principal_witness->to_string() == "x^2");
    REQUIRE(res1.fitting_gens.size() == 1);
    CHECK(res1.fitting_gens[0].to_string() == "x^2");

    auto res2 = nash_isomorphism_check(cusp2(), 2, true);
    CHECK(res2.verdict == "ISO_CERTIFIED");
    CHECK(res2.free_rank.primary == 3);
    CHECK(res2.fitting_local_gens == 1);
    REQUIRE(res2.principal_witness.has_value());
    CHECK(res2.principal_witness->to_string() == "x*y^2");
}

TEST_CASE("nash check obstructs the rational cusp with the minor ideal as evidence") {
    auto res = nash_isomorphism_check(cuspQ(), 1, true);
    CHECK(res.verdict == "NOT_ISO");
    CHECK(res.free_rank.primary == 1);
    CHECK(res.free_rank.expected == 2);
    CHECK(res.fitting_local_gens == 2);
    CHECK(!res.principal_witness.has_value());
    std::vector<std::string> gens;
    for (const auto& g : res.fitting_gens) gens.push_back(g.to_string());
    std::sort(gens.begin(), gens.end());
    CHECK(gens == std::vector<std::string>{"x^2", "y"});
}

TEST_CASE("smooth inputs certify with a unit minor ideal") {
    auto res = nash_isomorphism_check(ideal(qring(), {"x - y^2"}), 1, true);
    CHECK(res.verdict == "ISO_CERTIFIED");
    CHECK(res.free_rank.primary == 2);
    CHECK(res.fitting_local_gens == 1);
    auto res2 = nash_isomorphism_check(ideal(qring(), {"x - y^2"}), 2, true);
    CHECK(res2.verdict == "ISO_CERTIFIED");
    CHECK(res2.free_rank.primary == 3);
}

TEST_CASE("quadric cone is obstructed at order one over both fields") {
    for (Ideal I : {quadricQ(), quadric5()}) {
        auto res = nash_isomorphism_check(I, 1, true);
        CHECK(res.verdict == "NOT_ISO");
        CHECK(res.free_rank.primary == 1);
        CHECK(res.free_rank.expected == 3);
    }
}

TEST_CASE("non-hypersurface certification requests are refused, obstruction still reported") {
    auto r = qring({"x", "y", "z"});
    // space monomial curve (t^3, t^4, t^5): prime, codimension two
    Ideal I = ideal(r, {"x*z - y^2", "x^3 - y*z", "x^2*y - z^2"});
    CHECK_THROWS_AS(nash_isomorphism_check(I, 1, true), UnsupportedScopeError);
    auto res = nash_isomorphism_check(I, 1, false);
    CHECK((res.verdict == "NOT_ISO" || res.verdict == "NO_OBSTRUCTION"));
}

TEST_CASE("free rank caveat names the base field assumption") {
    auto res = nash_isomorphism_check(cuspQ(), 1, true);
    REQUIRE(!res.caveats.empty());
    CHECK(std::find(res.caveats.begin(), res.caveats.end(),
                    "computed over non-closed base field") != res.caveats.end());
}
