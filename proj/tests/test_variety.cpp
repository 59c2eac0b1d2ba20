#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nashforge/errors.hpp"
#include "nashforge/report.hpp"
#include "nashforge/variety.hpp"

using namespace nashforge;

namespace {
VarietyInput parse(const std::string& text) { return parse_variety_text(text, "<test>"); }
}  // namespace

TEST_CASE("minimal input parses with defaults") {
    auto in = parse("[variety]\nchar = 0\nvars = x, y\nideal = x^3 - y^2\n");
    CHECK(in.field.p == 0);
    CHECK(in.ring->vars == std::vector<std::string>{"x", "y"});
    REQUIRE(in.ideal.gens().size() == 1);
    CHECK(in.ideal.gens()[0].to_string() == "x^3 - y^2");
    CHECK(in.task_kind.empty());
    CHECK(in.order == 0);
    CHECK(in.group_mats.empty());
}

TEST_CASE("comments, blank lines, and multiple generators") {
    auto in = parse("# a curve\n[variety]\nchar = 5\nvars = x, y, z\n"
                    "ideal = x*z - y^2 ; x^3 - y*z\n\n[task]\nkind = pparts\norder = 2\n");
    CHECK(in.field.p == 5);
    CHECK(in.ideal.gens().size() == 2);
    CHECK(in.task_kind == "pparts");
    CHECK(in.order == 2);
}

TEST_CASE("points translate the variety to the origin") {
    auto in = parse("[variety]\nchar = 0\nvars = x, y\n"
                    "ideal = (x - 1)^3 - (y - 1)^2\npoint = 1, 1\n");
    // recentred: substituting the origin must satisfy every generator
    for (const auto& g : in.ideal.gens()) CHECK(g.constant_term().is_zero());
    CHECK(in.ideal.gens()[0].to_string() == "x^3 - y^2");
}

TEST_CASE("rational points with fractions") {
    auto in = parse("[variety]\nchar = 0\nvars = x, y\n"
                    "ideal = y - x^2\npoint = 1/2, 1/4\n");
    for (const auto& g : in.ideal.gens()) CHECK(g.constant_term().is_zero());
}

TEST_CASE("off-variety points are rejected with a located message") {
    try {
        parse("[variety]\nchar = 0\nvars = x, y\nideal = x^3 - y^2\npoint = 1, 2\n");
        FAIL("expected rejection");
    } catch (const ParseError& e) {
        std::string msg = e.what();
        CHECK(msg.find("<test>:") != std::string::npos);
        CHECK(msg.find("not on the variety") != std::string::npos);
    }
}

TEST_CASE("generators with constant terms need a point") {
    CHECK_THROWS_AS(parse("[variety]\nchar = 0\nvars = x\nideal = x + 1\n"), ParseError);
}

TEST_CASE("field mismatches carry the line number") {
    try {
        parse("[variety]\nchar = 2\nvars = x, y\nideal = x^3 + 1/2*y^2\n");
        FAIL("expected rejection");
    } catch (const FieldMismatchError& e) {
        CHECK(std::string(e.what()).find(":4:") != std::string::npos);
    }
}

TEST_CASE("structural validation failures") {
    CHECK_THROWS_AS(parse(""), ParseError);                                    // no sections
    CHECK_THROWS_AS(parse("[varietyy]\nchar = 0\n"), ParseError);              // bad section
    CHECK_THROWS_AS(parse("[variety]\nchar = 0\n"), ParseError);               // missing vars
    CHECK_THROWS_AS(parse("[variety]\nchar = 6\nvars = x\n"), ParseError);     // non-prime
    CHECK_THROWS_AS(parse("[variety]\nchar = 0\nvars = x, x\n"), ParseError);  // dup var
    CHECK_THROWS_AS(parse("[variety]\nchar = 0\nvars = x\nchar = 0\n"), ParseError);  // dup key
    CHECK_THROWS_AS(parse("[variety]\nchar = 0\nvars = 2x\n"), ParseError);    // bad identifier
    CHECK_THROWS_AS(parse("[variety]\nchar = 0\nvars = x\nbogus = 1\n"), ParseError);
    CHECK_THROWS_AS(parse("[variety]\nchar = 0\nvars = x, y\nideal = x\npoint = 0\n"),
                    ParseError);  // point arity
    CHECK_THROWS_AS(parse("[variety]\nchar = 0\nvars = x\n[task]\nkind = kunz\norder = 0\n"),
                    ParseError);  // bad order
}

TEST_CASE("group matrices parse row by row") {
    auto in = parse("[variety]\nchar = 0\nvars = x, y\n\n[group]\n"
                    "matrix = 1, 0 ; 0, 1\nmatrix = -1, 0 ; 0, -1\n");
    REQUIRE(in.group_mats.size() == 2);
    CHECK(in.group_mats[1][0][0] == Scalar::from_int(FieldSpec::rationals(), -1));
    CHECK(in.group_mats[1][0][1].is_zero());
    // ragged rows are structural errors
    CHECK_THROWS_AS(parse("[variety]\nchar = 0\nvars = x, y\n[group]\nmatrix = 1, 0 ; 0\n"),
                    ParseError);
}

TEST_CASE("reports hash their raw input deterministically") {
    std::string text = "[variety]\nchar = 0\nvars = x, y\nideal = x^3 - y^2\n";
    auto a = parse(text);
    CHECK(fnv1a_hash(a.raw) == fnv1a_hash(text));
    CHECK(fnv1a_hash("x") != fnv1a_hash("y"));
    // documented check vector: hash of the empty string is the FNV offset basis
    CHECK(fnv1a_hash("") == "fnv1a:cbf29ce484222325");
}

TEST_CASE("json reports are stable, text reports carry the timing") {
    Report rep;
    rep.task = "demo";
    rep.input_hash = fnv1a_hash("zzz");
    rep.characteristic = 2;
    rep.dim = 1;
    rep.order = 1;
    rep.evidence = {{"count", EvidenceValue(long(3))},
                    {"flag", EvidenceValue(true)},
                    {"name", EvidenceValue(std::string("x^2"))},
                    {"list", EvidenceValue(std::vector<std::string>{"a", "b"})}};
    rep.verdict = "DEMO";
    rep.caveats = {"demo caveat"};
    rep.ms = 1234;
    std::string j1 = emit_json(rep);
    std::string j2 = emit_json(rep);
    CHECK(j1 == j2);
    // ms is frozen to zero in the canonical JSON form
    CHECK(j1.find("\"ms\": 0") != std::string::npos);
    CHECK(j1.find("1234") == std::string::npos);
    // key order is fixed
    size_t t = j1.find("\"task\""), v = j1.find("\"verdict\""), m = j1.find("\"ms\"");
    REQUIRE(t != std::string::npos);
    REQUIRE(v != std::string::npos);
    REQUIRE(m != std::string::npos);
    CHECK(t < v);
    CHECK(v < m);
    std::string txt = emit_text(rep);
    CHECK(txt.find("1234 ms") != std::string::npos);
    CHECK(txt.find("DEMO") != std::string::npos);
}
