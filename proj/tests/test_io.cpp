#include <doctest.h>

#include <random>

#include "test_util.hpp"

using namespace specgraph;
using namespace specgraph::io;
using namespace testutil;

TEST_CASE("ideal expression grammar") {
    auto c4 = ctx({"x", "y", "z", "w"});
    auto supports = parse_ideal_expression(c4, "(x*z, x*w, y*z, y*w)");
    REQUIRE(supports.size() == 4);
    CHECK(supports[0] == (var_bit(0) | var_bit(2)));

    auto two = parse_ideal_expression(c4, "(y, x*z)");
    REQUIRE(two.size() == 2);
    CHECK(two[0] == var_bit(1));

    // whitespace-insensitive; repeated variables collapse
    CHECK(parse_ideal_expression(c4, " ( x * x * y ) ") ==
          std::vector<VarSet>{var_bit(0) | var_bit(1)});
    CHECK(parse_ideal_expression(c4, "()").empty());

    CHECK_THROWS_AS(parse_ideal_expression(c4, "(x*q)"), ParseError);
    CHECK_THROWS_AS(parse_ideal_expression(c4, "(x,)"), ParseError);
    CHECK_THROWS_AS(parse_ideal_expression(c4, "x"), ParseError);
    CHECK_THROWS_AS(parse_ideal_expression(c4, "(x) y"), ParseError);

    try {
        parse_ideal_expression(c4, "(x*q)");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
    }
}

TEST_CASE("render_ideal round-trips through the grammar") {
    auto c4 = ctx({"x", "y", "z", "w"});
    auto I = ideal(c4, "(x*z,x*w,y*z,y*w)");
    CHECK(render_ideal(c4, I) == "(x*z,x*w,y*z,y*w)");
    CHECK(ideal(c4, render_ideal(c4, I)) == I);
    CHECK(render_ideal(c4, SquarefreeIdeal::zero(4)) == "(0)");
    CHECK(render_ideal(c4, SquarefreeIdeal::unit(4)) == "(1)");
}

TEST_CASE("load_document") {
    auto doc = load_document(
        R"json({"variables":["x","y","z","w"],"J":null,"I":"(x*z,x*w,y*z,y*w)"})json");
    CHECK(doc.ctx.size() == 4);
    CHECK(!doc.J.has_value());
    CHECK(doc.the_ideal().gens().size() == 4);

    auto facet_doc = load_document(
        R"json({"variables":["a","b","c","d"],"facets":[["a","b","c"],["b","c","d"]]})json");
    REQUIRE(facet_doc.complex.has_value());
    CHECK(render_ideal(facet_doc.ctx, facet_doc.the_ideal()) == "(a*d)");

    CHECK_THROWS_AS(load_document(R"json({"variables":["x"],"I":5})json"), InputError);
    CHECK_THROWS_AS(load_document("not json"), InputError);
    CHECK_THROWS_AS(load_document(R"json({"I":"(x)"})json"), InputError);
    CHECK_THROWS_AS(load_document(R"json({"variables":["x"]})json"), InputError);
    CHECK_THROWS_AS(
        load_document(R"json({"variables":["x"],"I":"(x)","facets":[["x"]]})json"),
        InputError);
}

TEST_CASE("report emission is deterministic and round-trip stable") {
    auto doc = load_document(
        R"json({"variables":["x","y","z","w"],"J":null,"I":"(x*z,x*w,y*z,y*w)"})json");
    auto report = analyze(doc.ctx, doc.ambient(), doc.the_ideal());
    std::string a = emit_report(doc, report, Format::Json);
    std::string b = emit_report(doc, report, Format::Json);
    CHECK(a == b);
    CHECK(a.find("\"schema\": \"specgraph/1\"") != std::string::npos);

    // text renderer is derived from the same model and never empty
    std::string text = emit_report(doc, report, Format::Text);
    CHECK(text.find("minimal primes") != std::string::npos);
    CHECK(text.find("decomposable") != std::string::npos);
}

TEST_CASE("verify runs clean on a small input") {
    auto doc = load_document(
        R"json({"variables":["x","y","z"],"J":"(y,x*z)","I":"(x)"})json");
    std::string out = run_verify(doc);
    CHECK(out.find("FAIL") == std::string::npos);
    CHECK(out.find("OK") != std::string::npos);
}

TEST_CASE("grammar fuzzing: every rejection carries a position") {
    auto c3 = ctx({"x", "y", "z"});
    std::mt19937_64 rng(seed() ^ 0xf022ull);
    const std::string alphabet = "xyzw*(), 1+";
    for (int trial = 0; trial < 2000; ++trial) {
        std::string text;
        int len = static_cast<int>(rng() % 12);
        for (int i = 0; i < len; ++i)
            text += alphabet[rng() % alphabet.size()];
        try {
            parse_ideal_expression(c3, text);
        } catch (const ParseError& e) {
            CHECK(e.position() <= text.size());
        }
    }
}
