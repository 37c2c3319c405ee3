#include <doctest.h>

#include "specgraph/oracle.hpp"
#include "test_util.hpp"

using namespace specgraph;
using namespace testutil;
using namespace specgraph::oracle;

TEST_CASE("oracle_minimal_primes") {
    auto c4 = ctx({"x", "y", "z", "w"});
    auto ps = oracle_minimal_primes(ideal(c4, "(x*z,x*w,y*z,y*w)"));
    REQUIRE(ps.size() == 2);
    CHECK(ps[0] == prime(c4, {"x", "y"}));
    CHECK(ps[1] == prime(c4, {"z", "w"}));

    auto c3 = ctx({"x", "y", "z"});
    auto single = oracle_minimal_primes(ideal(c3, "(x)"));
    REQUIRE(single.size() == 1);
    CHECK(single[0] == prime(c3, {"x"}));

    auto zero = oracle_minimal_primes(SquarefreeIdeal::zero(3));
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].vars == 0);

    // cost guard
    std::vector<std::string> names;
    for (int i = 0; i < 15; ++i) names.push_back("x" + std::to_string(i));
    auto big = make_context(names);
    CHECK_THROWS_AS(oracle_minimal_primes(ideal(big, "(x0)")), CapacityError);
}

TEST_CASE("oracle_edge_def51") {
    auto c2 = ctx({"x", "y"});
    CHECK(!oracle_edge_def51(ideal(c2, "(x*y)"), ideal(c2, "(x,y)"),
                             prime(c2, {"x"}), prime(c2, {"y"})));

    auto c4 = ctx({"x", "y", "z", "w"});
    CHECK(oracle_edge_def51(ideal(c4, "(x*z)"), ideal(c4, "(w)"),
                            prime(c4, {"x"}), prime(c4, {"z"})));

    CHECK_THROWS_AS(oracle_edge_def51(ideal(c2, "(x*y)"), ideal(c2, "(x,y)"),
                                      prime(c2, {"x"}), prime(c2, {"x"})),
                    DomainError);
}

TEST_CASE("oracle_height_in_quotient") {
    auto c2 = ctx({"x", "y"});
    CHECK(oracle_height_in_quotient(SquarefreeIdeal::zero(2),
                                    prime(c2, {"x", "y"})) == 2);

    auto c3 = ctx({"x", "y", "z"});
    CHECK(oracle_height_in_quotient(ideal(c3, "(y,x*z)"),
                                    prime(c3, {"x", "y", "z"})) == 1);

    auto c4 = ctx({"x", "y", "z", "w"});
    CHECK(oracle_height_in_quotient(ideal(c4, "(x*z,x*w,y*z,y*w)"),
                                    prime(c4, {"x", "y", "z", "w"})) == 2);
}

TEST_CASE("oracle_punctured_components") {
    auto c4 = ctx({"x", "y", "z", "w"});
    CHECK(oracle_punctured_components(ideal(c4, "(x*z,x*w,y*z,y*w)")) == 2);
    CHECK(oracle_punctured_components(ideal(c4, "(x,y)")) == 1);

    auto c3 = ctx({"x", "y", "z"});
    CHECK(oracle_punctured_components(ideal(c3, "(x,y,z)")) == -1);
}
