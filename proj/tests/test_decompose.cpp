#include <doctest.h>

#include <algorithm>

#include "specgraph/oracle.hpp"
#include "test_util.hpp"

using namespace specgraph;
using namespace testutil;

TEST_CASE("minimal primes of classical examples") {
    auto c4 = ctx({"x", "y", "z", "w"});
    auto primes = minimal_primes(ideal(c4, "(x*z,x*w,y*z,y*w)"));
    REQUIRE(primes.size() == 2);
    CHECK(primes[0] == prime(c4, {"x", "y"}));
    CHECK(primes[1] == prime(c4, {"z", "w"}));

    auto c3 = ctx({"x", "y", "z"});
    auto ps3 = minimal_primes(ideal(c3, "(y,x*z)"));
    REQUIRE(ps3.size() == 2);
    CHECK(ps3[0] == prime(c3, {"x", "y"}));
    CHECK(ps3[1] == prime(c3, {"y", "z"}));

    auto zero = minimal_primes(SquarefreeIdeal::zero(3));
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].vars == 0);

    CHECK_THROWS_AS(minimal_primes(SquarefreeIdeal::unit(3)), DomainError);
}

TEST_CASE("height and dimension") {
    auto c4 = ctx({"x", "y", "z", "w"});
    CHECK(height(ideal(c4, "(x*z,x*w,y*z,y*w)")) == 2);
    CHECK(dim_quotient(ideal(c4, "(x*z,x*w,y*z,y*w)")) == 2);

    auto c3 = ctx({"x", "y", "z"});
    CHECK(height(ideal(c3, "(x)")) == 1);
    CHECK(dim_quotient(ideal(c3, "(x)")) == 2);
    CHECK(height(ideal(c3, "(x,y,z)")) == 3);
    CHECK(dim_quotient(ideal(c3, "(x,y,z)")) == 0);
    CHECK(height(SquarefreeIdeal::zero(3)) == 0);
    CHECK(dim_quotient(SquarefreeIdeal::zero(3)) == 3);
}

TEST_CASE("top components, ideal_top, lower_part") {
    auto c3 = ctx({"x", "y", "z"});
    auto mixed = ideal(c3, "(x*y,x*z)");
    auto top = top_components(mixed);
    REQUIRE(top.size() == 1);
    CHECK(top[0] == prime(c3, {"x"}));
    CHECK(ideal_top(mixed) == ideal(c3, "(x)"));
    CHECK(lower_part(mixed) == ideal(c3, "(y,z)"));

    auto c4 = ctx({"x", "y", "z", "w"});
    auto unmixed = ideal(c4, "(x*z,x*w,y*z,y*w)");
    CHECK(top_components(unmixed).size() == 2);
    CHECK(ideal_top(unmixed) == unmixed);
    CHECK(lower_part(unmixed).is_unit());

    CHECK(ideal_top(ideal(c3, "(x)")) == ideal(c3, "(x)"));
    CHECK(lower_part(ideal(c3, "(y,x*z)")).is_unit());
}

TEST_CASE("reduction assertions") {
    auto c3 = ctx({"x", "y", "z"});
    auto ra = reduction_assertions(ideal(c3, "(x*y,x*z)"));
    CHECK(ra.ht_lower_ok);
    CHECK(ra.ht_sum_ok);
    CHECK(ra.c == 1);

    // (x) cap (y,z) cap (y,w): height-1 top with two height-2 lower primes
    auto c4 = ctx({"x", "y", "z", "w"});
    auto deeper = intersect(intersect(ideal(c4, "(x)"), ideal(c4, "(y,z)")),
                            ideal(c4, "(y,w)"));
    auto ra2 = reduction_assertions(deeper);
    CHECK(ra2.ht_lower_ok);
    CHECK(ra2.ht_sum_ok);

    CHECK_THROWS_AS(reduction_assertions(ideal(c3, "(y,x*z)")), DomainError);
}

TEST_CASE("ext_height_mod_prime") {
    auto c2 = ctx({"x", "y"});
    CHECK(ext_height_mod_prime(ideal(c2, "(x)"), prime(c2, {"y"})) == 1);

    auto c4 = ctx({"x", "y", "z", "w"});
    CHECK(ext_height_mod_prime(ideal(c4, "(x*z,x*w,y*z,y*w)"),
                               prime(c4, {"x", "y"})) == 0);
    CHECK(ext_height_mod_prime(ideal(c4, "(z,w)"), prime(c4, {"x"})) == 2);
}

TEST_CASE("u_ideal") {
    auto c2 = ctx({"x", "y"});
    CHECK(u_ideal(ideal(c2, "(x*y)"), ideal(c2, "(x)")) == ideal(c2, "(x)"));
    CHECK(u_ideal(SquarefreeIdeal::zero(2), ideal(c2, "(x)")).is_zero());
    CHECK(u_ideal(SquarefreeIdeal::zero(2), ideal(c2, "(x,y)")).is_unit());
    CHECK_THROWS_AS(u_ideal(SquarefreeIdeal::zero(3), ideal(c2, "(x)")),
                    InputError);
}

TEST_CASE("transversal correctness against the oracle, random sweep") {
    std::mt19937_64 rng(seed() ^ 0xdec0deull);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(rng() % 8);  // n <= 10
        auto I = random_ideal(rng, n, 8);
        INFO("ideal: ", replay_string(I));
        CHECK(minimal_primes(I) == oracle::oracle_minimal_primes(I));
    }
}

TEST_CASE("decomposition-layer invariants on random ideals") {
    std::mt19937_64 rng(seed() ^ 0xabcdefull);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);  // n <= 8
        auto I = random_ideal(rng, n, 8);
        INFO("ideal: ", replay_string(I));
        auto primes = minimal_primes(I);

        // double-transversal stability
        CHECK(minimal_primes(intersect_primes(n, primes)) == primes);

        // primes-as-ideals intersection agrees with pairwise intersect
        if (primes.size() >= 2) {
            CHECK(intersect(prime_to_ideal(n, primes[0]),
                            prime_to_ideal(n, primes[1])) ==
                  intersect_primes(n, {primes[0], primes[1]}));
        }

        // I in P iff some minimal prime is in P, exhaustively
        for (VarSet p = 0; p < (VarSet{1} << n); ++p) {
            bool via_primes = false;
            for (const auto& q : primes)
                if (is_subset(q.vars, p)) via_primes = true;
            CHECK(contained_in_prime(I, MonomialPrime{p}) == via_primes);
        }

        // unmixedness iff ideal_top == I
        int c = height(I);
        bool unmixed = std::all_of(primes.begin(), primes.end(),
                                   [&](const MonomialPrime& p) {
                                       return p.height() == c;
                                   });
        CHECK((ideal_top(I) == I) == unmixed);

        if (!unmixed) {
            CHECK(intersect(ideal_top(I), lower_part(I)) == I);
            auto ra = reduction_assertions(I);
            CHECK(ra.ht_lower_ok);
            CHECK(ra.ht_sum_ok);
        }
    }
}
