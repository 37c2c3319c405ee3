#pragma once

#include <vector>

#include "specgraph/ideal.hpp"

namespace specgraph {

/// The minimal-prime layer of a squarefree ideal. For squarefree ideals the
/// reduced primary decomposition is exactly the minimal-prime decomposition,
/// so "primary components" means minimal primes throughout.
struct Decomposition {
    SquarefreeIdeal ideal;
    std::vector<MonomialPrime> min_primes;  // sorted by lex_less
    int height_c;                           // min |P| over min_primes
    int dim_d;                              // n - height_c
};

/// Minimal primes = minimal transversals of the generator hypergraph,
/// computed by Berge multiplication with subset absorption. The zero ideal
/// has the single minimal prime {}; the unit ideal is rejected.
std::vector<MonomialPrime> minimal_primes(const SquarefreeIdeal& I);

Decomposition decompose(const SquarefreeIdeal& I);

int height(const SquarefreeIdeal& I);
int dim_quotient(const SquarefreeIdeal& I);

/// Minimal primes of minimum cardinality.
std::vector<MonomialPrime> top_components(const SquarefreeIdeal& I);

/// Intersection of the top-dimensional components; equals I when unmixed.
SquarefreeIdeal ideal_top(const SquarefreeIdeal& I);

/// Intersection of the non-top components; the unit ideal when I is unmixed.
SquarefreeIdeal lower_part(const SquarefreeIdeal& I);

/// Height bounds satisfied by every reduced decomposition of a mixed ideal:
/// height(lower) >= c+1 and height(ideal_top + lower) >= c+2. A false entry
/// signals an implementation bug, not a mathematical outcome.
struct ReductionAssertions {
    bool ht_lower_ok;
    bool ht_sum_ok;
    int c;
};

ReductionAssertions reduction_assertions(const SquarefreeIdeal& I);

/// Height of (I+p)/p inside the polynomial ring on the variables outside p:
/// generators meeting p map to zero, the rest generate the image. If nothing
/// survives the height is 0.
int ext_height_mod_prime(const SquarefreeIdeal& I, MonomialPrime p);

/// u_{R/J}(I): intersection of the minimal primes p of J with
/// dim R/(I + p) > 0. The empty family gives the unit ideal.
SquarefreeIdeal u_ideal(const SquarefreeIdeal& J, const SquarefreeIdeal& I);

}  // namespace specgraph
