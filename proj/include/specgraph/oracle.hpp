#pragma once

#include <vector>

#include "specgraph/graph.hpp"
#include "specgraph/ideal.hpp"

namespace specgraph::oracle {

// Exhaustive-enumeration reference answers, used in tests and `specgraph
// verify`. Shares nothing with the main path beyond contained_in_prime.

constexpr int kOracleMaxVariables = 14;

/// All subsets containing I, filtered down to the inclusion-minimal ones.
std::vector<MonomialPrime> oracle_minimal_primes(const SquarefreeIdeal& I);

/// Literal quantifier: is there a monomial prime P containing both p and q
/// with I not contained in P?
bool oracle_edge_def51(const SquarefreeIdeal& J, const SquarefreeIdeal& I,
                       MonomialPrime p, MonomialPrime q);

/// Longest strictly increasing chain of monomial primes from a minimal prime
/// of J up to P.
int oracle_height_in_quotient(const SquarefreeIdeal& J, MonomialPrime P);

/// Component count of the comparability graph on
/// {monomial primes P : P contains I, P != m}; -1 means the locus is empty.
int oracle_punctured_components(const SquarefreeIdeal& I);

}  // namespace specgraph::oracle
