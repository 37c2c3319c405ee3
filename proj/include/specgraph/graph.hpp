#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specgraph/decompose.hpp"
#include "specgraph/ideal.hpp"

namespace specgraph {

enum class GraphKind { Def51, Def61, Punctured, FacetRidge };

std::string to_string(GraphKind kind);

/// An undirected graph whose vertices are monomial primes (or facets, for the
/// facet-ridge variant), plus the ambient data it was built from.
struct PrimeGraph {
    GraphKind kind;
    std::vector<VarSet> vertices;              // sorted by lex_less
    std::vector<std::pair<int, int>> edges;    // i < j, sorted
    int n;
    std::optional<SquarefreeIdeal> ambient_J;
    std::optional<SquarefreeIdeal> ambient_I;

    bool has_edge(int i, int j) const;
};

enum class Connectivity { Connected, Disconnected, Empty };

std::string to_string(Connectivity c);

/// Machine-checkable connectivity witness: a spanning tree when connected, a
/// crossing-edge-free bipartition (first component vs the rest) otherwise.
struct ConnectivityCertificate {
    Connectivity state;
    std::vector<std::vector<int>> components;  // each sorted; ordered by min vertex
    std::vector<std::pair<int, int>> spanning_tree;
    std::vector<int> bipartition_first;
};

ConnectivityCertificate connectivity(const PrimeGraph& g);

/// Re-validate a certificate against its graph: component partition is exact,
/// the spanning tree has |V|-1 edges all in the graph, the bipartition has no
/// crossing edge.
bool validate_certificate(const PrimeGraph& g, const ConnectivityCertificate& c);

/// Vertices: minimal primes p of J with I not contained in p. Edge between p
/// and q iff I is not contained in the prime on p union q; that single prime
/// decides the existence quantifier because the radical of p+q is the
/// monomial prime on the union.
PrimeGraph graph_def51(const SquarefreeIdeal& J, const SquarefreeIdeal& I);

/// Vertices: top-dimensional minimal primes of J. Edge iff the join has
/// height one in R/J; cross-checked against the cardinality criterion
/// |p union q| == height(J) + 1 on every pair.
PrimeGraph graph_def61(const SquarefreeIdeal& J);

/// ht_{R/J}(P/J) = |P| - min{|r| : r minimal prime of J, r subset of P}.
/// Valid because R and every R/r are catenary polynomial rings.
int height_in_quotient(const SquarefreeIdeal& J, MonomialPrime P);

/// Vertices: minimal primes of I other than the maximal ideal. Edge iff the
/// union is still proper. No vertices means the locus is empty (tri-state).
PrimeGraph graph_punctured(const SquarefreeIdeal& I);

/// A simplicial complex given by its facets (maximal faces).
struct SimplicialComplex {
    std::vector<VarSet> facets;  // antichain, sorted by lex_less

    bool is_pure() const;
};

SimplicialComplex make_complex(const VariableContext& ctx,
                               std::vector<VarSet> facets);

/// Ideal of minimal non-faces. A set is a non-face iff it meets the
/// complement of every facet, so the minimal non-faces are the minimal
/// transversals of the facet-complement hypergraph.
SquarefreeIdeal stanley_reisner(const VariableContext& ctx,
                                const SimplicialComplex& complex);

/// Vertices: facets of maximum cardinality; edge iff the two facets share a
/// ridge (|F intersect G| = |F| - 1).
PrimeGraph facet_ridge_graph(int n, const SimplicialComplex& complex);

}  // namespace specgraph
