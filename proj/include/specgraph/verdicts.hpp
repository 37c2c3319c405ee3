#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

enum class TriState { True, False, Empty };

std::string to_string(TriState t);

/// One cited conclusion: statement text, theorem citation, tri-state result,
/// the graph and connectivity certificate it rests on, and computed side
/// ideals (I_d, U_i, u, component ideals).
struct Verdict {
    std::string id;
    std::string statement;
    std::string citation;
    TriState result;
    std::optional<PrimeGraph> graph;
    std::optional<ConnectivityCertificate> certificate;
    std::vector<std::pair<std::string, SquarefreeIdeal>> side_ideals;
    std::vector<std::pair<std::string, int>> side_numbers;
    std::vector<std::string> notes;
};

/// Theorem numbering lives in this one table.
std::string citation_for(const std::string& verdict_id);

/// Indecomposability of the top local cohomology of R with support in I:
/// connected top-prime graph of R/I means indecomposable. Side data carries
/// c, d, I_d and, for mixed ideals, the reduction height checks.
Verdict analyze_Hc(const SquarefreeIdeal& I);

/// Component ideals I_i = intersection of the vertices of each connected
/// component of the top-prime graph of R/I; their intersection is I_d.
std::vector<SquarefreeIdeal> split_Hc(const SquarefreeIdeal& I);

/// Decomposability of the ideal transform D_I(A), A = R/J: connected
/// Definition-5.1 graph means indecomposable. Side data: the U_i per
/// component with the H^0 consistency identity, the local-ring criterion
/// when every associated prime passes the height test, and the grade >= 2
/// remark for the ambient-ring case.
Verdict analyze_ideal_transform(const SquarefreeIdeal& J,
                                const SquarefreeIdeal& I);

/// Indecomposability of the top local cohomology of A = R/J at the maximal
/// ideal, via connectivity of the top-prime graph.
Verdict analyze_top_cohomology(const SquarefreeIdeal& J);

/// Connectedness of the punctured variety of I, with its consequence for the
/// ring of formal functions along it. Tri-state: an m-primary I gives
/// "empty" and no theorem is invoked.
Verdict analyze_punctured(const SquarefreeIdeal& I);

/// For dim A/IA = 1: the endomorphism ring of the top local cohomology with
/// support in I is the completed quotient by u, a commutative local
/// Noetherian ring.
Verdict endomorphism_report(const SquarefreeIdeal& J, const SquarefreeIdeal& I);

/// Everything the CLI renders for one input.
struct AnalysisReport {
    std::vector<std::string> variable_names;
    SquarefreeIdeal J;
    SquarefreeIdeal I;
    Decomposition decomposition;  // of I
    SquarefreeIdeal I_top;
    std::vector<Verdict> verdicts;
};

AnalysisReport analyze(const VariableContext& ctx, const SquarefreeIdeal& J,
                       const SquarefreeIdeal& I);

}  // namespace specgraph
