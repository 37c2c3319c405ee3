#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specgraph/graph.hpp"
#include "specgraph/verdicts.hpp"

namespace specgraph::io {

/// A parsed input file: a variable context and either an ideal pair (J
/// optional, I required) or a simplicial complex by facets.
struct InputDocument {
    VariableContext ctx;
    std::optional<SquarefreeIdeal> J;  // absent or zero means ambient R
    std::optional<SquarefreeIdeal> I;
    std::optional<SimplicialComplex> complex;

    SquarefreeIdeal ambient() const {
        return J.value_or(SquarefreeIdeal::zero(ctx.size()));
    }
    /// The ideal to analyze: I, or the Stanley-Reisner ideal of the complex.
    SquarefreeIdeal the_ideal() const;
};

/// Grammar: ideal := '(' term (',' term)* ')' ; term := var ('*' var)*.
/// Whitespace-insensitive; repeated variables in a term collapse. Unknown
/// variables raise ParseError with the byte position.
std::vector<VarSet> parse_ideal_expression(const VariableContext& ctx,
                                           const std::string& text);

/// "(x*z, x*w)"; "(0)" for zero, "(1)" for unit.
std::string render_ideal(const VariableContext& ctx, const SquarefreeIdeal& I);

std::vector<std::string> render_prime(const VariableContext& ctx, VarSet p);

InputDocument load_document(const std::string& json_text);
InputDocument load_document_file(const std::string& path);

enum class Format { Json, Text };

/// Render a report. The text format is derived from the JSON model; the JSON
/// output has fixed key order and is byte-stable.
std::string emit_report(const InputDocument& doc, const AnalysisReport& report,
                        Format format);

std::string emit_graph(const InputDocument& doc, const PrimeGraph& g,
                       Format format);

std::string emit_min_primes(const InputDocument& doc,
                            const std::vector<MonomialPrime>& primes,
                            Format format);

std::string emit_split(const InputDocument& doc,
                       const std::vector<SquarefreeIdeal>& parts, Format format);

/// Cross-check the input against the exhaustive oracle; returns a rendered
/// summary, throws on mismatch (InternalError) or size guard (CapacityError).
std::string run_verify(const InputDocument& doc);

/// Entry point used by the CLI binary. Exit codes: 0 ok, 1 input/parse
/// error, 2 capacity guard, 3 internal invariant failure.
int run(const std::vector<std::string>& args);

}  // namespace specgraph::io
