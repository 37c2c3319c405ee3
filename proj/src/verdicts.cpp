#include "specgraph/verdicts.hpp"

#include <algorithm>
#include <map>

namespace specgraph {

std::string to_string(TriState t) {
    switch (t) {
        case TriState::True: return "true";
        case TriState::False: return "false";
        case TriState::Empty: return "empty";
    }
    return "?";
}

std::string citation_for(const std::string& verdict_id) {
    static const std::map<std::string, std::string> table = {
        {"top_local_cohomology", "Theorem 1.1 / Theorem 7.1"},
        {"ideal_transform", "Theorem 3.2; Theorem 5.2"},
        {"ideal_transform_local_ring", "Corollary 5.3"},
        {"ideal_transform_grade", "Corollary 3.3"},
        {"top_cohomology_max", "Corollary 6.3"},
        {"punctured_spectrum", "Theorem 1.2 / Theorem 8.2; Corollary 8.3"},
        {"endomorphism_ring", "Lemma 4.3; Lemma 4.1"},
    };
    auto it = table.find(verdict_id);
    return it == table.end() ? std::string{} : it->second;
}

namespace {

void require_certificate(const PrimeGraph& g, const ConnectivityCertificate& c) {
    if (!validate_certificate(g, c))
        throw InternalError("connectivity certificate failed re-validation");
}

std::vector<SquarefreeIdeal> component_ideals(const PrimeGraph& g,
                                              const ConnectivityCertificate& c) {
    std::vector<SquarefreeIdeal> out;
    for (const auto& comp : c.components) {
        std::vector<MonomialPrime> ps;
        for (int v : comp) ps.push_back(MonomialPrime{g.vertices[v]});
        out.push_back(intersect_primes(g.n, ps));
    }
    return out;
}

}  // namespace

Verdict analyze_Hc(const SquarefreeIdeal& I) {
    if (I.is_unit() || I.is_zero())
        throw DomainError("the top local cohomology verdict needs a proper "
                          "nonzero ideal");

    Verdict v;
    v.id = "top_local_cohomology";
    v.citation = citation_for(v.id);
    v.graph = graph_def61(I);
    v.certificate = connectivity(*v.graph);
    require_certificate(*v.graph, *v.certificate);

    Decomposition dec = decompose(I);
    v.side_numbers.emplace_back("c", dec.height_c);
    v.side_numbers.emplace_back("d", dec.dim_d);
    SquarefreeIdeal top = ideal_top(I);
    v.side_ideals.emplace_back("I_d", top);

    if (v.certificate->state == Connectivity::Connected) {
        v.result = TriState::True;
        v.statement =
            "H^c_I(R) is indecomposable as an R-module; equivalently, V(I_d) "
            "is connected in codimension one.";
    } else {
        v.result = TriState::False;
        v.statement =
            "H^c_I(R) is decomposable: it splits as the direct sum of the "
            "top local cohomology modules of the component ideals I_i.";
        std::vector<SquarefreeIdeal> parts = split_Hc(I);
        for (std::size_t i = 0; i < parts.size(); ++i)
            v.side_ideals.emplace_back("I_" + std::to_string(i + 1), parts[i]);
    }

    if (!lower_part(I).is_unit()) {
        ReductionAssertions ra = reduction_assertions(I);
        v.side_numbers.emplace_back("ht_lower_ok", ra.ht_lower_ok ? 1 : 0);
        v.side_numbers.emplace_back("ht_sum_ok", ra.ht_sum_ok ? 1 : 0);
        if (!ra.ht_lower_ok || !ra.ht_sum_ok)
            throw InternalError("reduction height bounds violated");
        v.notes.push_back(
            "mixed ideal: the verdict is computed from I_d, since the top "
            "local cohomology of I and of I_d agree");
    }
    if (dec.dim_d >= 2)
        v.notes.push_back(
            "whether the endomorphism ring of H^c_I(R) is Noetherian when "
            "dim R/I >= 2 is an open problem");
    return v;
}

std::vector<SquarefreeIdeal> split_Hc(const SquarefreeIdeal& I) {
    PrimeGraph g = graph_def61(I);
    ConnectivityCertificate cert = connectivity(g);
    require_certificate(g, cert);
    std::vector<SquarefreeIdeal> parts = component_ideals(g, cert);

    SquarefreeIdeal check = SquarefreeIdeal::unit(I.context_size());
    for (const SquarefreeIdeal& part : parts) check = intersect(check, part);
    if (!(check == ideal_top(I)))
        throw InternalError("component ideals do not reassemble to I_d");
    return parts;
}

Verdict analyze_ideal_transform(const SquarefreeIdeal& J,
                                const SquarefreeIdeal& I) {
    Verdict v;
    v.id = "ideal_transform";
    v.citation = citation_for(v.id);
    v.graph = graph_def51(J, I);
    v.certificate = connectivity(*v.graph);
    require_certificate(*v.graph, *v.certificate);

    if (v.certificate->state == Connectivity::Empty) {
        v.result = TriState::Empty;
        v.statement =
            "Spec A \\ V(I) is empty (every minimal prime of A contains I); "
            "the ideal transform D_I(A) vanishes.";
        return v;
    }

    std::vector<SquarefreeIdeal> us = component_ideals(*v.graph, *v.certificate);
    for (std::size_t i = 0; i < us.size(); ++i)
        v.side_ideals.emplace_back("U_" + std::to_string(i + 1), us[i]);

    // H^0_I(A) identity: the intersection of the U_i equals the intersection
    // over all vertices.
    SquarefreeIdeal all_u = SquarefreeIdeal::unit(I.context_size());
    for (const SquarefreeIdeal& u : us) all_u = intersect(all_u, u);
    std::vector<MonomialPrime> verts;
    for (VarSet p : v.graph->vertices) verts.push_back(MonomialPrime{p});
    if (!(all_u == intersect_primes(I.context_size(), verts)))
        throw InternalError("H^0 identity failed: cap U_i != cap of all vertices");
    v.notes.push_back("H^0_I(A) = cap U_i verified against the all-vertex "
                      "intersection");

    if (v.certificate->state == Connectivity::Connected) {
        v.result = TriState::True;
        v.statement = "D_I(A) is indecomposable as an A-module.";
    } else {
        v.result = TriState::False;
        v.statement =
            "D_I(A) is decomposable: it is the direct sum of the ideal "
            "transforms D_I(A/U_i) over the graph components, each of which "
            "is indecomposable.";
    }

    bool local_ring_hypothesis = true;
    for (MonomialPrime p : minimal_primes(J))
        if (ext_height_mod_prime(I, p) <= 1) local_ring_hypothesis = false;
    if (local_ring_hypothesis) {
        bool connected = v.certificate->state == Connectivity::Connected;
        v.notes.push_back(
            std::string("ht (I+p)/p > 1 holds for every associated prime, so "
                        "(for A complete) D_I(A) is a local ring if and only "
                        "if the graph is connected; here it is ") +
            (connected ? "connected" : "disconnected"));
    }

    if (J.is_zero() && height(I) >= 2) {
        if (v.certificate->state != Connectivity::Connected)
            throw InternalError("grade >= 2 over the ambient ring forces a "
                                "connected graph");
        v.notes.push_back(
            "grade I >= 2 over the ambient polynomial ring, so the punctured "
            "complement Spec R \\ V(I) is connected and D_I(R) = R");
    }
    return v;
}

Verdict analyze_top_cohomology(const SquarefreeIdeal& J) {
    Verdict v;
    v.id = "top_cohomology_max";
    v.citation = citation_for(v.id);
    v.graph = graph_def61(J);
    v.certificate = connectivity(*v.graph);
    require_certificate(*v.graph, *v.certificate);

    v.side_ideals.emplace_back("0_d", ideal_top(J));
    if (v.certificate->state == Connectivity::Connected) {
        v.result = TriState::True;
        v.statement =
            "H^d_m(A) is indecomposable and its endomorphism ring is a local "
            "Noetherian ring, finitely generated as an A-module.";
    } else {
        v.result = TriState::False;
        v.statement =
            "H^d_m(A) is decomposable; equivalently, V(0_d) is not connected "
            "in codimension one.";
    }
    v.notes.push_back(
        "stated for the completion of A; the combinatorial data of a "
        "monomial ideal is unchanged under completion");
    return v;
}

Verdict analyze_punctured(const SquarefreeIdeal& I) {
    Verdict v;
    v.id = "punctured_spectrum";
    v.graph = graph_punctured(I);
    v.certificate = connectivity(*v.graph);
    require_certificate(*v.graph, *v.certificate);

    switch (v.certificate->state) {
        case Connectivity::Empty:
            v.result = TriState::Empty;
            v.statement =
                "V(I) \\ {m} is empty (I is m-primary); no theorem applies.";
            return v;  // deliberately no citation
        case Connectivity::Connected:
            v.result = TriState::True;
            v.statement =
                "V(I) \\ {m} is connected; the ring of formal functions "
                "D^I(R^) is indecomposable as a ring.";
            break;
        case Connectivity::Disconnected:
            v.result = TriState::False;
            v.statement =
                "V(I) \\ {m} is disconnected; consequently some formal "
                "cohomology of R along I in degree 0 or 1 is nonzero.";
            break;
    }
    v.citation = citation_for(v.id);
    v.notes.push_back(
        "whether ring-indecomposability of D^I coincides with "
        "module-indecomposability is open");
    v.notes.push_back(
        "stated for the completion; monomial combinatorics is unchanged "
        "under completion");
    return v;
}

Verdict endomorphism_report(const SquarefreeIdeal& J, const SquarefreeIdeal& I) {
    if (J.context_size() != I.context_size())
        throw InputError("ideals belong to different variable contexts");
    SquarefreeIdeal total = sum(J, I);
    if (total.is_unit() || dim_quotient(total) != 1)
        throw DomainError("Lemma 4.3 requires dim R/I = 1");

    Verdict v;
    v.id = "endomorphism_ring";
    v.citation = citation_for(v.id);
    v.result = TriState::True;
    v.statement =
        "Hom(H^c_I, H^c_I) is isomorphic to the I-adic completion modulo u, "
        "a commutative local Noetherian ring.";
    v.side_ideals.emplace_back("u", u_ideal(J, I));
    v.notes.push_back(
        "commutativity uses that the ambient is Gorenstein (a polynomial "
        "ring over a field)");
    return v;
}

AnalysisReport analyze(const VariableContext& ctx, const SquarefreeIdeal& J,
                       const SquarefreeIdeal& I) {
    if (!I.is_proper() || I.is_zero())
        throw InputError("the ideal I must be proper and nonzero");
    if (J.is_unit()) throw InputError("the quotient ideal J must not be unit");

    AnalysisReport report{ctx.names(), J, I, decompose(I), ideal_top(I), {}};

    if (J.is_zero()) {
        report.verdicts.push_back(analyze_Hc(I));
    } else {
        report.verdicts.push_back(analyze_ideal_transform(J, I));
        report.verdicts.push_back(analyze_top_cohomology(J));
    }

    // The punctured locus of I inside Spec R/J is the locus of I+J in R.
    SquarefreeIdeal total = J.is_zero() ? I : sum(J, I);
    report.verdicts.push_back(analyze_punctured(total));

    if (!total.is_unit() && dim_quotient(total) == 1)
        report.verdicts.push_back(endomorphism_report(J, I));

    return report;
}

}  // namespace specgraph
