#include "specgraph/graph.hpp"

#include <algorithm>
#include <queue>

namespace specgraph {

std::string to_string(GraphKind kind) {
    switch (kind) {
        case GraphKind::Def51: return "def51";
        case GraphKind::Def61: return "def61";
        case GraphKind::Punctured: return "punctured";
        case GraphKind::FacetRidge: return "facet-ridge";
    }
    return "?";
}

std::string to_string(Connectivity c) {
    switch (c) {
        case Connectivity::Connected: return "connected";
        case Connectivity::Disconnected: return "disconnected";
        case Connectivity::Empty: return "empty";
    }
    return "?";
}

bool PrimeGraph::has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::find(edges.begin(), edges.end(), std::make_pair(i, j)) !=
           edges.end();
}

ConnectivityCertificate connectivity(const PrimeGraph& g) {
    ConnectivityCertificate cert;
    int nv = static_cast<int>(g.vertices.size());
    if (nv == 0) {
        cert.state = Connectivity::Empty;
        return cert;
    }

    std::vector<std::vector<int>> adj(nv);
    for (auto [i, j] : g.edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    std::vector<int> comp(nv, -1);
    for (int start = 0; start < nv; ++start) {
        if (comp[start] >= 0) continue;
        int id = static_cast<int>(cert.components.size());
        cert.components.emplace_back();
        std::queue<int> q;
        q.push(start);
        comp[start] = id;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            cert.components[id].push_back(v);
            for (int w : adj[v]) {
                if (comp[w] >= 0) continue;
                comp[w] = id;
                cert.spanning_tree.emplace_back(std::min(v, w), std::max(v, w));
                q.push(w);
            }
        }
        std::sort(cert.components[id].begin(), cert.components[id].end());
    }

    if (cert.components.size() == 1) {
        cert.state = Connectivity::Connected;
        std::sort(cert.spanning_tree.begin(), cert.spanning_tree.end());
    } else {
        cert.state = Connectivity::Disconnected;
        cert.spanning_tree.clear();
        cert.bipartition_first = cert.components.front();
    }
    return cert;
}

bool validate_certificate(const PrimeGraph& g, const ConnectivityCertificate& c) {
    int nv = static_cast<int>(g.vertices.size());
    if (c.state == Connectivity::Empty) return nv == 0;
    if (nv == 0) return false;

    std::vector<int> seen(nv, 0);
    for (const auto& comp : c.components)
        for (int v : comp) {
            if (v < 0 || v >= nv || seen[v]) return false;
            seen[v] = 1;
        }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return false;

    if (c.state == Connectivity::Connected) {
        if (c.components.size() != 1) return false;
        if (static_cast<int>(c.spanning_tree.size()) != nv - 1) return false;
        for (auto [i, j] : c.spanning_tree)
            if (!g.has_edge(i, j)) return false;
        // Tree edges must actually connect everything.
        std::vector<int> root(nv);
        for (int v = 0; v < nv; ++v) root[v] = v;
        auto find = [&](int v) {
            while (root[v] != v) v = root[v] = root[root[v]];
            return v;
        };
        for (auto [i, j] : c.spanning_tree) root[find(i)] = find(j);
        for (int v = 1; v < nv; ++v)
            if (find(v) != find(0)) return false;
        return true;
    }

    if (c.components.size() < 2) return false;
    if (c.bipartition_first != c.components.front()) return false;
    std::vector<int> in_first(nv, 0);
    for (int v : c.bipartition_first) in_first[v] = 1;
    for (auto [i, j] : g.edges)
        if (in_first[i] != in_first[j]) return false;
    return true;
}

static void sort_edges(std::vector<std::pair<int, int>>& edges) {
    std::sort(edges.begin(), edges.end());
}

PrimeGraph graph_def51(const SquarefreeIdeal& J, const SquarefreeIdeal& I) {
    if (J.context_size() != I.context_size())
        throw InputError("ideals belong to different variable contexts");
    if (I.is_unit()) throw DomainError("the unit ideal cuts out no locus");

    PrimeGraph g{GraphKind::Def51, {}, {}, I.context_size(), J, I};
    for (MonomialPrime p : minimal_primes(J))
        if (!contained_in_prime(I, p)) g.vertices.push_back(p.vars);
    std::sort(g.vertices.begin(), g.vertices.end(), lex_less);

    int nv = static_cast<int>(g.vertices.size());
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j)
            if (!contained_in_prime(I, MonomialPrime{g.vertices[i] | g.vertices[j]}))
                g.edges.emplace_back(i, j);
    sort_edges(g.edges);
    return g;
}

int height_in_quotient(const SquarefreeIdeal& J, MonomialPrime P) {
    if (!contained_in_prime(J, P))
        throw DomainError("prime does not contain the quotient ideal");
    int best = kMaxVariables + 1;
    for (MonomialPrime r : minimal_primes(J))
        if (is_subset(r.vars, P.vars)) best = std::min(best, r.height());
    return P.height() - best;
}

PrimeGraph graph_def61(const SquarefreeIdeal& J) {
    if (J.is_unit()) throw DomainError("the unit ideal has no quotient");

    PrimeGraph g{GraphKind::Def61, {}, {}, J.context_size(), J, std::nullopt};
    int c = height(J);
    for (MonomialPrime p : top_components(J)) g.vertices.push_back(p.vars);
    std::sort(g.vertices.begin(), g.vertices.end(), lex_less);

    int nv = static_cast<int>(g.vertices.size());
    for (int i = 0; i < nv; ++i) {
        for (int j = i + 1; j < nv; ++j) {
            MonomialPrime join{g.vertices[i] | g.vertices[j]};
            bool by_height = height_in_quotient(J, join) == 1;
            bool by_count = join.height() == c + 1;
            if (by_height != by_count)
                throw InternalError(
                    "height-one edge rule disagrees with cardinality criterion");
            if (by_height) g.edges.emplace_back(i, j);
        }
    }
    sort_edges(g.edges);
    return g;
}

PrimeGraph graph_punctured(const SquarefreeIdeal& I) {
    if (I.is_unit()) throw DomainError("the unit ideal cuts out no locus");

    PrimeGraph g{GraphKind::Punctured, {}, {}, I.context_size(), std::nullopt, I};
    int n = I.context_size();
    for (MonomialPrime p : minimal_primes(I))
        if (p.height() < n) g.vertices.push_back(p.vars);
    std::sort(g.vertices.begin(), g.vertices.end(), lex_less);

    int nv = static_cast<int>(g.vertices.size());
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j)
            if (popcount(g.vertices[i] | g.vertices[j]) < n)
                g.edges.emplace_back(i, j);
    sort_edges(g.edges);
    return g;
}

bool SimplicialComplex::is_pure() const {
    for (VarSet f : facets)
        if (popcount(f) != popcount(facets.front())) return false;
    return true;
}

SimplicialComplex make_complex(const VariableContext& ctx,
                               std::vector<VarSet> facets) {
    if (facets.empty()) throw InputError("facet list must be nonempty");
    for (VarSet f : facets)
        if (!is_subset(f, ctx.full_set()))
            throw InputError("facet uses an out-of-range variable");
    // Keep only the maximal faces.
    std::sort(facets.begin(), facets.end(), [](VarSet a, VarSet b) {
        int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa > pb : a < b;
    });
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    std::vector<VarSet> kept;
    for (VarSet f : facets) {
        bool dominated = false;
        for (VarSet k : kept)
            if (is_subset(f, k)) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end(), lex_less);
    return SimplicialComplex{std::move(kept)};
}

SquarefreeIdeal stanley_reisner(const VariableContext& ctx,
                                const SimplicialComplex& complex) {
    VarSet all = ctx.full_set();
    std::vector<VarSet> complements;
    complements.reserve(complex.facets.size());
    for (VarSet f : complex.facets) complements.push_back(all & ~f);
    // A facet equal to the whole vertex set makes every set a face.
    for (VarSet c : complements)
        if (c == 0) return SquarefreeIdeal::zero(ctx.size());
    SquarefreeIdeal comp_ideal = make_ideal_raw(ctx.size(), complements);
    std::vector<VarSet> nonfaces;
    for (MonomialPrime t : minimal_primes(comp_ideal)) nonfaces.push_back(t.vars);
    return make_ideal_raw(ctx.size(), std::move(nonfaces));
}

PrimeGraph facet_ridge_graph(int n, const SimplicialComplex& complex) {
    PrimeGraph g{GraphKind::FacetRidge, {}, {}, n, std::nullopt, std::nullopt};
    int top = 0;
    for (VarSet f : complex.facets) top = std::max(top, popcount(f));
    for (VarSet f : complex.facets)
        if (popcount(f) == top) g.vertices.push_back(f);
    std::sort(g.vertices.begin(), g.vertices.end(), lex_less);

    int nv = static_cast<int>(g.vertices.size());
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j)
            if (popcount(g.vertices[i] & g.vertices[j]) == top - 1)
                g.edges.emplace_back(i, j);
    sort_edges(g.edges);
    return g;
}

}  // namespace specgraph
