#include "specgraph/decompose.hpp"

#include <algorithm>

namespace specgraph {

std::vector<MonomialPrime> minimal_primes(const SquarefreeIdeal& I) {
    if (I.is_unit())
        throw DomainError("minimal primes of the unit ideal are undefined");

    // Small edges first: they prune the partial-transversal antichain early.
    std::vector<VarSet> edges = I.gens();
    std::sort(edges.begin(), edges.end(), [](VarSet a, VarSet b) {
        int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa < pb : lex_less(a, b);
    });

    std::vector<VarSet> partial{0};
    for (VarSet e : edges) {
        std::vector<VarSet> next;
        for (VarSet t : partial) {
            if (t & e) {
                next.push_back(t);
                continue;
            }
            for (int v : indices_of(e)) next.push_back(t | var_bit(v));
        }
        partial = minimalize(std::move(next));
    }

    std::vector<MonomialPrime> out;
    out.reserve(partial.size());
    for (VarSet t : partial) out.push_back(MonomialPrime{t});
    return out;
}

Decomposition decompose(const SquarefreeIdeal& I) {
    std::vector<MonomialPrime> primes = minimal_primes(I);
    int c = popcount(primes.front().vars);
    for (const MonomialPrime& p : primes) c = std::min(c, p.height());
    return Decomposition{I, std::move(primes), c, I.context_size() - c};
}

int height(const SquarefreeIdeal& I) { return decompose(I).height_c; }

int dim_quotient(const SquarefreeIdeal& I) { return decompose(I).dim_d; }

std::vector<MonomialPrime> top_components(const SquarefreeIdeal& I) {
    Decomposition d = decompose(I);
    std::vector<MonomialPrime> out;
    for (const MonomialPrime& p : d.min_primes)
        if (p.height() == d.height_c) out.push_back(p);
    return out;
}

SquarefreeIdeal ideal_top(const SquarefreeIdeal& I) {
    return intersect_primes(I.context_size(), top_components(I));
}

SquarefreeIdeal lower_part(const SquarefreeIdeal& I) {
    Decomposition d = decompose(I);
    std::vector<MonomialPrime> lower;
    for (const MonomialPrime& p : d.min_primes)
        if (p.height() > d.height_c) lower.push_back(p);
    return intersect_primes(I.context_size(), lower);
}

ReductionAssertions reduction_assertions(const SquarefreeIdeal& I) {
    SquarefreeIdeal lower = lower_part(I);
    if (lower.is_unit())
        throw DomainError("no reduction needed: the ideal is unmixed");
    int c = height(I);
    bool lower_ok = height(lower) >= c + 1;
    bool sum_ok = height(sum(ideal_top(I), lower)) >= c + 2;
    return ReductionAssertions{lower_ok, sum_ok, c};
}

int ext_height_mod_prime(const SquarefreeIdeal& I, MonomialPrime p) {
    if (I.is_unit()) throw DomainError("unit ideal has no image height");
    std::vector<VarSet> survivors;
    for (VarSet g : I.gens())
        if ((g & p.vars) == 0) survivors.push_back(g);
    if (survivors.empty()) return 0;
    return height(make_ideal_raw(I.context_size(), std::move(survivors)));
}

SquarefreeIdeal u_ideal(const SquarefreeIdeal& J, const SquarefreeIdeal& I) {
    if (J.context_size() != I.context_size())
        throw InputError("ideals belong to different variable contexts");
    int n = I.context_size();
    std::vector<MonomialPrime> kept;
    for (MonomialPrime p : minimal_primes(J)) {
        SquarefreeIdeal s = sum(I, prime_to_ideal(n, p));
        if (!s.is_unit() && dim_quotient(s) > 0) kept.push_back(p);
    }
    return intersect_primes(n, kept);
}

}  // namespace specgraph
