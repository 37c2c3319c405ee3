#include "specgraph/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace specgraph::oracle {

namespace {

void check_guard(int n) {
    if (n > kOracleMaxVariables)
        throw CapacityError("oracle cost guard: n = " + std::to_string(n) +
                            " exceeds " + std::to_string(kOracleMaxVariables));
}

}  // namespace

std::vector<MonomialPrime> oracle_minimal_primes(const SquarefreeIdeal& I) {
    if (I.is_unit())
        throw DomainError("minimal primes of the unit ideal are undefined");
    int n = I.context_size();
    check_guard(n);

    std::vector<VarSet> hits;
    VarSet limit = VarSet{1} << n;
    for (VarSet s = 0; s < limit; ++s)
        if (contained_in_prime(I, MonomialPrime{s})) hits.push_back(s);

    std::vector<MonomialPrime> out;
    for (VarSet s : hits) {
        bool minimal = true;
        for (VarSet t : hits)
            if (t != s && is_subset(t, s)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(MonomialPrime{s});
    }
    std::sort(out.begin(), out.end(),
              [](MonomialPrime a, MonomialPrime b) { return lex_less(a.vars, b.vars); });
    return out;
}

bool oracle_edge_def51(const SquarefreeIdeal& J, const SquarefreeIdeal& I,
                       MonomialPrime p, MonomialPrime q) {
    if (p == q) throw DomainError("edge test requires two distinct vertices");
    int n = I.context_size();
    check_guard(n);
    (void)J;  // p, q contain J already; so does every superset.

    VarSet base = p.vars | q.vars;
    VarSet rest = ((n == kMaxVariables ? ~VarSet{0} : (VarSet{1} << n) - 1)) & ~base;
    // Enumerate supersets of base as base | (subset of rest).
    VarSet sub = 0;
    while (true) {
        if (!contained_in_prime(I, MonomialPrime{base | sub})) return true;
        if (sub == rest) break;
        sub = (sub - rest) & rest;  // next subset of rest
    }
    return false;
}

int oracle_height_in_quotient(const SquarefreeIdeal& J, MonomialPrime P) {
    if (!contained_in_prime(J, P))
        throw DomainError("prime does not contain the quotient ideal");
    check_guard(J.context_size());

    // Longest-chain DP over the subsets of P, bottoms = minimal primes of J.
    std::vector<int> order;  // subsets of P, by popcount
    std::vector<VarSet> subs;
    VarSet sub = 0;
    while (true) {
        subs.push_back(sub);
        if (sub == P.vars) break;
        sub = (sub - P.vars) & P.vars;
    }
    std::sort(subs.begin(), subs.end(),
              [](VarSet a, VarSet b) { return popcount(a) < popcount(b); });

    auto is_min_prime_of_J = [&](VarSet s) {
        if (!contained_in_prime(J, MonomialPrime{s})) return false;
        for (int v : indices_of(s))
            if (contained_in_prime(J, MonomialPrime{s & ~var_bit(v)})) return false;
        return true;
    };

    std::vector<int> longest(VarSet{1} << popcount(P.vars), -1);
    auto rank = [&](VarSet s) {
        // compress s (a subset of P) into a dense index
        VarSet r = 0;
        int bit = 0;
        for (int v : indices_of(P.vars)) {
            if (s & var_bit(v)) r |= VarSet{1} << bit;
            ++bit;
        }
        return static_cast<std::size_t>(r);
    };

    int answer = -1;
    for (VarSet s : subs) {
        int best = is_min_prime_of_J(s) ? 0 : -1;
        for (int v : indices_of(s)) {
            int prev = longest[rank(s & ~var_bit(v))];
            if (prev >= 0) best = std::max(best, prev + 1);
        }
        longest[rank(s)] = best;
        if (s == P.vars) answer = best;
    }
    return answer;
}

int oracle_punctured_components(const SquarefreeIdeal& I) {
    if (I.is_unit()) throw DomainError("the unit ideal cuts out no locus");
    int n = I.context_size();
    check_guard(n);

    VarSet full = (n == kMaxVariables) ? ~VarSet{0} : (VarSet{1} << n) - 1;
    VarSet limit = VarSet{1} << n;
    std::vector<char> in_locus(static_cast<std::size_t>(limit), 0);
    for (VarSet s = 0; s < limit; ++s)
        if (s != full && contained_in_prime(I, MonomialPrime{s})) in_locus[s] = 1;

    std::vector<VarSet> root(static_cast<std::size_t>(limit));
    std::iota(root.begin(), root.end(), VarSet{0});
    auto find = [&](VarSet v) {
        while (root[v] != v) v = root[v] = root[root[v]];
        return v;
    };

    // Comparability is generated by one-variable steps inside the locus.
    for (VarSet s = 0; s < limit; ++s) {
        if (!in_locus[s]) continue;
        for (int v = 0; v < n; ++v) {
            VarSet t = s | var_bit(v);
            if (t != s && in_locus[t]) root[find(s)] = find(t);
        }
    }

    bool any = false;
    std::vector<VarSet> reps;
    for (VarSet s = 0; s < limit; ++s) {
        if (!in_locus[s]) continue;
        any = true;
        VarSet r = find(s);
        if (std::find(reps.begin(), reps.end(), r) == reps.end()) reps.push_back(r);
    }
    return any ? static_cast<int>(reps.size()) : -1;
}

}  // namespace specgraph::oracle
