#include "specgraph/ideal.hpp"

#include <algorithm>
#include <set>

namespace specgraph {

std::vector<int> indices_of(VarSet s) {
    std::vector<int> out;
    while (s) {
        int i = std::countr_zero(s);
        out.push_back(i);
        s &= s - 1;
    }
    return out;
}

bool lex_less(VarSet a, VarSet b) {
    if (a == b) return false;
    VarSet d = a ^ b;
    VarSet low = d & (~d + 1);  // lowest differing index; bits below it agree
    if (a & low) {
        // a has the smaller next index; a < b unless b is a proper prefix.
        VarSet b_high = b & ~(low | (low - 1));
        return b_high != 0;
    }
    VarSet a_high = a & ~(low | (low - 1));
    return a_high == 0;
}

VariableContext VariableContext::make(std::vector<std::string> names) {
    if (names.empty()) throw InputError("variable list must be nonempty");
    if (static_cast<int>(names.size()) > kMaxVariables)
        throw CapacityError("at most 64 variables supported, got " +
                            std::to_string(names.size()));
    std::set<std::string> seen;
    for (const auto& name : names) {
        if (name.empty()) throw InputError("empty variable name");
        if (!seen.insert(name).second)
            throw InputError("duplicate variable name: " + name);
    }
    return VariableContext(std::move(names));
}

int VariableContext::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (names_[i] == name) return i;
    return -1;
}

VarSet VariableContext::full_set() const {
    return size() == kMaxVariables ? ~VarSet{0} : var_bit(size()) - 1;
}

VariableContext make_context(const std::vector<std::string>& names) {
    return VariableContext::make(names);
}

std::vector<VarSet> minimalize(std::vector<VarSet> sets) {
    std::sort(sets.begin(), sets.end(), [](VarSet a, VarSet b) {
        int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VarSet> kept;
    for (VarSet s : sets) {
        bool dominated = false;
        for (VarSet k : kept) {
            if (is_subset(k, s)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end(), lex_less);
    return kept;
}

SquarefreeIdeal SquarefreeIdeal::zero(int n) {
    return SquarefreeIdeal(n, {}, false);
}

SquarefreeIdeal SquarefreeIdeal::unit(int n) {
    return SquarefreeIdeal(n, {}, true);
}

SquarefreeIdeal make_ideal_raw(int n, std::vector<VarSet> supports) {
    for (VarSet s : supports)
        if (s == 0) return SquarefreeIdeal::unit(n);
    return SquarefreeIdeal(n, minimalize(std::move(supports)), false);
}

SquarefreeIdeal make_ideal(const VariableContext& ctx,
                           const std::vector<VarSet>& supports) {
    for (VarSet s : supports)
        if (!is_subset(s, ctx.full_set()))
            throw InputError("generator support uses an out-of-range variable");
    return make_ideal_raw(ctx.size(), supports);
}

static void check_same_context(const SquarefreeIdeal& a,
                               const SquarefreeIdeal& b) {
    if (a.context_size() != b.context_size())
        throw InputError("ideals belong to different variable contexts");
}

SquarefreeIdeal sum(const SquarefreeIdeal& a, const SquarefreeIdeal& b) {
    check_same_context(a, b);
    if (a.is_unit() || b.is_unit()) return SquarefreeIdeal::unit(a.context_size());
    std::vector<VarSet> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return make_ideal_raw(a.context_size(), std::move(gens));
}

SquarefreeIdeal intersect(const SquarefreeIdeal& a, const SquarefreeIdeal& b) {
    check_same_context(a, b);
    if (a.is_unit()) return b;
    if (b.is_unit()) return a;
    if (a.is_zero() || b.is_zero()) return SquarefreeIdeal::zero(a.context_size());
    std::vector<VarSet> gens;
    gens.reserve(a.gens().size() * b.gens().size());
    for (VarSet g : a.gens())
        for (VarSet h : b.gens()) gens.push_back(g | h);
    return make_ideal_raw(a.context_size(), std::move(gens));
}

SquarefreeIdeal prime_to_ideal(int n, MonomialPrime p) {
    std::vector<VarSet> gens;
    for (int i : indices_of(p.vars)) gens.push_back(var_bit(i));
    return make_ideal_raw(n, std::move(gens));
}

SquarefreeIdeal intersect_primes(int n, const std::vector<MonomialPrime>& ps) {
    SquarefreeIdeal acc = SquarefreeIdeal::unit(n);
    for (MonomialPrime p : ps) acc = intersect(acc, prime_to_ideal(n, p));
    return acc;
}

bool contained_in_prime(const SquarefreeIdeal& I, MonomialPrime P) {
    if (I.is_unit()) return false;
    for (VarSet g : I.gens())
        if ((g & P.vars) == 0) return false;
    return true;
}

}  // namespace specgraph
