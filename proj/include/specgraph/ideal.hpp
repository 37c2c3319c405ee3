#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "specgraph/errors.hpp"

namespace specgraph {

/// A set of variable indices, one bit per variable. Hard cap at 64 variables.
using VarSet = std::uint64_t;

constexpr int kMaxVariables = 64;

inline VarSet var_bit(int i) { return VarSet{1} << i; }
inline int popcount(VarSet s) { return std::popcount(s); }
inline bool is_subset(VarSet a, VarSet b) { return (a & ~b) == 0; }

/// Indices of the set bits, ascending.
std::vector<int> indices_of(VarSet s);

/// Lexicographic order on the ascending index sequences: {x} < {x,y} < {y}.
/// Every sorted output in the library uses this order.
bool lex_less(VarSet a, VarSet b);

/// The ambient polynomial ring: an ordered list of distinct variable names.
class VariableContext {
public:
    static VariableContext make(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_.at(i); }

    /// Index of a name, or -1 if unknown.
    int index_of(const std::string& name) const;

    /// All variables set: the maximal ideal.
    VarSet full_set() const;

    bool operator==(const VariableContext&) const = default;

private:
    explicit VariableContext(std::vector<std::string> names)
        : names_(std::move(names)) {}
    std::vector<std::string> names_;
};

/// A prime generated by a subset of the variables; height = cardinality.
/// The empty subset is the zero prime of the ambient domain.
struct MonomialPrime {
    VarSet vars = 0;

    int height() const { return popcount(vars); }
    bool operator==(const MonomialPrime&) const = default;
};

/// A squarefree monomial ideal, stored as the antichain of its minimal
/// generator supports. The zero ideal has no generators; the unit ideal is a
/// distinguished value, never "generator = empty set".
class SquarefreeIdeal {
public:
    static SquarefreeIdeal zero(int n);
    static SquarefreeIdeal unit(int n);

    bool is_zero() const { return !unit_ && gens_.empty(); }
    bool is_unit() const { return unit_; }
    bool is_proper() const { return !unit_; }

    int context_size() const { return n_; }
    const std::vector<VarSet>& gens() const { return gens_; }

    bool operator==(const SquarefreeIdeal&) const = default;

private:
    SquarefreeIdeal(int n, std::vector<VarSet> gens, bool unit)
        : n_(n), gens_(std::move(gens)), unit_(unit) {}

    friend SquarefreeIdeal make_ideal(const VariableContext&,
                                      const std::vector<VarSet>&);
    friend SquarefreeIdeal make_ideal_raw(int, std::vector<VarSet>);

    int n_;
    std::vector<VarSet> gens_;  // sorted by lex_less, antichain
    bool unit_;
};

/// Remove duplicates and non-minimal elements, sort by lex_less.
std::vector<VarSet> minimalize(std::vector<VarSet> sets);

VariableContext make_context(const std::vector<std::string>& names);

/// Normal form from arbitrary supports. An empty support list gives the zero
/// ideal; any empty support makes the whole ideal the unit ideal.
SquarefreeIdeal make_ideal(const VariableContext& ctx,
                           const std::vector<VarSet>& supports);

/// Same normal form, context given only by its size. Used internally and by
/// callers that already validated the supports.
SquarefreeIdeal make_ideal_raw(int n, std::vector<VarSet> supports);

SquarefreeIdeal sum(const SquarefreeIdeal& a, const SquarefreeIdeal& b);
SquarefreeIdeal intersect(const SquarefreeIdeal& a, const SquarefreeIdeal& b);

/// The ideal generated by the prime's variables; the empty prime gives zero.
SquarefreeIdeal prime_to_ideal(int n, MonomialPrime p);

/// Intersection of primes-as-ideals; the empty family gives the unit ideal.
SquarefreeIdeal intersect_primes(int n, const std::vector<MonomialPrime>& ps);

/// I is contained in the prime P iff every generator support meets P.vars.
/// Zero ideal: always true. Unit ideal: always false.
bool contained_in_prime(const SquarefreeIdeal& I, MonomialPrime P);

}  // namespace specgraph
