#pragma once

#include <map>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include <forcinglab/completion.hpp>
#include <forcinglab/formula.hpp>
#include <forcinglab/names.hpp>

namespace forcinglab {

enum class Decision { forces, forces_negation, undecided };

std::string_view to_string(Decision d);

/// Variable bindings during evaluation, innermost last.
template <typename Value>
using Bindings = std::vector<std::pair<std::string, Value>>;

/// The forcing relation over one poset, computed as condition sets.
///
/// Every clause is evaluated for all conditions at once. With
/// not_below(S) = {p : no q <= p lies in S}:
///   p forces x in y  iff  p in not_below(not_below(W)),
///       W = union over (z, q) in y of down(q) ∩ [x = z];
///   p forces x = y   iff  p in not_below(union over z hereditarily in x or y
///       of [z in x] xor [z in y]);
///   not f = not_below(f); or = not_below(not f ∩ not g);
///   forall v in w: for each (z, r) in w, p in not_below(down(r) \ [f(z)]);
///   exists v in w: not_below(not_below(union over (z, r) of down(r) ∩ [f(z)])).
///
/// Atomic results are memoized for the lifetime of the context, so a context
/// must not be shared between threads.
class ForcingContext {
public:
    explicit ForcingContext(PosetPtr P, NameDiscipline discipline = NameDiscipline::relaxed);

    const Poset& poset() const { return *P_; }
    const PosetPtr& poset_ptr() const { return P_; }

    ConditionSet not_below(const ConditionSet& s) const;

    const ConditionSet& mem_set(Name x, Name y);
    const ConditionSet& eq_set(Name x, Name y);

    /// {p : p forces f}. Names in f are validated on first use.
    ConditionSet forcing_set(const Formula& f);
    bool forces(ConditionIndex p, const Formula& f) { return forcing_set(f).test(p); }
    Decision decides(ConditionIndex p, const Formula& f);

    /// For each minimal m <= p: (m, y interpreted by the filter above m), with
    /// m forcing y = z-check verified. Never empty.
    std::vector<std::pair<ConditionIndex, HFSet>> decide_name_value(ConditionIndex p, Name y);

    /// ro({p : p forces f}) in the given completion of the same poset.
    ConditionSet truth_value(const RegularOpenAlgebra& A, const Formula& f);

    /// Throws InputError when n breaks the discipline.
    void require_valid(Name n);

private:
    ConditionSet eval(const Formula& f, Bindings<Name>& env);
    Name resolve(const Term& t, const Bindings<Name>& env);

    PosetPtr P_;
    NameDiscipline discipline_;
    std::unordered_map<std::uint64_t, ConditionSet> mem_;
    std::unordered_map<std::uint64_t, ConditionSet> eq_;
    std::set<std::uint32_t> validated_;
    /// Verified values of a name under up(m), keyed by (name, m).
    std::map<std::pair<std::uint32_t, ConditionIndex>, HFSet> values_;
};

} // namespace forcinglab
