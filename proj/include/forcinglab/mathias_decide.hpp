#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <forcinglab/formula.hpp>
#include <forcinglab/zoo.hpp>

namespace forcinglab {

/// A set of reals determined by the bits 0..horizon-1 of the characteristic
/// function: r is in X when some accepted bitstring is a prefix of those bits.
struct ClopenPredicate {
    std::size_t horizon = 0;
    /// Sorted, duplicate-free bitstrings of length <= horizon; "" is the empty
    /// prefix and accepts every real.
    std::vector<std::string> accepted;

    /// Throws InputError on bad strings or horizon > 31.
    static ClopenPredicate make(std::size_t horizon, std::vector<std::string> accepted);
    bool holds(std::uint32_t real) const;

    /// `clopen t=<t>` then one accepted bitstring per line (ε for "").
    static ClopenPredicate parse(std::string_view text, std::string_view source = "clopen");
    std::string to_string() const;
};

/// Every predicate of horizon t: one per subset of {0,1}^t.
std::vector<ClopenPredicate> all_clopen_predicates(std::size_t horizon);

struct MathiasDecision {
    MathiasCondition q;
    bool positive = false;
};

/// Pure extension of p deciding "generic real ∈ X". Every envelope element at
/// or above the horizon is kept; among the horizon elements the largest set
/// (first in colex order) that keeps X constant on the reals through q stays.
/// Throws SizeError unless |envelope| >= |stem| + horizon, InputError when p is
/// not a condition over the universe.
MathiasDecision mathias_pure_decide(std::size_t universe, const MathiasCondition& p, const ClopenPredicate& X);

/// The reals through q: every r with stem ⊆ r ⊆ envelope, r nonempty.
std::vector<std::uint32_t> reals_through(const MathiasCondition& q);

/// X's value when it is constant on the reals through q.
std::optional<bool> decided_by_enumeration(const MathiasCondition& q, const ClopenPredicate& X);

/// {(ň, r) : r ∈ P, n ∈ stem r} for a poset of Mathias conditions; it
/// interprets to the stem of the minimal condition generating the filter.
Name mathias_real_name(const Poset& P);

/// "real ∈ X" as a disjunction over accepted strings of conjunctions of
/// (mem ǐ real) literals.
Formula clopen_formula(const ClopenPredicate& X, const Poset& P, Name real);

} // namespace forcinglab
