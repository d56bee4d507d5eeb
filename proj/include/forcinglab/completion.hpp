#pragma once

#include <vector>

#include <forcinglab/poset.hpp>

namespace forcinglab {

/// The Boolean completion RO(P): regular-open downward-closed condition sets.
///
/// Elements are ConditionSets over the base poset. U^perp is the set of
/// conditions incompatible with every member of U, ro(U) = U^perp^perp, and U
/// is regular open when U = ro(U). Meet is intersection, complement is perp,
/// join is ro of the union.
///
/// The full element list is materialized only when the number of minimal
/// classes ("atoms") is at most 20; above that, elements are produced on
/// demand from generator sets via `generate`.
class RegularOpenAlgebra {
public:
    explicit RegularOpenAlgebra(PosetPtr base);

    const Poset& base() const { return *base_; }
    const PosetPtr& base_ptr() const { return base_; }

    ConditionSet perp(const ConditionSet& u) const;
    ConditionSet ro(const ConditionSet& u) const { return perp(perp(u)); }
    bool is_regular_open(const ConditionSet& u) const { return u == ro(u); }

    ConditionSet zero() const { return base_->empty_set(); }
    ConditionSet one() const { return base_->full_set(); }
    ConditionSet meet(const ConditionSet& a, const ConditionSet& b) const { return a & b; }
    ConditionSet join(const ConditionSet& a, const ConditionSet& b) const { return ro(a | b); }
    ConditionSet complement(const ConditionSet& a) const { return perp(a); }
    bool leq(const ConditionSet& a, const ConditionSet& b) const { return a.is_subset_of(b); }

    /// ro(down(p))
    const ConditionSet& embedding(ConditionIndex p) const { return embedding_[p]; }

    /// The regular-open element generated by an arbitrary condition set.
    ConditionSet generate(const ConditionSet& generators) const { return ro(downward_closure(*base_, generators)); }

    /// One representative per equivalence class of minimal conditions.
    const std::vector<ConditionIndex>& atoms() const { return atoms_; }

    bool materializable() const { return atoms_.size() <= 20; }
    /// All elements, ordered by the atom bitmask that generates them.
    /// Throws SizeError unless materializable().
    std::vector<ConditionSet> elements() const;
    /// Number of elements (2^atoms); throws SizeError above 2^62.
    std::size_t element_count() const;

private:
    PosetPtr base_;
    std::vector<ConditionSet> embedding_;
    std::vector<ConditionIndex> atoms_;
};

} // namespace forcinglab
