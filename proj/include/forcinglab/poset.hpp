#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace forcinglab {

/// Malformed input: unknown identifiers, broken files, violated preconditions.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A construction would exceed the configured size cap.
class SizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using ConditionIndex = std::size_t;
using ConditionSet = boost::dynamic_bitset<std::uint64_t>;

/// Maximum number of materialized conditions. Reads FORCINGLAB_CAP, default 16384.
std::size_t size_cap();

/// Throws SizeError when `count` exceeds size_cap().
void check_cap(std::size_t count, std::string_view what);

bool valid_identifier(std::string_view id);

/// Finite forcing: a preorder with a greatest element.
///
/// Conditions are opaque string identifiers. Internally they are indexed in
/// lexicographic order of the identifiers, so "least index" and
/// "lexicographically least identifier" coincide. The order is stored as
/// bitset rows for both directions together with the compatibility relation.
class Poset {
public:
    /// Builds from explicit `lower <= upper` pairs; the reflexive-transitive
    /// closure is taken. Throws InputError on unknown ids or when `top` is not
    /// greatest after closure.
    static Poset from_relation(std::string name, std::vector<std::string> ids, const std::string& top,
        const std::vector<std::pair<std::string, std::string>>& le);

    /// Builds from an order predicate over positions in `ids` (as given, not
    /// sorted). The predicate should already be reflexive and transitive;
    /// `close` additionally applies the transitive closure.
    static Poset from_predicate(std::string name, std::vector<std::string> ids, const std::string& top,
        const std::function<bool(std::size_t lower, std::size_t upper)>& leq, bool close = false);

    const std::string& name() const { return name_; }
    std::size_t size() const { return ids_.size(); }
    const std::string& id(ConditionIndex i) const { return ids_.at(i); }
    const std::vector<std::string>& ids() const { return ids_; }
    ConditionIndex top() const { return top_; }

    std::optional<ConditionIndex> find(std::string_view id) const;
    /// Throws InputError for unknown identifiers.
    ConditionIndex index(std::string_view id) const;

    bool leq(ConditionIndex p, ConditionIndex q) const { return down_[q].test(p); }
    bool leq(std::string_view p, std::string_view q) const { return leq(index(p), index(q)); }
    bool compatible(ConditionIndex p, ConditionIndex q) const { return compat_[p].test(q); }
    bool compatible(std::string_view p, std::string_view q) const { return compatible(index(p), index(q)); }

    /// {q : q <= p}
    const ConditionSet& down(ConditionIndex p) const { return down_[p]; }
    /// {q : p <= q}
    const ConditionSet& up(ConditionIndex p) const { return up_[p]; }
    /// {q : q compatible with p}
    const ConditionSet& compatible_with(ConditionIndex p) const { return compat_[p]; }

    /// Minimal conditions: every extension is equivalent to them.
    const ConditionSet& minimal() const { return minimal_; }
    std::vector<ConditionIndex> minimal_below(ConditionIndex p) const;

    ConditionSet empty_set() const { return ConditionSet(size()); }
    ConditionSet full_set() const { return ~ConditionSet(size()); }
    ConditionSet set_of(const std::vector<std::string>& ids) const;
    std::vector<std::string> ids_of(const ConditionSet& s) const;

    /// The poset restricted to `keep`, with `top` as its greatest element.
    Poset restrict(const ConditionSet& keep, ConditionIndex new_top, std::string new_name) const;

private:
    Poset() = default;
    void finish();

    std::string name_;
    std::vector<std::string> ids_;
    ConditionIndex top_ = 0;
    std::vector<ConditionSet> down_;
    std::vector<ConditionSet> up_;
    std::vector<ConditionSet> compat_;
    ConditionSet minimal_;
};

using PosetPtr = std::shared_ptr<const Poset>;

std::vector<ConditionIndex> members(const ConditionSet& s);

/// Upward closure of a condition set.
ConditionSet upward_closure(const Poset& P, const ConditionSet& s);
/// Downward closure of a condition set.
ConditionSet downward_closure(const Poset& P, const ConditionSet& s);

bool is_filter(const Poset& P, const ConditionSet& s);
bool is_dense(const Poset& P, const ConditionSet& d);
bool is_exhaustive(const Poset& P, const ConditionSet& e);
bool is_antichain(const Poset& P, const ConditionSet& a);
bool is_maximal_antichain(const Poset& P, const ConditionSet& a);
/// Separative: whenever p is not below q, some r <= p is incompatible with q.
bool is_separative(const Poset& P);

/// Greedily extends the antichain `a` inside the dense set `d`, trying
/// candidates in identifier order. Throws InputError if `a` is not an
/// antichain contained in `d`, or if `d` is not dense.
ConditionSet extend_to_maximal_antichain(const Poset& P, const ConditionSet& a, const ConditionSet& d);

struct SeparativeQuotient {
    Poset quotient;
    /// Condition index of P -> class index in `quotient`.
    std::vector<ConditionIndex> projection;
    bool was_separative = false;
};

/// Quotient by equality of compatibility sets, ordered by containment of
/// compatibility sets. Each class is named after its least member.
SeparativeQuotient separative_quotient(const Poset& P);

enum class FamilyKind { unrestricted, dense, exhaustive, antichain };

std::string_view to_string(FamilyKind k);

struct ConditionFamily {
    std::string name;
    ConditionSet members;
    FamilyKind kind = FamilyKind::unrestricted;
};

/// Throws InputError when the family's declared kind does not hold.
void check_family(const Poset& P, const ConditionFamily& f);

} // namespace forcinglab
