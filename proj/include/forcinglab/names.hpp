#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <forcinglab/hf.hpp>
#include <forcinglab/poset.hpp>
#include <forcinglab/sexpr.hpp>

namespace forcinglab {

struct NameEntry;

/// A P-name: a finite set of (child name, condition) pairs.
///
/// Names are interned like HFSet: structurally equal names share a handle.
/// Conditions are stored as indices, so a name is only meaningful together
/// with the poset it was built for.
class Name {
public:
    /// The empty name.
    Name() = default;

    static Name make(std::vector<NameEntry> entries);

    const std::vector<NameEntry>& entries() const;
    bool empty() const { return handle_ == 0; }
    /// 0 for the empty name, else 1 + max rank over entry children.
    std::size_t rank() const;
    /// Proper hereditary descendants (children, their children, ...), sorted.
    const std::vector<Name>& descendants() const;

    std::uint32_t handle() const { return handle_; }
    friend bool operator==(Name a, Name b) { return a.handle_ == b.handle_; }
    friend auto operator<=>(Name a, Name b) { return a.handle_ <=> b.handle_; }

private:
    explicit Name(std::uint32_t h) : handle_(h) {}
    std::uint32_t handle_ = 0;
};

struct NameEntry {
    Name child;
    ConditionIndex cond = 0;

    friend bool operator==(const NameEntry&, const NameEntry&) = default;
    friend auto operator<=>(const NameEntry&, const NameEntry&) = default;
};

/// x-check: {(y-check, top) : y in x}
Name check_name(HFSet x, const Poset& P);

/// The HF set x with n = check_name(x, P), if n is a check name for P.
std::optional<HFSet> check_value(Name n, const Poset& P);

/// HF code of condition i: the von Neumann natural i (indices follow
/// lexicographic identifier order).
HFSet condition_code(ConditionIndex i);

/// G-dot: {(code(q)-check, q) : q in P}
Name generic_name(const Poset& P);

/// Inverse of the coding on a set of codes; throws InputError when an element
/// is not the code of a condition of P.
ConditionSet decode_conditions(HFSet codes, const Poset& P);

/// Strict: for each entry (y, q), every condition hereditarily inside y is
/// <= q. Relaxed: the same, except that check-name subterms are exempt.
enum class NameDiscipline { relaxed, strict };

struct NameViolation {
    /// Entry indices from the root to the offending entry.
    std::vector<std::size_t> path;
    ConditionIndex condition = 0;
    ConditionIndex bound = 0;

    std::size_t depth() const { return path.size(); }
    std::string describe(const Poset& P) const;
};

/// Reports the first violation in depth-first entry order, or nullopt.
/// Conditions outside P are reported with bound == condition.
std::optional<NameViolation> validate_name(Name n, const Poset& P, NameDiscipline d = NameDiscipline::relaxed);

/// {interpret(y, G) : (y, p) in n, p in G}. Throws InputError if G is not a
/// filter of P.
HFSet interpret(Name n, const Poset& P, const ConditionSet& G);

/// As interpret, without the filter check.
HFSet interpret_unchecked(Name n, const ConditionSet& G);

/// Bound names, in definition order.
struct NameEnv {
    std::vector<std::pair<std::string, Name>> bindings;

    const Name* find(std::string_view id) const;
    void bind(std::string id, Name n);
};

/// Parses `(name ((pair <expr-or-ref> <cond-id>) ...))`, `(check <hf>)`,
/// `(gen)` or an identifier bound in `env`.
Name parse_name(const SExpr& e, const Poset& P, const NameEnv& env);

/// A names file: a sequence of `(def <id> <name-expr>)`. References must be
/// to earlier definitions. Names are validated under `d`.
NameEnv parse_names(std::string_view text, const Poset& P, std::string_view source = "<names>",
    NameDiscipline d = NameDiscipline::relaxed);

/// Prints in the syntax accepted by parse_name; check names print as `(check ...)`.
std::string format_name(Name n, const Poset& P);

std::string format_names(const NameEnv& env, const Poset& P);

} // namespace forcinglab
