#pragma once

#include <optional>
#include <vector>

#include <forcinglab/poset.hpp>

namespace forcinglab {

struct GenericRequest {
    ConditionIndex start = 0;
    std::vector<ConditionFamily> families;
};

/// Descends from `start` through the families in order, each time taking the
/// least extension that lies in the family or is incompatible with all of
/// it, and returns the upward closure of the last condition.
ConditionSet build_generic(const Poset& P, const GenericRequest& req);

struct GenericityReport {
    bool generic = true;
    /// Index into the checked families of the first one G fails.
    std::optional<std::size_t> failing_family;
};

/// G is generic for E when some member of G lies in E or is incompatible
/// with every element of E. Throws InputError if G is not a filter.
GenericityReport is_generic_for(const Poset& P, const ConditionSet& G, const std::vector<ConditionFamily>& families);

/// All maximal filters: the distinct sets up(m) for minimal m.
std::vector<ConditionSet> enumerate_ultrafilters(const Poset& P);

} // namespace forcinglab
