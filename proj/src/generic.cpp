#include <forcinglab/generic.hpp>

namespace forcinglab {

namespace {

/// Conditions incompatible with every member of e.
ConditionSet incompatible_with_all(const Poset& P, const ConditionSet& e)
{
    ConditionSet touched = P.empty_set();
    for (auto x = e.find_first(); x != ConditionSet::npos; x = e.find_next(x))
        touched |= P.compatible_with(x);
    return ~touched;
}

} // namespace

ConditionSet build_generic(const Poset& P, const GenericRequest& req)
{
    if (req.start >= P.size())
        throw InputError("start condition is not in " + P.name());
    ConditionIndex current = req.start;
    for (const auto& f : req.families) {
        if (f.members.size() != P.size())
            throw InputError("family '" + f.name + "' belongs to another poset");
        const ConditionSet meets = f.members | incompatible_with_all(P, f.members);
        const auto options = P.down(current) & meets;
        // meets is dense, so options is never empty.
        current = options.find_first();
    }
    return P.up(current);
}

GenericityReport is_generic_for(const Poset& P, const ConditionSet& G, const std::vector<ConditionFamily>& families)
{
    if (G.size() != P.size() || !is_filter(P, G))
        throw InputError("genericity is checked for filters only");
    for (std::size_t i = 0; i < families.size(); ++i) {
        const auto& e = families[i].members;
        if (G.intersects(e))
            continue;
        if (G.intersects(incompatible_with_all(P, e)))
            continue;
        return {false, i};
    }
    return {};
}

std::vector<ConditionSet> enumerate_ultrafilters(const Poset& P)
{
    std::vector<ConditionSet> out;
    ConditionSet seen = P.empty_set();
    const auto& mins = P.minimal();
    for (auto m = mins.find_first(); m != ConditionSet::npos; m = mins.find_next(m)) {
        if (seen.test(m))
            continue;
        seen |= P.up(m) & P.down(m);
        out.push_back(P.up(m));
        check_cap(out.size(), "ultrafilters of " + P.name());
    }
    return out;
}

} // namespace forcinglab
