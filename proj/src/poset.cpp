#include <forcinglab/poset.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>

namespace forcinglab {

std::size_t size_cap()
{
    if (const char* env = std::getenv("FORCINGLAB_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return 16384;
}

void check_cap(std::size_t count, std::string_view what)
{
    if (count > size_cap())
        throw SizeError(std::string(what) + ": " + std::to_string(count) + " conditions exceeds cap of "
            + std::to_string(size_cap()) + " (set FORCINGLAB_CAP to raise)");
}

bool valid_identifier(std::string_view id)
{
    if (id.empty())
        return false;
    return std::all_of(id.begin(), id.end(), [](char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '.'
            || c == ':' || c == '+' || c == '-';
    });
}

std::vector<ConditionIndex> members(const ConditionSet& s)
{
    std::vector<ConditionIndex> out;
    out.reserve(s.count());
    for (auto i = s.find_first(); i != ConditionSet::npos; i = s.find_next(i))
        out.push_back(i);
    return out;
}

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> ids, std::string_view what)
{
    if (ids.empty())
        throw InputError(std::string(what) + ": poset has no conditions");
    std::sort(ids.begin(), ids.end());
    if (auto dup = std::adjacent_find(ids.begin(), ids.end()); dup != ids.end())
        throw InputError(std::string(what) + ": duplicate condition '" + *dup + "'");
    return ids;
}

} // namespace

Poset Poset::from_relation(std::string name, std::vector<std::string> ids, const std::string& top,
    const std::vector<std::pair<std::string, std::string>>& le)
{
    Poset P;
    P.name_ = std::move(name);
    P.ids_ = sorted_unique(std::move(ids), P.name_);
    check_cap(P.ids_.size(), P.name_);
    const auto n = P.ids_.size();
    P.top_ = P.index(top);
    P.down_.assign(n, ConditionSet(n));
    for (std::size_t i = 0; i < n; ++i)
        P.down_[i].set(i);
    for (const auto& [lo, hi] : le)
        P.down_[P.index(hi)].set(P.index(lo));

    // Warshall over bitset rows: if k <= q then everything below k is below q.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t q = 0; q < n; ++q)
            if (q != k && P.down_[q].test(k))
                P.down_[q] |= P.down_[k];

    if (!P.down_[P.top_].all())
        throw InputError(P.name_ + ": '" + top + "' is not a greatest element");
    P.finish();
    return P;
}

Poset Poset::from_predicate(std::string name, std::vector<std::string> ids, const std::string& top,
    const std::function<bool(std::size_t, std::size_t)>& leq, bool close)
{
    Poset P;
    P.name_ = std::move(name);
    check_cap(ids.size(), P.name_);
    const auto n = ids.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ids[a] < ids[b]; });
    P.ids_.reserve(n);
    for (auto i : order)
        P.ids_.push_back(ids[i]);
    P.ids_ = sorted_unique(std::move(P.ids_), P.name_);
    P.top_ = P.index(top);
    P.down_.assign(n, ConditionSet(n));
    for (std::size_t q = 0; q < n; ++q)
        for (std::size_t p = 0; p < n; ++p)
            if (p == q || leq(order[p], order[q]))
                P.down_[q].set(p);
    if (close)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t q = 0; q < n; ++q)
                if (q != k && P.down_[q].test(k))
                    P.down_[q] |= P.down_[k];
    if (!P.down_[P.top_].all())
        throw InputError(P.name_ + ": '" + top + "' is not a greatest element");
    P.finish();
    return P;
}

void Poset::finish()
{
    const auto n = ids_.size();
    up_.assign(n, ConditionSet(n));
    for (std::size_t q = 0; q < n; ++q)
        for (auto p = down_[q].find_first(); p != ConditionSet::npos; p = down_[q].find_next(p))
            up_[p].set(q);

    minimal_ = ConditionSet(n);
    for (std::size_t m = 0; m < n; ++m)
        if (down_[m].is_subset_of(up_[m]))
            minimal_.set(m);

    // p, q compatible iff some minimal condition lies below both.
    compat_.assign(n, ConditionSet(n));
    for (std::size_t p = 0; p < n; ++p) {
        ConditionSet below = down_[p] & minimal_;
        for (auto m = below.find_first(); m != ConditionSet::npos; m = below.find_next(m))
            compat_[p] |= up_[m];
    }
}

std::optional<ConditionIndex> Poset::find(std::string_view id) const
{
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id)
        return std::nullopt;
    return static_cast<ConditionIndex>(it - ids_.begin());
}

ConditionIndex Poset::index(std::string_view id) const
{
    if (auto i = find(id))
        return *i;
    throw InputError(name_ + ": unknown condition '" + std::string(id) + "'");
}

std::vector<ConditionIndex> Poset::minimal_below(ConditionIndex p) const
{
    return members(down_[p] & minimal_);
}

ConditionSet Poset::set_of(const std::vector<std::string>& ids) const
{
    ConditionSet s(size());
    for (const auto& id : ids)
        s.set(index(id));
    return s;
}

std::vector<std::string> Poset::ids_of(const ConditionSet& s) const
{
    std::vector<std::string> out;
    for (auto i = s.find_first(); i != ConditionSet::npos; i = s.find_next(i))
        out.push_back(ids_[i]);
    return out;
}

Poset Poset::restrict(const ConditionSet& keep, ConditionIndex new_top, std::string new_name) const
{
    if (!keep.test(new_top))
        throw InputError(new_name + ": restriction must keep its top");
    Poset P;
    P.name_ = std::move(new_name);
    auto old = members(keep);
    for (auto i : old)
        P.ids_.push_back(ids_[i]);
    const auto n = old.size();
    P.top_ = static_cast<ConditionIndex>(std::lower_bound(old.begin(), old.end(), new_top) - old.begin());
    P.down_.assign(n, ConditionSet(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (down_[old[a]].test(old[b]))
                P.down_[a].set(b);
    if (!P.down_[P.top_].all())
        throw InputError(P.name_ + ": restricted top is not greatest");
    P.finish();
    return P;
}

ConditionSet upward_closure(const Poset& P, const ConditionSet& s)
{
    ConditionSet out(P.size());
    for (auto i = s.find_first(); i != ConditionSet::npos; i = s.find_next(i))
        out |= P.up(i);
    return out;
}

ConditionSet downward_closure(const Poset& P, const ConditionSet& s)
{
    ConditionSet out(P.size());
    for (auto i = s.find_first(); i != ConditionSet::npos; i = s.find_next(i))
        out |= P.down(i);
    return out;
}

bool is_filter(const Poset& P, const ConditionSet& s)
{
    if (s.size() != P.size() || s.none())
        return false;
    auto ms = members(s);
    for (auto q : ms)
        if (!P.up(q).is_subset_of(s))
            return false;
    for (std::size_t a = 0; a < ms.size(); ++a)
        for (std::size_t b = a + 1; b < ms.size(); ++b)
            if (!(P.down(ms[a]) & P.down(ms[b])).intersects(s))
                return false;
    return true;
}

bool is_dense(const Poset& P, const ConditionSet& d)
{
    for (std::size_t p = 0; p < P.size(); ++p)
        if (!P.down(p).intersects(d))
            return false;
    return true;
}

bool is_exhaustive(const Poset& P, const ConditionSet& e)
{
    for (std::size_t p = 0; p < P.size(); ++p)
        if (!P.compatible_with(p).intersects(e))
            return false;
    return true;
}

bool is_antichain(const Poset& P, const ConditionSet& a)
{
    for (auto p = a.find_first(); p != ConditionSet::npos; p = a.find_next(p)) {
        ConditionSet others = a;
        others.reset(p);
        if (P.compatible_with(p).intersects(others))
            return false;
    }
    return true;
}

bool is_maximal_antichain(const Poset& P, const ConditionSet& a)
{
    return is_antichain(P, a) && is_exhaustive(P, a);
}

bool is_separative(const Poset& P)
{
    for (std::size_t p = 0; p < P.size(); ++p)
        for (std::size_t q = 0; q < P.size(); ++q) {
            if (P.leq(p, q))
                continue;
            ConditionSet witnesses = P.down(p);
            witnesses -= P.compatible_with(q);
            if (witnesses.none())
                return false;
        }
    return true;
}

ConditionSet extend_to_maximal_antichain(const Poset& P, const ConditionSet& a, const ConditionSet& d)
{
    if (!is_antichain(P, a))
        throw InputError("extend_to_maximal_antichain: seed is not an antichain");
    if (!a.is_subset_of(d))
        throw InputError("extend_to_maximal_antichain: seed is not contained in the dense set");
    if (!is_dense(P, d))
        throw InputError("extend_to_maximal_antichain: family is not dense");
    ConditionSet out = a;
    ConditionSet blocked(P.size());
    for (auto p = out.find_first(); p != ConditionSet::npos; p = out.find_next(p))
        blocked |= P.compatible_with(p);
    for (auto c = d.find_first(); c != ConditionSet::npos; c = d.find_next(c)) {
        if (blocked.test(c))
            continue;
        out.set(c);
        blocked |= P.compatible_with(c);
    }
    return out;
}

SeparativeQuotient separative_quotient(const Poset& P)
{
    const auto n = P.size();
    std::map<ConditionSet, ConditionIndex> class_of_set;
    std::vector<ConditionIndex> representative;
    std::vector<ConditionIndex> raw_class(n);
    for (std::size_t p = 0; p < n; ++p) {
        auto [it, fresh] = class_of_set.try_emplace(P.compatible_with(p), representative.size());
        if (fresh)
            representative.push_back(p);
        raw_class[p] = it->second;
    }

    std::vector<std::string> ids;
    for (auto r : representative)
        ids.push_back(P.id(r));
    std::vector<std::pair<std::string, std::string>> le;
    for (std::size_t a = 0; a < representative.size(); ++a)
        for (std::size_t b = 0; b < representative.size(); ++b)
            if (a != b
                && P.compatible_with(representative[a]).is_subset_of(P.compatible_with(representative[b])))
                le.emplace_back(P.id(representative[a]), P.id(representative[b]));

    SeparativeQuotient out{
        Poset::from_relation(P.name() + "/sep", ids, P.id(representative[raw_class[P.top()]]), le), {}, false};
    out.projection.resize(n);
    for (std::size_t p = 0; p < n; ++p)
        out.projection[p] = out.quotient.index(P.id(representative[raw_class[p]]));

    bool bijective = representative.size() == n;
    bool order_preserved = true;
    for (std::size_t p = 0; p < n && order_preserved; ++p)
        for (std::size_t q = 0; q < n; ++q)
            if (P.leq(p, q) != out.quotient.leq(out.projection[p], out.projection[q])) {
                order_preserved = false;
                break;
            }
    out.was_separative = bijective && order_preserved;
    return out;
}

std::string_view to_string(FamilyKind k)
{
    switch (k) {
    case FamilyKind::dense: return "dense";
    case FamilyKind::exhaustive: return "exhaustive";
    case FamilyKind::antichain: return "antichain";
    case FamilyKind::unrestricted: break;
    }
    return "unrestricted";
}

void check_family(const Poset& P, const ConditionFamily& f)
{
    if (f.members.size() != P.size())
        throw InputError("family '" + f.name + "' does not match poset " + P.name());
    bool ok = true;
    switch (f.kind) {
    case FamilyKind::dense: ok = is_dense(P, f.members); break;
    case FamilyKind::exhaustive: ok = is_exhaustive(P, f.members); break;
    case FamilyKind::antichain: ok = is_antichain(P, f.members); break;
    case FamilyKind::unrestricted: break;
    }
    if (!ok)
        throw InputError("family '" + f.name + "' is not " + std::string(to_string(f.kind)));
}

} // namespace forcinglab
