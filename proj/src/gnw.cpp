#include <forcinglab/gnw.hpp>

#include <algorithm>
#include <bit>

#include <forcinglab/poset.hpp>

namespace forcinglab {

std::vector<int> elements_of(FinSet s)
{
    std::vector<int> out;
    for (; s; s &= s - 1)
        out.push_back(std::countr_zero(s));
    return out;
}

FinSet fin_set(const std::vector<int>& xs)
{
    FinSet s = 0;
    for (int x : xs) {
        if (x < 0 || x > 31)
            throw InputError("element " + std::to_string(x) + " outside 0..31");
        s |= FinSet{1} << x;
    }
    return s;
}

std::string format_fin_set(FinSet s)
{
    std::string out = "{";
    for (int x : elements_of(s)) {
        if (out.size() > 1)
            out += ',';
        out += std::to_string(x);
    }
    return out + "}";
}

FinFamily FinFamily::make(std::size_t universe, std::vector<FinSet> members)
{
    if (universe < 1 || universe > 31)
        throw InputError("family universe must lie in 1..31");
    FinFamily F{universe, std::move(members)};
    for (auto m : F.members)
        if (m == 0 || (m & ~F.full()) != 0)
            throw InputError("family member " + format_fin_set(m) + " is empty or outside the universe");
    std::sort(F.members.begin(), F.members.end());
    F.members.erase(std::unique(F.members.begin(), F.members.end()), F.members.end());
    return F;
}

bool FinFamily::contains(FinSet s) const
{
    return std::binary_search(members.begin(), members.end(), s);
}

bool has_initial_segment_in(const FinFamily& F, FinSet s)
{
    FinSet prefix = 0;
    for (; s; s &= s - 1) {
        prefix |= s & (~s + 1);
        if (F.contains(prefix))
            return true;
    }
    return false;
}

std::string_view to_string(GnwVerdict v)
{
    switch (v) {
    case GnwVerdict::accepts:
        return "accepts";
    case GnwVerdict::rejects:
        return "rejects";
    case GnwVerdict::neither:
        return "neither";
    }
    return "?";
}

std::string_view to_string(Horn h)
{
    return h == Horn::a ? "a" : "b";
}

namespace {

FinSet above(FinSet A, FinSet a)
{
    if (a == 0)
        return A;
    const int top = 31 - std::countl_zero(a);
    return top >= 31 ? 0 : A & ~((FinSet{2} << top) - 1);
}

/// Calls f on every submask of `pool` with exactly k elements, in increasing
/// numeric (colex) order, until f returns true.
template <typename Fn>
bool for_each_k_subset(FinSet pool, std::size_t k, Fn&& f)
{
    const auto elems = elements_of(pool);
    if (k > elems.size())
        return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    for (;;) {
        FinSet s = 0;
        for (auto i : idx)
            s |= FinSet{1} << elems[i];
        if (f(s))
            return true;
        // colex successor: bump the lowest index that can move up.
        std::size_t i = 0;
        while (i < k && idx[i] + 1 == (i + 1 < k ? idx[i + 1] : elems.size()))
            ++i;
        if (i == k)
            return false;
        ++idx[i];
        for (std::size_t j = 0; j < i; ++j)
            idx[j] = j;
    }
}

} // namespace

GnwVerdict gnw_accepts(const FinFamily& F, FinSet a, FinSet A, std::size_t s)
{
    const FinSet room = above(A, a);
    if (s == 0 || static_cast<std::size_t>(std::popcount(room)) < s)
        throw InputError("block size " + std::to_string(s) + " exceeds the " + std::to_string(std::popcount(room))
            + " elements available above " + format_fin_set(a));
    bool some_good = false, some_bad = false;
    for_each_k_subset(room, s, [&](FinSet B) {
        (has_initial_segment_in(F, a | B) ? some_good : some_bad) = true;
        return some_good && some_bad;
    });
    if (!some_bad)
        return GnwVerdict::accepts;
    if (!some_good)
        return GnwVerdict::rejects;
    return GnwVerdict::neither;
}

bool horn_a_holds(const FinFamily& F, FinSet H)
{
    return std::none_of(F.members.begin(), F.members.end(), [&](FinSet m) { return (m & ~H) == 0; });
}

bool horn_b_holds(const FinFamily& F, FinSet H, std::size_t m)
{
    // The first m elements of any larger B form an m-subset whose initial
    // segments are initial segments of B, so m-subsets suffice.
    if (static_cast<std::size_t>(std::popcount(H)) < m)
        return true;
    return !for_each_k_subset(H, m, [&](FinSet B) { return !has_initial_segment_in(F, B); });
}

std::optional<GnwResult> gnw_dichotomy_search(const FinFamily& F, std::size_t h, std::size_t m)
{
    if (h > F.universe || m > h || m == 0)
        throw InputError("need 1 <= m <= h <= universe");
    std::optional<GnwResult> found;
    for_each_k_subset(F.full(), h, [&](FinSet H) {
        if (horn_a_holds(F, H))
            found = GnwResult{H, Horn::a};
        else if (horn_b_holds(F, H, m))
            found = GnwResult{H, Horn::b};
        return found.has_value();
    });
    if (!found)
        return std::nullopt;
    for (std::size_t x = 0; x < F.universe; ++x) {
        const FinSet bigger = found->H | (FinSet{1} << x);
        if (bigger == found->H)
            continue;
        if (found->horn == Horn::a ? horn_a_holds(F, bigger) : horn_b_holds(F, bigger, m))
            found->H = bigger;
    }
    return found;
}

// ---------------------------------------------------------------------------

std::string GnwEvent::to_string() const
{
    switch (kind) {
    case Kind::decide:
        return "decide " + format_fin_set(a) + ": pool " + format_fin_set(pool) + " "
            + std::string(forcinglab::to_string(verdict));
    case Kind::out_of_room:
        return "out-of-room " + format_fin_set(a) + ": pool " + format_fin_set(pool);
    case Kind::pick:
        return "pick " + std::to_string(element) + ": pool " + format_fin_set(pool);
    case Kind::accept_empty:
        return "accept-empty: H " + format_fin_set(pool);
    case Kind::reject_pick:
        return "reject-pick " + std::to_string(element) + ": A " + format_fin_set(a) + " excluded "
            + format_fin_set(excluded);
    }
    return "?";
}

namespace {

/// Largest subset of pool deciding a (acceptance first, then colex order).
std::pair<FinSet, GnwVerdict> shrink_to_decide(const FinFamily& F, FinSet a, FinSet pool, std::size_t s)
{
    const auto current = gnw_accepts(F, a, pool, s);
    if (current != GnwVerdict::neither)
        return {pool, current};
    for (auto size = static_cast<std::size_t>(std::popcount(pool)) - 1; size >= s; --size) {
        for (auto want : {GnwVerdict::accepts, GnwVerdict::rejects}) {
            FinSet hit = 0;
            if (for_each_k_subset(pool, size, [&](FinSet B) {
                    if (gnw_accepts(F, a, B, s) != want)
                        return false;
                    hit = B;
                    return true;
                }))
                return {hit, want};
        }
    }
    // Every s-subset decides a on its own, so this is unreachable.
    return {pool, current};
}

} // namespace

GnwConstruction gnw_construct(const FinFamily& F, std::size_t s, std::size_t h)
{
    if (s == 0 || h == 0 || h > F.universe || s > F.universe)
        throw InputError("need 1 <= s, h <= universe");
    GnwConstruction out;
    auto log = [&](GnwEvent e) { out.transcript.push_back(e); };

    // Stage 1.
    FinSet pool = F.full();
    {
        auto [p, v] = shrink_to_decide(F, 0, pool, s);
        pool = p;
        log({GnwEvent::Kind::decide, 0, pool, v});
    }
    FinSet picked = 0;
    while (pool) {
        const int n = std::countr_zero(pool);
        picked |= FinSet{1} << n;
        pool &= ~(FinSet{1} << n);
        log({GnwEvent::Kind::pick, 0, pool, GnwVerdict::neither, n});
        const FinSet earlier = picked & ~(FinSet{1} << n);
        // Subsets of the picked elements that contain n, in colex order.
        for (FinSet sub = 0;; sub = (sub - earlier) & earlier) {
            const FinSet a = sub | (FinSet{1} << n);
            if (static_cast<std::size_t>(std::popcount(pool)) < s) {
                log({GnwEvent::Kind::out_of_room, a, pool});
            } else {
                auto [p, v] = shrink_to_decide(F, a, pool, s);
                pool = p;
                log({GnwEvent::Kind::decide, a, pool, v});
            }
            if (sub == earlier)
                break;
        }
    }
    const FinSet H = picked;

    // Stage 2.
    if (static_cast<std::size_t>(std::popcount(H)) >= s && gnw_accepts(F, 0, H, s) == GnwVerdict::accepts) {
        log({GnwEvent::Kind::accept_empty, 0, H});
        out.H = H;
        out.horn = Horn::b;
        out.completed = static_cast<std::size_t>(std::popcount(H)) >= h;
        return out;
    }
    FinSet A = 0;
    for (int n : elements_of(H)) {
        const FinSet bit = FinSet{1} << n;
        const bool room = static_cast<std::size_t>(std::popcount(above(H, bit))) >= s;
        FinSet excluded = 0;
        bool admit = true;
        for (FinSet sub = 0;; sub = (sub - A) & A) {
            const FinSet a = sub | bit;
            if (room) {
                if (gnw_accepts(F, a, H, s) != GnwVerdict::rejects)
                    admit = false;
                for (int k : elements_of(above(H, sub))) {
                    const FinSet kbit = FinSet{1} << k;
                    if (static_cast<std::size_t>(std::popcount(above(H, kbit))) >= s
                        && gnw_accepts(F, sub | kbit, H, s) == GnwVerdict::accepts)
                        excluded |= kbit;
                }
            } else if (F.contains(a)) {
                admit = false;
            }
            if (sub == A)
                break;
        }
        if (admit) {
            A |= bit;
            log({GnwEvent::Kind::reject_pick, A, H, GnwVerdict::rejects, n, excluded});
        }
    }
    out.H = A;
    out.horn = Horn::a;
    out.completed = static_cast<std::size_t>(std::popcount(A)) >= h;
    return out;
}

} // namespace forcinglab
