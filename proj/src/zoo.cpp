#include <forcinglab/zoo.hpp>

#include <algorithm>
#include <bit>
#include <charconv>
#include <memory>

namespace forcinglab {

namespace {

ZooPoset finish(Poset P, std::vector<ConditionFamily> families)
{
    for (const auto& f : families)
        check_family(P, f);
    return {std::make_shared<const Poset>(std::move(P)), std::move(families)};
}

int parse_int(std::string_view s, std::string_view what)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw InputError("bad integer '" + std::string(s) + "' in " + std::string(what));
    return v;
}

} // namespace

const ConditionFamily& ZooPoset::family(std::string_view name) const
{
    for (const auto& f : families)
        if (f.name == name)
            return f;
    throw InputError("no family '" + std::string(name) + "' on " + poset->name());
}

// ---------------------------------------------------------------------------

std::string CohenCondition::id() const
{
    std::string s = "c";
    for (const auto& c : cells)
        s += c ? static_cast<char>('0' + *c) : 'x';
    return s;
}

CohenCondition CohenCondition::from_id(std::string_view id, std::size_t index_size, std::size_t depth)
{
    if (id.empty() || id[0] != 'c' || id.size() != 1 + index_size * depth)
        throw InputError("bad Cohen condition '" + std::string(id) + "'");
    CohenCondition c{index_size, depth, {}};
    for (char ch : id.substr(1)) {
        if (ch == 'x')
            c.cells.emplace_back();
        else if (ch == '0' || ch == '1')
            c.cells.emplace_back(ch - '0');
        else
            throw InputError("bad Cohen condition '" + std::string(id) + "'");
    }
    return c;
}

bool extends(const CohenCondition& q, const CohenCondition& p)
{
    for (std::size_t c = 0; c < p.cells.size(); ++c)
        if (p.cells[c] && q.cells[c] != p.cells[c])
            return false;
    return true;
}

ZooPoset cohen(std::size_t index_size, std::size_t depth)
{
    if (index_size < 1 || depth < 1)
        throw InputError("cohen: index size and depth must be at least 1");
    const std::size_t cells = index_size * depth;
    std::size_t count = 1;
    for (std::size_t c = 0; c < cells; ++c) {
        count *= 3;
        check_cap(count, "cohen(" + std::to_string(index_size) + "," + std::to_string(depth) + ")");
    }

    std::vector<CohenCondition> conds;
    conds.reserve(count);
    for (std::size_t code = 0; code < count; ++code) {
        CohenCondition c{index_size, depth, {}};
        std::size_t rest = code;
        for (std::size_t k = 0; k < cells; ++k, rest /= 3) {
            if (rest % 3 == 2)
                c.cells.emplace_back();
            else
                c.cells.emplace_back(static_cast<int>(rest % 3));
        }
        conds.push_back(std::move(c));
    }
    std::vector<std::string> ids;
    for (const auto& c : conds)
        ids.push_back(c.id());
    const std::string top = "c" + std::string(cells, 'x');

    auto P = Poset::from_predicate("cohen_" + std::to_string(index_size) + "x" + std::to_string(depth), ids, top,
        [&](std::size_t q, std::size_t p) { return extends(conds[q], conds[p]); });

    std::vector<ConditionFamily> families;
    for (std::size_t i = 0; i < index_size; ++i)
        for (std::size_t n = 0; n < depth; ++n) {
            ConditionFamily f{"D_" + std::to_string(i) + "_" + std::to_string(n), P.empty_set(), FamilyKind::dense};
            for (const auto& c : conds)
                if (c.at(i, n))
                    f.members.set(P.index(c.id()));
            families.push_back(std::move(f));
        }
    return finish(std::move(P), std::move(families));
}

// ---------------------------------------------------------------------------

Rational DyadicEvent::measure() const
{
    return Rational(std::popcount(atoms), std::int64_t{1} << k);
}

std::string DyadicEvent::id() const
{
    std::string s = "r";
    for (std::size_t a = 0; a < (std::size_t{1} << k); ++a)
        s += (atoms >> a & 1) ? '1' : '0';
    return s;
}

DyadicEvent DyadicEvent::from_id(std::string_view id, unsigned k)
{
    if (k > 6 || id.size() != 1 + (std::size_t{1} << k) || id[0] != 'r')
        throw InputError("bad dyadic event '" + std::string(id) + "'");
    DyadicEvent e{k, 0};
    for (std::size_t a = 0; a + 1 < id.size(); ++a) {
        if (id[a + 1] == '1')
            e.atoms |= std::uint64_t{1} << a;
        else if (id[a + 1] != '0')
            throw InputError("bad dyadic event '" + std::string(id) + "'");
    }
    return e;
}

DyadicEvent DyadicEvent::interval(unsigned k, Rational lo, Rational hi)
{
    const std::int64_t scale = std::int64_t{1} << k;
    const Rational a = lo * scale, b = hi * scale;
    if (a.denominator() != 1 || b.denominator() != 1 || a < 0 || b > scale || a > b)
        throw InputError("interval endpoints are not dyadic at resolution " + std::to_string(k));
    DyadicEvent e{k, 0};
    for (auto i = a.numerator(); i < b.numerator(); ++i)
        e.atoms |= std::uint64_t{1} << i;
    return e;
}

namespace {

ZooPoset dyadic_events(std::string name, unsigned k, Rational floor)
{
    if (k < 1 || k > 6)
        throw SizeError(name + ": resolution exponent must lie in 1..6");
    const std::size_t atom_count = std::size_t{1} << k;
    if (atom_count >= 63)
        throw SizeError(name + ": too many events");
    check_cap((std::size_t{1} << atom_count) - 1, name);

    std::vector<DyadicEvent> events;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << atom_count); ++mask) {
        DyadicEvent e{k, mask};
        if (e.measure() > floor)
            events.push_back(e);
    }
    std::vector<std::string> ids;
    for (const auto& e : events)
        ids.push_back(e.id());
    const DyadicEvent whole{k, (std::uint64_t{1} << atom_count) - 1};

    auto P = Poset::from_predicate(name, ids, whole.id(),
        [&](std::size_t q, std::size_t p) { return events[q].subset_of(events[p]); });

    ConditionFamily atoms{"atoms", P.empty_set(), FamilyKind::antichain};
    const auto& mins = P.minimal();
    for (auto m = mins.find_first(); m != ConditionSet::npos; m = mins.find_next(m))
        atoms.members.set(m);
    return finish(std::move(P), {std::move(atoms)});
}

} // namespace

ZooPoset dyadic_random(unsigned k)
{
    return dyadic_events("random_" + std::to_string(k), k, Rational(0));
}

ZooPoset amoeba(unsigned k, Rational eps)
{
    if (eps <= 0 || eps >= 1)
        throw InputError("amoeba: eps must lie strictly between 0 and 1");
    return dyadic_events("amoeba_" + std::to_string(k) + "_" + std::to_string(eps.numerator()) + "_"
            + std::to_string(eps.denominator()),
        k, eps);
}

// ---------------------------------------------------------------------------

ZooPoset collapse(std::size_t x_size, std::size_t len)
{
    if (x_size < 1 || len < 1)
        throw InputError("collapse: alphabet size and length must be at least 1");
    if (x_size > 36)
        throw SizeError("collapse: alphabet size above 36");
    const std::string name = "collapse_" + std::to_string(x_size) + "_" + std::to_string(len);
    std::size_t count = 1, layer = 1;
    for (std::size_t l = 1; l <= len; ++l) {
        layer *= x_size;
        count += layer;
        check_cap(count, name);
    }

    static constexpr std::string_view digits = "0123456789abcdefghijklmnopqrstuvwxyz";
    std::vector<std::string> seqs{""};
    for (std::size_t at = 0; at < seqs.size(); ++at)
        if (seqs[at].size() < len)
            for (std::size_t x = 0; x < x_size; ++x)
                seqs.push_back(seqs[at] + digits[x]);
    std::vector<std::string> ids;
    for (const auto& s : seqs)
        ids.push_back("s" + s);

    auto P = Poset::from_predicate(name, ids, "s",
        [&](std::size_t q, std::size_t p) { return seqs[q].starts_with(seqs[p]); });

    std::vector<ConditionFamily> families;
    for (std::size_t x = 0; x < x_size; ++x) {
        ConditionFamily f{"hit_" + std::to_string(x), P.empty_set(), FamilyKind::dense};
        for (const auto& s : seqs)
            if (s.find(digits[x]) != std::string::npos || s.size() == len)
                f.members.set(P.index("s" + s));
        families.push_back(std::move(f));
    }
    return finish(std::move(P), std::move(families));
}

// ---------------------------------------------------------------------------

namespace {

std::string format_set(std::uint32_t s)
{
    std::string out;
    for (int i = 0; i < 32; ++i)
        if (s >> i & 1) {
            if (!out.empty())
                out += '.';
            out += std::to_string(i);
        }
    return out;
}

std::uint32_t parse_set(std::string_view s, std::string_view id)
{
    std::uint32_t out = 0;
    while (!s.empty()) {
        auto dot = s.find('.');
        int v = parse_int(s.substr(0, dot), id);
        if (v < 0 || v > 31)
            throw InputError("element out of range in '" + std::string(id) + "'");
        out |= std::uint32_t{1} << v;
        s = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    }
    return out;
}

} // namespace

bool MathiasCondition::valid(std::size_t universe) const
{
    if (envelope == 0 || (stem & ~envelope) != 0)
        return false;
    if (universe < 32 && (envelope >> universe) != 0)
        return false;
    if (stem == 0)
        return true;
    const int top = 31 - std::countl_zero(stem);
    const std::uint32_t below = top >= 31 ? ~std::uint32_t{0} : (std::uint32_t{1} << (top + 1)) - 1;
    return (envelope & below) == stem;
}

std::string MathiasCondition::id() const
{
    return "m" + format_set(stem) + ":" + format_set(envelope);
}

MathiasCondition MathiasCondition::from_id(std::string_view id)
{
    auto colon = id.find(':');
    if (id.empty() || id[0] != 'm' || colon == std::string_view::npos)
        throw InputError("bad Mathias condition '" + std::string(id) + "'");
    return {parse_set(id.substr(1, colon - 1), id), parse_set(id.substr(colon + 1), id)};
}

bool mathias_leq(const MathiasCondition& q, const MathiasCondition& p)
{
    return (p.stem & ~q.stem) == 0 && (q.envelope & ~p.envelope) == 0 && (q.stem & ~p.stem & ~p.envelope) == 0;
}

bool pure_extension(const MathiasCondition& q, const MathiasCondition& p)
{
    return q.stem == p.stem && mathias_leq(q, p);
}

namespace {

ZooPoset mathias_below(std::string name, std::size_t universe, const MathiasCondition& top)
{
    if (universe < 2 || universe > 20)
        throw InputError(name + ": universe size must lie in 2..20");
    if (!top.valid(universe))
        throw InputError(name + ": '" + top.id() + "' is not a condition");

    // Below top: envelope inside top's, stem = top stem plus an initial part
    // of the remaining envelope.
    std::vector<MathiasCondition> conds;
    const std::uint32_t env = top.envelope;
    for (std::uint32_t e = env;; e = (e - 1) & env) {
        if (e != 0 && (top.stem & ~e) == 0) {
            std::uint32_t extra = e & ~top.stem;
            std::uint32_t stem = top.stem;
            MathiasCondition c{stem, e};
            if (c.valid(universe) && mathias_leq(c, top))
                conds.push_back(c);
            while (extra != 0) {
                const std::uint32_t low = extra & (~extra + 1);
                stem |= low;
                extra &= ~low;
                c = {stem, e};
                if (c.valid(universe) && mathias_leq(c, top))
                    conds.push_back(c);
            }
            check_cap(conds.size(), name);
        }
        if (e == 0)
            break;
    }
    std::vector<std::string> ids;
    for (const auto& c : conds)
        ids.push_back(c.id());

    auto P = Poset::from_predicate(name, ids, top.id(),
        [&](std::size_t q, std::size_t p) { return mathias_leq(conds[q], conds[p]); });

    ConditionFamily nonempty{"stem_nonempty", P.empty_set(), FamilyKind::dense};
    for (const auto& c : conds)
        if (c.stem != 0)
            nonempty.members.set(P.index(c.id()));
    std::vector<ConditionFamily> families;
    if (nonempty.members.any() || top.stem != 0)
        families.push_back(std::move(nonempty));
    return finish(std::move(P), std::move(families));
}

} // namespace

ZooPoset mathias(std::size_t universe)
{
    if (universe < 2 || universe > 20)
        throw InputError("mathias: universe size must lie in 2..20");
    const MathiasCondition top{0, static_cast<std::uint32_t>((std::uint32_t{1} << universe) - 1)};
    return mathias_below("mathias_" + std::to_string(universe), universe, top);
}

ZooPoset mathias_cone(std::size_t universe, const MathiasCondition& p)
{
    return mathias_below("mathias_" + std::to_string(universe) + "_below_" + p.id(), universe, p);
}

// ---------------------------------------------------------------------------

MarkerCondition MarkerCondition::translate(int n) const
{
    MarkerCondition out = *this;
    if (!is_top())
        out.lo += n;
    return out;
}

MarkerCondition MarkerCondition::complement() const
{
    MarkerCondition out = *this;
    for (auto& b : out.bits)
        b ^= 1;
    return out;
}

std::optional<MarkerCondition> MarkerCondition::concatenate(const MarkerCondition& a, const MarkerCondition& b)
{
    if (a.is_top())
        return b;
    if (b.is_top())
        return a;
    if (b.lo == a.hi() + 1) {
        MarkerCondition out = a;
        out.bits.insert(out.bits.end(), b.bits.begin(), b.bits.end());
        return out;
    }
    if (a.lo == b.hi() + 1)
        return concatenate(b, a);
    return std::nullopt;
}

std::string MarkerCondition::id() const
{
    if (is_top())
        return "k";
    std::string s = "k" + std::to_string(lo) + ":";
    for (auto b : bits)
        s += static_cast<char>('0' + b);
    return s;
}

MarkerCondition MarkerCondition::from_id(std::string_view id)
{
    if (id == "k")
        return {};
    auto colon = id.find(':');
    if (id.empty() || id[0] != 'k' || colon == std::string_view::npos || colon + 1 == id.size())
        throw InputError("bad marker condition '" + std::string(id) + "'");
    MarkerCondition c{parse_int(id.substr(1, colon - 1), id), {}};
    for (char ch : id.substr(colon + 1)) {
        if (ch != '0' && ch != '1')
            throw InputError("bad marker condition '" + std::string(id) + "'");
        c.bits.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return c;
}

bool marker_leq(const MarkerCondition& q, const MarkerCondition& p)
{
    if (q == p || p.is_top())
        return true;
    if (q.is_top())
        return false;
    // Every piece has length l and p sits at its own place, so the tiling of
    // I_q is forced: blocks start at p.lo + j*l.
    const int l = static_cast<int>(p.length());
    if (p.lo < q.lo || p.hi() > q.hi() || (p.lo - q.lo) % l != 0 || q.length() % p.length() != 0)
        return false;
    bool saw_complement = false;
    for (int start = q.lo; start <= q.hi(); start += l) {
        bool same = true, flipped = true;
        for (int j = 0; j < l; ++j) {
            const int v = q.at(start + j);
            same = same && v == p.bits[static_cast<std::size_t>(j)];
            flipped = flipped && v != p.bits[static_cast<std::size_t>(j)];
        }
        if (start == p.lo && !same)
            return false;
        if (!same && !flipped)
            return false;
        saw_complement = saw_complement || flipped;
    }
    return saw_complement;
}

ZooPoset marker(int half_width)
{
    if (half_width < 1)
        throw InputError("marker: half-width must be at least 1");
    const std::string name = "marker_" + std::to_string(half_width);
    const int width = 2 * half_width + 1;
    if (width > 20)
        throw SizeError(name + ": window too wide");
    std::size_t count = 1;
    for (int len = 1; len <= width; ++len)
        count += static_cast<std::size_t>(width - len + 1) << len;
    check_cap(count, name);

    std::vector<MarkerCondition> conds{MarkerCondition{}};
    for (int lo = -half_width; lo <= half_width; ++lo)
        for (int len = 1; lo + len - 1 <= half_width; ++len)
            for (std::uint32_t v = 0; v < (std::uint32_t{1} << len); ++v) {
                MarkerCondition c{lo, {}};
                for (int j = 0; j < len; ++j)
                    c.bits.push_back(static_cast<std::uint8_t>(v >> j & 1));
                conds.push_back(std::move(c));
            }
    std::vector<std::string> ids;
    for (const auto& c : conds)
        ids.push_back(c.id());

    auto P = Poset::from_predicate(name, ids, "k",
        [&](std::size_t q, std::size_t p) { return marker_leq(conds[q], conds[p]); });

    // D_{p,i} for short p, kept when dense inside the window.
    std::vector<ConditionFamily> families;
    for (const auto& p : conds) {
        if (p.is_top() || p.length() > 2)
            continue;
        for (int i = 1; p.hi() + i <= half_width; ++i) {
            auto f = marker_dense_family(P, p, i);
            if (is_dense(P, f.members))
                families.push_back(std::move(f));
        }
    }
    return finish(std::move(P), std::move(families));
}

ConditionFamily marker_dense_family(const Poset& P, const MarkerCondition& p, int i)
{
    if (p.is_top())
        throw InputError("D_{p,i} needs p != top");
    const auto pi = P.index(p.id());
    const int m = p.hi();
    ConditionFamily f{"D_" + p.id() + "_" + std::to_string(i), P.empty_set(), FamilyKind::dense};
    for (std::size_t q = 0; q < P.size(); ++q) {
        if (!P.compatible(q, pi)) {
            f.members.set(q);
            continue;
        }
        if (!P.leq(q, pi))
            continue;
        const auto c = MarkerCondition::from_id(P.id(q));
        if (c.defined_at(m + i) && c.at(m + i) != c.at(m))
            f.members.set(q);
    }
    return f;
}

} // namespace forcinglab
