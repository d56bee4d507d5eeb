#include <forcinglab/names.hpp>

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>

namespace forcinglab {

namespace {

struct NameNode {
    std::vector<NameEntry> entries;
    std::size_t rank = 0;
    std::vector<Name> descendants;
};

struct NameTable {
    std::mutex mutex;
    std::deque<NameNode> nodes{NameNode{}};
    std::map<std::vector<std::pair<std::uint32_t, ConditionIndex>>, std::uint32_t> index{{{}, 0}};
};

NameTable& name_table()
{
    static NameTable t;
    return t;
}

} // namespace

Name Name::make(std::vector<NameEntry> entries)
{
    std::sort(entries.begin(), entries.end());
    entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
    std::vector<std::pair<std::uint32_t, ConditionIndex>> key;
    for (const auto& e : entries)
        key.emplace_back(e.child.handle_, e.cond);
    auto& t = name_table();
    {
        std::lock_guard lock(t.mutex);
        if (auto it = t.index.find(key); it != t.index.end())
            return Name(it->second);
    }
    std::size_t rank = 0;
    std::vector<Name> desc;
    for (const auto& e : entries) {
        rank = std::max(rank, e.child.rank() + 1);
        desc.push_back(e.child);
        const auto& d = e.child.descendants();
        desc.insert(desc.end(), d.begin(), d.end());
    }
    std::sort(desc.begin(), desc.end());
    desc.erase(std::unique(desc.begin(), desc.end()), desc.end());

    std::lock_guard lock(t.mutex);
    auto [it, inserted] = t.index.try_emplace(std::move(key), static_cast<std::uint32_t>(t.nodes.size()));
    if (inserted)
        t.nodes.push_back(NameNode{std::move(entries), rank, std::move(desc)});
    return Name(it->second);
}

const std::vector<NameEntry>& Name::entries() const
{
    auto& t = name_table();
    std::lock_guard lock(t.mutex);
    return t.nodes[handle_].entries;
}

std::size_t Name::rank() const
{
    auto& t = name_table();
    std::lock_guard lock(t.mutex);
    return t.nodes[handle_].rank;
}

const std::vector<Name>& Name::descendants() const
{
    auto& t = name_table();
    std::lock_guard lock(t.mutex);
    return t.nodes[handle_].descendants;
}

// ---------------------------------------------------------------------------

namespace {

/// HF sets share structure, so the memo keeps check names of naturals linear.
Name check_name_memo(HFSet x, const Poset& P, std::unordered_map<std::uint32_t, Name>& memo)
{
    if (auto it = memo.find(x.handle()); it != memo.end())
        return it->second;
    std::vector<NameEntry> entries;
    for (auto y : x.elements())
        entries.push_back({check_name_memo(y, P, memo), P.top()});
    auto n = Name::make(std::move(entries));
    memo.emplace(x.handle(), n);
    return n;
}

} // namespace

Name check_name(HFSet x, const Poset& P)
{
    std::unordered_map<std::uint32_t, Name> memo;
    return check_name_memo(x, P, memo);
}

namespace {

std::optional<HFSet> check_value_memo(Name n, const Poset& P, std::unordered_map<std::uint32_t, std::optional<HFSet>>& memo)
{
    if (auto it = memo.find(n.handle()); it != memo.end())
        return it->second;
    auto compute = [&]() -> std::optional<HFSet> {
        std::vector<HFSet> elements;
        for (const auto& e : n.entries()) {
            if (e.cond != P.top())
                return std::nullopt;
            auto v = check_value_memo(e.child, P, memo);
            if (!v)
                return std::nullopt;
            elements.push_back(*v);
        }
        auto x = HFSet::make(std::move(elements));
        // Duplicate children would make the name differ from check(x).
        if (x.size() != n.entries().size())
            return std::nullopt;
        return x;
    };
    auto v = compute();
    memo.emplace(n.handle(), v);
    return v;
}

} // namespace

std::optional<HFSet> check_value(Name n, const Poset& P)
{
    std::unordered_map<std::uint32_t, std::optional<HFSet>> memo;
    return check_value_memo(n, P, memo);
}

HFSet condition_code(ConditionIndex i)
{
    return HFSet::natural(i);
}

Name generic_name(const Poset& P)
{
    std::unordered_map<std::uint32_t, Name> memo;
    std::vector<NameEntry> entries;
    for (ConditionIndex q = 0; q < P.size(); ++q)
        entries.push_back({check_name_memo(condition_code(q), P, memo), q});
    return Name::make(std::move(entries));
}

ConditionSet decode_conditions(HFSet codes, const Poset& P)
{
    ConditionSet out = P.empty_set();
    for (auto c : codes.elements()) {
        auto n = c.as_natural();
        if (!n || *n >= P.size())
            throw InputError(c.to_string() + " is not the code of a condition of " + P.name());
        out.set(*n);
    }
    return out;
}

// ---------------------------------------------------------------------------

std::string NameViolation::describe(const Poset& P) const
{
    std::string where = "entry path";
    for (auto i : path)
        where += " " + std::to_string(i);
    if (condition >= P.size())
        return where + ": condition index " + std::to_string(condition) + " is not in " + P.name();
    return where + " (depth " + std::to_string(depth()) + "): condition '" + P.id(condition) + "' is not below '"
        + P.id(bound) + "'";
}

namespace {

struct Validator {
    const Poset& P;
    NameDiscipline d;
    std::vector<std::size_t> path;
    /// (name, bound) pairs already known to be clean.
    std::set<std::pair<std::uint32_t, ConditionIndex>> clean;

    std::optional<NameViolation> under(Name n, std::optional<ConditionIndex> bound)
    {
        const auto key = std::pair{n.handle(), bound.value_or(P.size())};
        if (clean.contains(key))
            return std::nullopt;
        if (bound && d == NameDiscipline::relaxed && check_value(n, P))
            return std::nullopt;
        const auto& entries = n.entries();
        for (std::size_t i = 0; i < entries.size(); ++i) {
            path.push_back(i);
            const auto& e = entries[i];
            if (e.cond >= P.size())
                return NameViolation{path, e.cond, e.cond};
            // Checking each condition against its parent suffices: <= is transitive.
            if (bound && !P.leq(e.cond, *bound))
                return NameViolation{path, e.cond, *bound};
            if (auto v = under(e.child, e.cond))
                return v;
            path.pop_back();
        }
        clean.insert(key);
        return std::nullopt;
    }
};

} // namespace

std::optional<NameViolation> validate_name(Name n, const Poset& P, NameDiscipline d)
{
    Validator v{P, d, {}, {}};
    return v.under(n, std::nullopt);
}

HFSet interpret_unchecked(Name n, const ConditionSet& G)
{
    std::unordered_map<std::uint32_t, HFSet> memo;
    std::function<HFSet(Name)> go = [&](Name x) -> HFSet {
        if (auto it = memo.find(x.handle()); it != memo.end())
            return it->second;
        std::vector<HFSet> elements;
        for (const auto& e : x.entries())
            if (e.cond < G.size() && G.test(e.cond))
                elements.push_back(go(e.child));
        auto v = HFSet::make(std::move(elements));
        memo.emplace(x.handle(), v);
        return v;
    };
    return go(n);
}

HFSet interpret(Name n, const Poset& P, const ConditionSet& G)
{
    if (G.size() != P.size() || !is_filter(P, G))
        throw InputError("interpretation needs a filter of " + P.name());
    return interpret_unchecked(n, G);
}

// ---------------------------------------------------------------------------

const Name* NameEnv::find(std::string_view id) const
{
    for (const auto& [k, v] : bindings)
        if (k == id)
            return &v;
    return nullptr;
}

void NameEnv::bind(std::string id, Name n)
{
    for (auto& [k, v] : bindings)
        if (k == id) {
            v = n;
            return;
        }
    bindings.emplace_back(std::move(id), n);
}

namespace {

[[noreturn]] void bad(const SExpr& e, const std::string& what)
{
    throw InputError(e.span.to_string() + ": " + what);
}

} // namespace

Name parse_name(const SExpr& e, const Poset& P, const NameEnv& env)
{
    if (e.is_atom()) {
        if (const Name* n = env.find(e.text))
            return *n;
        if (e.text == "gen")
            return generic_name(P);
        bad(e, "unbound name '" + e.text + "'");
    }
    if (e.is_form("gen")) {
        if (e.items.size() != 1)
            bad(e, "(gen) takes no arguments");
        return generic_name(P);
    }
    if (e.is_form("check")) {
        if (e.items.size() != 2 || e.items[1].kind != SExpr::Kind::hf)
            bad(e, "expected (check #{...})");
        return check_name(e.items[1].hf, P);
    }
    if (e.is_form("name")) {
        if (e.items.size() > 2)
            bad(e, "expected (name ((pair <name> <condition>) ...))");
        std::vector<NameEntry> entries;
        if (e.items.size() == 2) {
            if (!e.items[1].is_list())
                bad(e.items[1], "expected a list of pairs");
            for (const auto& pair : e.items[1].items) {
                if (!pair.is_form("pair") || pair.items.size() != 3 || !pair.items[2].is_atom())
                    bad(pair, "expected (pair <name> <condition>)");
                auto q = P.find(pair.items[2].text);
                if (!q)
                    bad(pair.items[2], "unknown condition '" + pair.items[2].text + "'");
                entries.push_back({parse_name(pair.items[1], P, env), *q});
            }
        }
        return Name::make(std::move(entries));
    }
    bad(e, "expected a name expression, got " + e.to_string());
}

NameEnv parse_names(std::string_view text, const Poset& P, std::string_view source, NameDiscipline d)
{
    NameEnv env;
    for (const auto& def : parse_sexprs(text, source)) {
        if (!def.is_form("def") || def.items.size() != 3 || !def.items[1].is_atom())
            throw InputError(std::string(source) + ":" + def.span.to_string() + ": expected (def <id> <name-expr>)");
        const auto& id = def.items[1].text;
        if (env.find(id))
            throw InputError(std::string(source) + ":" + def.span.to_string() + ": '" + id + "' defined twice");
        Name n;
        try {
            n = parse_name(def.items[2], P, env);
        } catch (const InputError& err) {
            throw InputError(std::string(source) + ":" + err.what());
        }
        if (auto v = validate_name(n, P, d))
            throw InputError(std::string(source) + ":" + def.span.to_string() + ": name '" + id
                + "' breaks the name discipline at " + v->describe(P));
        env.bind(id, n);
    }
    return env;
}

namespace {

std::string format_name_with(Name n, const Poset& P, Name gen)
{
    if (auto x = check_value(n, P))
        return "(check " + x->to_string() + ")";
    if (n == gen)
        return "(gen)";
    std::string out = "(name (";
    bool first = true;
    for (const auto& e : n.entries()) {
        if (!first)
            out += ' ';
        first = false;
        out += "(pair " + format_name_with(e.child, P, gen) + " " + P.id(e.cond) + ")";
    }
    return out + "))";
}

} // namespace

std::string format_name(Name n, const Poset& P)
{
    return format_name_with(n, P, generic_name(P));
}

std::string format_names(const NameEnv& env, const Poset& P)
{
    std::string out;
    for (const auto& [id, n] : env.bindings)
        out += "(def " + id + " " + format_name(n, P) + ")\n";
    return out;
}

} // namespace forcinglab
