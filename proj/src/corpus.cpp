#include <forcinglab/corpus.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include <forcinglab/hf.hpp>
#include <forcinglab/oracle.hpp>

namespace forcinglab {

std::vector<PosetPtr> small_posets(std::size_t max_size)
{
    if (max_size > 6)
        throw SizeError("small_posets enumerates at most 6 conditions");
    std::vector<PosetPtr> out;
    for (std::size_t n = 1; n <= max_size; ++n) {
        const std::size_t m = n - 1;
        // rel[i][j]: non-top i lies strictly below non-top j.
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (i != j)
                    slots.emplace_back(i, j);
        std::map<std::uint64_t, std::uint64_t> canon;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
            auto below = [&](std::size_t i, std::size_t j) {
                if (i == j)
                    return false;
                const auto k = i * (m - 1) + (j < i ? j : j - 1);
                return (mask >> k & 1) != 0;
            };
            bool ok = true;
            for (std::size_t i = 0; i < m && ok; ++i)
                for (std::size_t j = 0; j < m && ok; ++j) {
                    if (below(i, j) && below(j, i))
                        ok = false;
                    for (std::size_t k = 0; k < m && ok; ++k)
                        if (below(i, j) && below(j, k) && i != k && !below(i, k))
                            ok = false;
                }
            if (!ok)
                continue;
            std::vector<std::size_t> perm(m);
            std::iota(perm.begin(), perm.end(), 0);
            std::uint64_t best = ~std::uint64_t{0};
            do {
                std::uint64_t code = 0;
                for (std::size_t s = 0; s < slots.size(); ++s)
                    if (below(perm[slots[s].first], perm[slots[s].second]))
                        code |= std::uint64_t{1} << s;
                best = std::min(best, code);
            } while (std::next_permutation(perm.begin(), perm.end()));
            canon.emplace(best, best);
        }
        for (const auto& [code, _] : canon) {
            std::vector<std::string> ids;
            for (std::size_t i = 0; i < n; ++i)
                ids.push_back("p" + std::to_string(i));
            auto leq = [&, code = code](std::size_t lo, std::size_t up) {
                if (lo == up || up == 0)
                    return true;
                if (lo == 0)
                    return false;
                for (std::size_t s = 0; s < slots.size(); ++s)
                    if (slots[s] == std::pair{lo - 1, up - 1})
                        return (code >> s & 1) != 0;
                return false;
            };
            out.push_back(std::make_shared<const Poset>(Poset::from_predicate(
                "small" + std::to_string(n) + "_" + std::to_string(code), ids, "p0", leq)));
        }
    }
    return out;
}

std::vector<ZooPoset> zoo_corpus()
{
    std::vector<ZooPoset> out;
    out.push_back(cohen(1, 2));
    out.push_back(dyadic_random(2));
    out.push_back(amoeba(2, Rational(1, 4)));
    out.push_back(collapse(2, 2));
    out.push_back(mathias(6));
    out.push_back(marker(3));
    return out;
}

namespace {

class NameMaker {
public:
    NameMaker(const Poset& P, std::uint32_t seed) : P_(P), rng_(seed) {}

    /// A name of rank exactly r whose conditions lie below `bound`.
    Name make(std::size_t r, std::optional<ConditionIndex> bound)
    {
        if (r == 0)
            return Name{};
        const auto room = bound ? members(P_.down(*bound)) : members(P_.full_set());
        const std::size_t count = 1 + pick(3);
        std::vector<NameEntry> entries;
        for (std::size_t e = 0; e < count; ++e) {
            const ConditionIndex c = room[pick(room.size())];
            // The first entry carries the rank; the others use any lower rank,
            // sometimes a check name.
            const std::size_t child_rank = e == 0 ? r - 1 : pick(r);
            Name child = pick(3) == 0 ? check_name(HFSet::natural(child_rank), P_) : make(child_rank, c);
            entries.push_back({child, c});
        }
        return Name::make(std::move(entries));
    }

private:
    std::size_t pick(std::size_t n)
    {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
    }

    const Poset& P_;
    std::mt19937 rng_;
};

} // namespace

NameEnv corpus_environment(const Poset& P, std::uint32_t seed)
{
    NameEnv env;
    NameMaker maker(P, seed);
    if (seed == 0) {
        env.bind("zero", check_name(HFSet::natural(0), P));
        env.bind("one", check_name(HFSet::natural(1), P));
        env.bind("two", check_name(HFSet::natural(2), P));
        env.bind("a", maker.make(1, std::nullopt));
        env.bind("b", maker.make(2, std::nullopt));
        env.bind("c", maker.make(3, std::nullopt));
        return env;
    }
    const char* ids[] = {"a", "b", "c", "d", "e", "f"};
    const std::size_t ranks[] = {1, 1, 2, 2, 3, 3};
    for (std::size_t i = 0; i < 6; ++i)
        env.bind(ids[i], maker.make(ranks[i], std::nullopt));
    return env;
}

std::vector<Formula> atoms_over(const std::vector<Term>& terms)
{
    std::vector<Formula> out;
    for (const auto& x : terms)
        for (const auto& y : terms) {
            out.push_back(mem(x, y));
            out.push_back(eq(x, y));
        }
    return out;
}

namespace {

std::vector<Term> env_terms(const NameEnv& env)
{
    std::vector<Term> out;
    for (const auto& [id, n] : env.bindings)
        out.push_back(Term::of(id, n));
    return out;
}

template <typename T>
std::vector<T> with(std::vector<T> xs, T x)
{
    xs.push_back(std::move(x));
    return xs;
}

} // namespace

std::vector<Formula> closed_formulas(const NameEnv& env, std::size_t max_depth)
{
    const auto terms = env_terms(env);
    const auto atoms = atoms_over(terms);
    std::vector<Formula> out(atoms);
    if (max_depth < 2)
        return out;
    if (max_depth > 2)
        throw SizeError("closed_formulas lists depth <= 2; run_oracle_suite covers depth 3");
    for (const auto& a : atoms)
        out.push_back(negation(a));
    for (const auto& a : atoms)
        for (const auto& b : atoms) {
            out.push_back(conjunction(a, b));
            out.push_back(disjunction(a, b));
            out.push_back(implication(a, b));
        }
    const auto open = atoms_over(with(terms, Term::variable("v")));
    for (const auto& y : terms)
        for (const auto& a : open) {
            out.push_back(forall_in("v", y, a));
            out.push_back(exists_in("v", y, a));
        }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

using TruthVector = boost::dynamic_bitset<>;

struct ClassInfo {
    Formula rep;
    /// Members by depth (index 1 and 2).
    std::size_t count[3] = {0, 0, 0};
    std::size_t total() const { return count[1] + count[2]; }
};

/// Per-element data of an open formula: (forcing set, truth vector) at each
/// child of the range name, flattened into one key.
using Key = std::vector<ConditionSet>;

class Suite {
public:
    Suite(ForcingContext& ctx, OracleSuiteReport& report) : ctx_(ctx), P_(ctx.poset()), report_(report)
    {
        const auto& mins = P_.minimal();
        for (auto m = mins.find_first(); m != ConditionSet::npos; m = mins.find_next(m)) {
            mins_.push_back(m);
            models_.emplace_back(P_.up(m));
        }
    }

    TruthVector truth(const Formula& f)
    {
        TruthVector t(mins_.size());
        for (std::size_t j = 0; j < mins_.size(); ++j)
            t[j] = models_[j].holds(f);
        return t;
    }

    /// Conditions all of whose minimal extensions satisfy the truth vector.
    ConditionSet oracle_from(const TruthVector& t) const
    {
        ConditionSet out = P_.full_set();
        for (std::size_t j = 0; j < mins_.size(); ++j)
            if (!t[j])
                out -= P_.up(mins_[j]);
        return out;
    }

    void check(const Formula& f, const ConditionSet& forced, const TruthVector& t)
    {
        ++report_.checked;
        const auto oracle = oracle_from(t);
        if (forced == oracle)
            return;
        ++report_.failed;
        if (report_.failures.size() < 20) {
            std::string where;
            const auto diff = forced ^ oracle;
            for (auto p = diff.find_first(); p != ConditionSet::npos; p = diff.find_next(p))
                where += " " + P_.id(p) + (forced.test(p) ? "(forced)" : "(oracle)");
            report_.failures.push_back(P_.name() + ": " + to_string(f) + ":" + where);
        }
    }

    std::pair<ConditionSet, TruthVector> direct(const Formula& f)
    {
        auto forced = ctx_.forcing_set(f);
        auto t = truth(f);
        check(f, forced, t);
        return {std::move(forced), std::move(t)};
    }

    void closed(const NameEnv& env, std::size_t max_depth)
    {
        std::map<std::pair<ConditionSet, TruthVector>, ClassInfo> classes;
        for (const auto& f : closed_formulas(env, std::min<std::size_t>(max_depth, 2))) {
            auto key = direct(f);
            auto& c = classes[key];
            if (!c.rep)
                c.rep = f;
            ++c.count[depth(f)];
        }
        if (max_depth < 3)
            return;
        std::vector<std::pair<TruthVector, const ClassInfo*>> cs;
        for (const auto& [key, info] : classes)
            cs.emplace_back(key.second, &info);
        for (const auto& [t, c] : cs)
            if (c->count[2] > 0) {
                const auto f = negation(c->rep);
                check(f, ctx_.forcing_set(f), ~t);
                report_.covered += c->count[2];
            }
        for (const auto& [t1, c1] : cs)
            for (const auto& [t2, c2] : cs) {
                const std::size_t n = c1->total() * c2->total() - c1->count[1] * c2->count[1];
                if (n == 0)
                    continue;
                const auto f = conjunction(c1->rep, c2->rep);
                check(f, ctx_.forcing_set(f), t1 & t2);
                const auto g = disjunction(c1->rep, c2->rep);
                check(g, ctx_.forcing_set(g), t1 | t2);
                const auto h = implication(c1->rep, c2->rep);
                check(h, ctx_.forcing_set(h), ~t1 | t2);
                report_.covered += 3 * n;
            }
    }

    void quantified(const NameEnv& env)
    {
        std::vector<Term> terms;
        for (const auto& [id, n] : env.bindings)
            terms.push_back(Term::of(id, n));
        const Term v = Term::variable("v");
        const Term w = Term::variable("w");
        const auto open = atoms_over(with(terms, v));
        const auto open2 = atoms_over(with(with(terms, v), w));

        for (const auto& y : terms) {
            std::vector<Name> zs;
            for (const auto& e : y.name.entries())
                zs.push_back(e.child);
            std::sort(zs.begin(), zs.end());
            zs.erase(std::unique(zs.begin(), zs.end()), zs.end());

            auto key_of = [&](const Formula& body) {
                Key key;
                for (const auto& z : zs) {
                    const auto inst = substitute(body, "v", Term::of("z", z));
                    key.push_back(ctx_.forcing_set(inst));
                    key.push_back(truth(inst));
                }
                return key;
            };

            // Atom classes: per-element (forcing set, truth) vectors.
            std::map<Key, std::pair<Formula, std::size_t>> atom_classes;
            for (const auto& a : open) {
                auto& c = atom_classes[key_of(a)];
                if (!c.first)
                    c.first = a;
                ++c.second;
            }
            std::vector<std::pair<Formula, std::size_t>> bodies;
            for (const auto& [k, c] : atom_classes) {
                bodies.emplace_back(negation(c.first), c.second);
                for (const auto& [k2, c2] : atom_classes) {
                    const auto n = c.second * c2.second;
                    bodies.emplace_back(conjunction(c.first, c2.first), n);
                    bodies.emplace_back(disjunction(c.first, c2.first), n);
                    bodies.emplace_back(implication(c.first, c2.first), n);
                }
            }
            std::map<Key, std::pair<Formula, std::size_t>> nested;
            for (const auto& t : with(terms, v))
                for (const auto& a : open2)
                    for (int q = 0; q < 2; ++q) {
                        auto body = q == 0 ? forall_in("w", t, a) : exists_in("w", t, a);
                        auto& c = nested[key_of(body)];
                        if (!c.first)
                            c.first = body;
                        ++c.second;
                    }
            for (const auto& [k, c] : nested)
                bodies.push_back(c);

            for (const auto& [body, n] : bodies)
                for (int q = 0; q < 2; ++q) {
                    const auto f = q == 0 ? forall_in("v", y, body) : exists_in("v", y, body);
                    direct(f);
                    report_.covered += n;
                }
        }
    }

private:
    ForcingContext& ctx_;
    const Poset& P_;
    OracleSuiteReport& report_;
    std::vector<ConditionIndex> mins_;
    std::vector<SemanticModel> models_;
};

} // namespace

OracleSuiteReport run_oracle_suite(ForcingContext& ctx, const NameEnv& env, std::size_t max_depth)
{
    if (max_depth < 1 || max_depth > 3)
        throw InputError("oracle suite depth must lie in 1..3");
    for (const auto& [id, n] : env.bindings)
        ctx.require_valid(n);
    OracleSuiteReport report;
    Suite suite(ctx, report);
    suite.closed(env, max_depth);
    if (max_depth == 3)
        suite.quantified(env);
    return report;
}

} // namespace forcinglab
