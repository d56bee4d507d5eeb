#pragma once

// Forcing properties as exhaustive checks over one (poset, environment)
// pair. Shared by the unit tests (small inputs) and the acceptance run (the
// full corpus). Every check recomputes its right-hand side from Poset::leq,
// HF sets or the filter interpretation rather than from the forcing engine.

#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <forcinglab/completion.hpp>
#include <forcinglab/corpus.hpp>
#include <forcinglab/forcing.hpp>
#include <forcinglab/oracle.hpp>

#include "oracles.hpp"

namespace props {

using namespace forcinglab;

struct Tally {
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::vector<std::string> notes;

    void check(bool ok, const std::function<std::string()>& what)
    {
        ++checked;
        if (ok)
            return;
        ++failed;
        if (notes.size() < 10)
            notes.push_back(what());
    }
    void merge(const Tally& o)
    {
        checked += o.checked;
        failed += o.failed;
        for (const auto& n : o.notes)
            if (notes.size() < 10)
                notes.push_back(n);
    }
};

/// V_n: HF sets of rank < n.
inline std::vector<HFSet> cumulative(std::size_t n)
{
    std::vector<HFSet> v;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<HFSet> next;
        for (std::uint32_t mask = 0; mask < (1u << v.size()); ++mask) {
            std::vector<HFSet> elems;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (mask >> j & 1)
                    elems.push_back(v[j]);
            next.push_back(HFSet::make(elems));
        }
        v = std::move(next);
    }
    return v;
}

/// below[p] lists every q with q <= p, read off Poset::leq.
inline std::vector<std::vector<ConditionIndex>> below_lists(const Poset& P)
{
    std::vector<std::vector<ConditionIndex>> out(P.size());
    for (ConditionIndex p = 0; p < P.size(); ++p)
        for (ConditionIndex q = 0; q < P.size(); ++q)
            if (P.leq(q, p))
                out[p].push_back(q);
    return out;
}

inline std::string where(const Poset& P, ConditionIndex p, const Formula& f)
{
    return P.name() + " @" + P.id(p) + ": " + to_string(f);
}

/// p forces x̌ ∈ y̌ iff x ∈ y, and p forces x̌ = y̌ iff x = y, for x, y of rank < 3.
inline void check_atoms(ForcingContext& ctx, Tally& t)
{
    const auto& P = ctx.poset();
    const auto V = cumulative(3);
    for (auto x : V)
        for (auto y : V) {
            const auto nx = check_name(x, P), ny = check_name(y, P);
            const auto& m = ctx.mem_set(nx, ny);
            const auto& e = ctx.eq_set(nx, ny);
            for (ConditionIndex p = 0; p < P.size(); ++p) {
                t.check(m.test(p) == y.contains(x), [&] { return P.name() + " check mem " + x.to_string() + " " + y.to_string(); });
                t.check(e.test(p) == (x == y), [&] { return P.name() + " check eq " + x.to_string() + " " + y.to_string(); });
            }
        }
}

/// compat[p] = {r : some s <= p, r}, read off Poset::leq.
inline std::vector<ConditionSet> compatibility_rows(const Poset& P)
{
    std::vector<ConditionSet> rows(P.size(), ConditionSet(P.size()));
    for (ConditionIndex s = 0; s < P.size(); ++s)
        for (ConditionIndex p = 0; p < P.size(); ++p)
            if (P.leq(s, p))
                for (ConditionIndex r = 0; r < P.size(); ++r)
                    if (P.leq(s, r))
                        rows[p].set(r);
    return rows;
}

/// oracle::is_regular_open with compatibility read off a precomputed table.
class RegularOpenTest {
public:
    explicit RegularOpenTest(const Poset& P) : below_(below_lists(P)), compat_(compatibility_rows(P)) {}

    bool operator()(const ConditionSet& U) const
    {
        for (ConditionIndex p = 0; p < below_.size(); ++p) {
            bool dense_below = true;
            for (auto r : below_[p])
                if (!(dense_below = compat_[r].intersects(U)))
                    break;
            if (dense_below != U.test(p))
                return false;
        }
        return true;
    }

private:
    std::vector<std::vector<ConditionIndex>> below_;
    std::vector<ConditionSet> compat_;
};

/// p forces q̌ ∈ Ġ iff every r compatible with p is compatible with q; on a
/// separative poset that is p <= q.
inline void check_generic(ForcingContext& ctx, Tally& t)
{
    const auto& P = ctx.poset();
    const auto G = generic_name(P);
    const auto compat = compatibility_rows(P);
    bool separative = true;
    for (ConditionIndex p = 0; p < P.size() && separative; ++p)
        for (ConditionIndex q = 0; q < P.size() && separative; ++q)
            if (!P.leq(p, q)) {
                bool found = false;
                for (ConditionIndex r = 0; r < P.size() && !found; ++r)
                    found = P.leq(r, p) && !compat[r].test(q);
                separative = found;
            }
    for (ConditionIndex q = 0; q < P.size(); ++q) {
        const auto& s = ctx.mem_set(check_name(condition_code(q), P), G);
        for (ConditionIndex p = 0; p < P.size(); ++p) {
            const bool expected = compat[p].is_subset_of(compat[q]);
            t.check(s.test(p) == expected, [&] { return P.name() + " generic @" + P.id(p) + " q=" + P.id(q); });
            if (separative)
                t.check(s.test(p) == P.leq(p, q), [&] { return P.name() + " separative generic @" + P.id(p) + " q=" + P.id(q); });
        }
    }
}

/// decide_name_value lists each minimal m <= p once, with the interpretation
/// of y under up(m), and m forces y equal to the check of that value.
inline void check_decide_value(ForcingContext& ctx, const NameEnv& env, Tally& t)
{
    const auto& P = ctx.poset();
    std::vector<Name> names{generic_name(P)};
    for (const auto& [id, n] : env.bindings)
        names.push_back(n);
    std::vector<ConditionIndex> minimal;
    for (ConditionIndex m = 0; m < P.size(); ++m) {
        bool is_min = true;
        for (ConditionIndex r = 0; r < P.size() && is_min; ++r)
            is_min = !P.leq(r, m) || P.leq(m, r);
        if (is_min)
            minimal.push_back(m);
    }
    // The value at a minimal q does not depend on p, so each (y, q) is checked once.
    std::set<std::pair<std::uint32_t, ConditionIndex>> seen;
    for (auto y : names)
        for (ConditionIndex p = 0; p < P.size(); ++p) {
            const auto got = ctx.decide_name_value(p, y);
            std::vector<ConditionIndex> mins;
            for (auto m : minimal)
                if (P.leq(m, p))
                    mins.push_back(m);
            t.check(!got.empty() && got.size() == mins.size(), [&] { return P.name() + " decide_name_value count @" + P.id(p); });
            for (std::size_t i = 0; i < got.size() && i < mins.size(); ++i) {
                const auto [q, z] = got[i];
                t.check(q == mins[i] && P.leq(q, p), [&] { return P.name() + " decide_name_value condition @" + P.id(p); });
                if (!seen.insert({y.handle(), q}).second)
                    continue;
                t.check(z == interpret(y, P, P.up(q)), [&] { return P.name() + " decide_name_value value @" + P.id(q); });
                t.check(ctx.eq_set(y, check_name(z, P)).test(q), [&] { return P.name() + " decide_name_value forcing @" + P.id(q); });
            }
        }
}

/// For each formula: the negation clause as a biconditional, monotonicity,
/// and density of the deciding conditions.
inline void check_connective_laws(ForcingContext& ctx, const std::vector<Formula>& formulas, Tally& t)
{
    const auto& P = ctx.poset();
    const auto below = below_lists(P);
    for (const auto& f : formulas) {
        const auto yes = ctx.forcing_set(f);
        const auto no = ctx.forcing_set(negation(f));
        for (ConditionIndex p = 0; p < P.size(); ++p) {
            bool some_forces = false, some_decides = false, down_ok = true;
            for (auto q : below[p]) {
                some_forces = some_forces || yes.test(q);
                some_decides = some_decides || yes.test(q) || no.test(q);
                if (yes.test(p) && !yes.test(q))
                    down_ok = false;
            }
            t.check(no.test(p) == !some_forces, [&] { return "negation " + where(P, p, f); });
            t.check(down_ok, [&] { return "monotone " + where(P, p, f); });
            t.check(some_decides, [&] { return "decision dense " + where(P, p, f); });
        }
    }
}

/// Forced equality is reflexive, symmetric and transitive at every condition.
inline void check_equality(ForcingContext& ctx, const NameEnv& env, Tally& t)
{
    const auto& P = ctx.poset();
    std::vector<Name> names;
    for (const auto& [id, n] : env.bindings)
        names.push_back(n);
    for (auto x : names) {
        t.check(ctx.eq_set(x, x).all(), [&] { return P.name() + " eq reflexive"; });
        for (auto y : names) {
            t.check(ctx.eq_set(x, y) == ctx.eq_set(y, x), [&] { return P.name() + " eq symmetric"; });
            for (auto z : names) {
                const auto both = ctx.eq_set(x, y) & ctx.eq_set(y, z);
                t.check(both.is_subset_of(ctx.eq_set(x, z)), [&] { return P.name() + " eq transitive"; });
            }
        }
    }
}

inline std::vector<Formula> open_bodies(const NameEnv& env)
{
    std::vector<Term> terms{Term::variable("v")};
    for (const auto& [id, n] : env.bindings)
        terms.push_back(Term::of(id, n));
    auto out = atoms_over(terms);
    const auto n = out.size();
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(negation(out[i]));
    return out;
}

/// If p forces φ(y̌) for every y ∈ x then p forces ∀v ∈ x̌ φ(v).
inline void check_quantified_checks(ForcingContext& ctx, const NameEnv& env, Tally& t)
{
    const auto& P = ctx.poset();
    const auto bodies = open_bodies(env);
    for (auto x : cumulative(3)) {
        const auto range = Term::of(x.to_string(), check_name(x, P));
        for (const auto& body : bodies) {
            auto all = P.full_set();
            for (auto y : x.elements())
                all &= ctx.forcing_set(substitute(body, "v", Term::of(y.to_string(), check_name(y, P))));
            const auto f = forall_in("v", range, body);
            const auto s = ctx.forcing_set(f);
            for (ConditionIndex p = 0; p < P.size(); ++p)
                t.check(!all.test(p) || s.test(p), [&] { return "check quantifier " + where(P, p, f); });
        }
    }
}

/// Direct HF evaluation of a formula whose names are all check names.
class HFEval {
public:
    explicit HFEval(const Poset& P) : P_(P) {}

    bool holds(const Formula& f)
    {
        switch (f->op) {
        case Op::mem:
            return value(f->rhs).contains(value(f->lhs));
        case Op::eq:
            return value(f->lhs) == value(f->rhs);
        case Op::negation:
            return !holds(f->a);
        case Op::conjunction:
            return holds(f->a) && holds(f->b);
        case Op::disjunction:
            return holds(f->a) || holds(f->b);
        case Op::implication:
            return !holds(f->a) || holds(f->b);
        case Op::forall_in:
        case Op::exists_in: {
            const bool forall = f->op == Op::forall_in;
            for (auto y : value(f->rhs).elements()) {
                vars_.emplace_back(f->var, y);
                const bool b = holds(f->a);
                vars_.pop_back();
                if (b != forall)
                    return b;
            }
            return forall;
        }
        }
        return false;
    }

private:
    HFSet value(const Term& t)
    {
        if (!t.is_variable())
            return check_value(t.name, P_).value();
        for (auto it = vars_.rbegin(); it != vars_.rend(); ++it)
            if (it->first == t.label)
                return it->second;
        throw std::logic_error("unbound " + t.label);
    }

    const Poset& P_;
    Bindings<HFSet> vars_;
};

/// Check names of the four sets of rank < 2 plus the natural 2.
inline NameEnv check_environment(const Poset& P)
{
    NameEnv env;
    const auto V = cumulative(3);
    const char* ids[] = {"zero", "one", "s", "two"};
    for (std::size_t i = 0; i < V.size(); ++i)
        env.bind(ids[i], check_name(V[i], P));
    return env;
}

/// Bounded sentences over check names: top forces the true ones and forces
/// the negation of the false ones. Depth <= 2 sentences plus nested
/// quantifiers Q v ∈ a Q' w ∈ b (atom over v, w and the names).
inline void check_bounded_absoluteness(ForcingContext& ctx, Tally& t)
{
    const auto& P = ctx.poset();
    const auto env = check_environment(P);
    HFEval hf(P);
    auto test = [&](const Formula& f) {
        const bool truth = hf.holds(f);
        t.check(ctx.decides(P.top(), f) == (truth ? Decision::forces : Decision::forces_negation),
            [&] { return "bounded " + where(P, P.top(), f); });
    };
    for (const auto& f : closed_formulas(env, 2))
        test(f);
    std::vector<Term> terms{Term::variable("v"), Term::variable("w")};
    for (const auto& [id, n] : env.bindings)
        terms.push_back(Term::of(id, n));
    const auto atoms = atoms_over(terms);
    for (const auto& [a, na] : env.bindings)
        for (const auto& [b, nb] : env.bindings)
            for (const auto& atom : atoms) {
                test(forall_in("v", Term::of(a, na), exists_in("w", Term::of(b, nb), atom)));
                test(exists_in("v", Term::of(a, na), forall_in("w", Term::of(b, nb), atom)));
            }
}

/// Completion identities for one formula list: ⟦¬φ⟧ = ⟦φ⟧ᶜ, ⟦φ∧ψ⟧ = meet,
/// ⟦φ∨ψ⟧ = join, p forces φ iff embedding(p) <= ⟦φ⟧, and the bounded
/// quantifier forms ⟦∀v∈y φ⟧ = ⋀ (embedding(r) ⇒ ⟦φ(z)⟧), ⟦∃v∈y φ⟧ = ⋁
/// (embedding(r) ∧ ⟦φ(z)⟧) over the entries (z, r) of y.
inline void check_truth_values(ForcingContext& ctx, const RegularOpenAlgebra& A, const std::vector<Formula>& formulas,
    const NameEnv& env, Tally& t)
{
    const auto& P = ctx.poset();
    const RegularOpenTest regular_open(P);
    std::vector<ConditionSet> tv;
    for (const auto& f : formulas)
        tv.push_back(ctx.truth_value(A, f));
    for (std::size_t i = 0; i < formulas.size(); ++i) {
        const auto& f = formulas[i];
        t.check(regular_open(tv[i]), [&] { return "regular open " + to_string(f); });
        t.check(ctx.truth_value(A, negation(f)) == A.complement(tv[i]), [&] { return "neg value " + to_string(f); });
        t.check(ctx.truth_value(A, conjunction(f, negation(f))) == A.zero(), [&] { return "contradiction " + to_string(f); });
        const auto forced = ctx.forcing_set(f);
        for (ConditionIndex p = 0; p < P.size(); ++p)
            t.check(forced.test(p) == A.leq(A.embedding(p), tv[i]), [&] { return "embedding " + where(P, p, f); });
        const std::size_t j = (i * 7 + 3) % formulas.size();
        const auto& g = formulas[j];
        t.check(ctx.truth_value(A, conjunction(f, g)) == A.meet(tv[i], tv[j]), [&] { return "and value " + to_string(f); });
        t.check(ctx.truth_value(A, disjunction(f, g)) == A.join(tv[i], tv[j]), [&] { return "or value " + to_string(f); });
    }
    const auto bodies = open_bodies(env);
    for (const auto& [id, y] : env.bindings)
        for (const auto& body : bodies) {
            auto all = A.one();
            auto some = A.zero();
            for (const auto& [z, r] : y.entries()) {
                const auto v = ctx.truth_value(A, substitute(body, "v", Term::of("z", z)));
                all = A.meet(all, A.join(A.complement(A.embedding(r)), v));
                some = A.join(some, A.meet(A.embedding(r), v));
            }
            const auto range = Term::of(id, y);
            t.check(ctx.truth_value(A, forall_in("v", range, body)) == all, [&] { return "forall value " + id + " " + to_string(body); });
            t.check(ctx.truth_value(A, exists_in("v", range, body)) == some, [&] { return "exists value " + id + " " + to_string(body); });
        }
}

} // namespace props
