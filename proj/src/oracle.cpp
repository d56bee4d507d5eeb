#include <forcinglab/oracle.hpp>

#include <stdexcept>
#include <unordered_map>

namespace forcinglab {

bool SemanticModel::holds(const Formula& f)
{
    vars_.clear();
    return eval(f);
}

HFSet SemanticModel::value(Name n)
{
    auto [it, fresh] = names_.try_emplace(n.handle());
    if (fresh)
        it->second = interpret_unchecked(n, G_);
    return it->second;
}

bool SemanticModel::eval(const Formula& f)
{
    switch (f->op) {
    case Op::mem:
        return value(f->rhs).contains(value(f->lhs));
    case Op::eq:
        return value(f->lhs) == value(f->rhs);
    case Op::negation:
        return !eval(f->a);
    case Op::conjunction:
        return eval(f->a) && eval(f->b);
    case Op::disjunction:
        return eval(f->a) || eval(f->b);
    case Op::implication:
        return !eval(f->a) || eval(f->b);
    case Op::forall_in:
    case Op::exists_in: {
        const bool forall = f->op == Op::forall_in;
        for (auto x : value(f->rhs).elements()) {
            vars_.emplace_back(f->var, x);
            const bool holds = eval(f->a);
            vars_.pop_back();
            if (holds != forall)
                return !forall;
        }
        return forall;
    }
    }
    throw std::logic_error("unknown formula node");
}

HFSet SemanticModel::value(const Term& t)
{
    if (!t.is_variable())
        return value(t.name);
    for (auto it = vars_.rbegin(); it != vars_.rend(); ++it)
        if (it->first == t.label)
            return it->second;
    throw InputError("unbound variable '" + t.label + "'");
}

bool evaluate(const Formula& f, const ConditionSet& G)
{
    return SemanticModel(G).holds(f);
}

ConditionSet oracle_set(const Poset& P, const Formula& f)
{
    ConditionSet bad_minimal = P.empty_set();
    const auto& mins = P.minimal();
    for (auto m = mins.find_first(); m != ConditionSet::npos; m = mins.find_next(m))
        if (!evaluate(f, P.up(m)))
            bad_minimal.set(m);
    ConditionSet out = P.empty_set();
    for (std::size_t p = 0; p < P.size(); ++p)
        if (!P.down(p).intersects(bad_minimal))
            out.set(p);
    return out;
}

std::vector<OracleDisagreement> compare_with_oracle(ForcingContext& ctx, const Formula& f)
{
    const auto forced = ctx.forcing_set(f);
    const auto oracle = oracle_set(ctx.poset(), f);
    std::vector<OracleDisagreement> out;
    const auto diff = forced ^ oracle;
    for (auto p = diff.find_first(); p != ConditionSet::npos; p = diff.find_next(p))
        out.push_back({p, forced.test(p), oracle.test(p)});
    return out;
}

} // namespace forcinglab
