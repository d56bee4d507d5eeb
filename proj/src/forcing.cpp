#include <forcinglab/forcing.hpp>

#include <stdexcept>

namespace forcinglab {

std::string_view to_string(Decision d)
{
    switch (d) {
    case Decision::forces:
        return "forces";
    case Decision::forces_negation:
        return "forces-negation";
    case Decision::undecided:
        return "undecided";
    }
    return "?";
}

namespace {

std::uint64_t pair_key(Name x, Name y)
{
    return std::uint64_t{x.handle()} << 32 | y.handle();
}

} // namespace

ForcingContext::ForcingContext(PosetPtr P, NameDiscipline discipline) :
    P_(std::move(P)), discipline_(discipline)
{
}

ConditionSet ForcingContext::not_below(const ConditionSet& s) const
{
    ConditionSet out = P_->empty_set();
    if (s.none()) {
        out.set();
        return out;
    }
    for (std::size_t p = 0; p < P_->size(); ++p)
        if (!P_->down(p).intersects(s))
            out.set(p);
    return out;
}

const ConditionSet& ForcingContext::mem_set(Name x, Name y)
{
    const auto key = pair_key(x, y);
    if (auto it = mem_.find(key); it != mem_.end())
        return it->second;
    ConditionSet witnesses = P_->empty_set();
    for (const auto& [z, q] : y.entries())
        witnesses |= P_->down(q) & eq_set(x, z);
    auto result = not_below(not_below(witnesses));
    return mem_.emplace(key, std::move(result)).first->second;
}

const ConditionSet& ForcingContext::eq_set(Name x, Name y)
{
    if (y < x)
        std::swap(x, y);
    const auto key = pair_key(x, y);
    if (auto it = eq_.find(key); it != eq_.end())
        return it->second;
    ConditionSet differ = P_->empty_set();
    auto scan = [&](const std::vector<Name>& zs) {
        for (auto z : zs)
            differ |= mem_set(z, x) ^ mem_set(z, y);
    };
    scan(x.descendants());
    scan(y.descendants());
    auto result = not_below(differ);
    return eq_.emplace(key, std::move(result)).first->second;
}

void ForcingContext::require_valid(Name n)
{
    if (validated_.contains(n.handle()))
        return;
    if (auto v = validate_name(n, *P_, discipline_))
        throw InputError("name breaks the name discipline at " + v->describe(*P_));
    validated_.insert(n.handle());
}

Name ForcingContext::resolve(const Term& t, const Bindings<Name>& env)
{
    if (!t.is_variable()) {
        require_valid(t.name);
        return t.name;
    }
    for (auto it = env.rbegin(); it != env.rend(); ++it)
        if (it->first == t.label)
            return it->second;
    throw InputError("unbound variable '" + t.label + "'");
}

ConditionSet ForcingContext::eval(const Formula& f, Bindings<Name>& env)
{
    switch (f->op) {
    case Op::mem:
        return mem_set(resolve(f->lhs, env), resolve(f->rhs, env));
    case Op::eq:
        return eq_set(resolve(f->lhs, env), resolve(f->rhs, env));
    case Op::negation:
        return not_below(eval(f->a, env));
    case Op::conjunction:
        return eval(f->a, env) & eval(f->b, env);
    case Op::disjunction:
        return not_below(not_below(eval(f->a, env)) & not_below(eval(f->b, env)));
    case Op::implication:
        return not_below(eval(f->a, env) & not_below(eval(f->b, env)));
    case Op::forall_in:
    case Op::exists_in: {
        const Name range = resolve(f->rhs, env);
        const bool forall = f->op == Op::forall_in;
        ConditionSet acc = forall ? P_->full_set() : P_->empty_set();
        for (const auto& [z, r] : range.entries()) {
            env.emplace_back(f->var, z);
            auto body = eval(f->a, env);
            env.pop_back();
            if (forall)
                acc &= not_below(P_->down(r) - body);
            else
                acc |= P_->down(r) & body;
        }
        return forall ? acc : not_below(not_below(acc));
    }
    }
    throw std::logic_error("unknown formula node");
}

ConditionSet ForcingContext::forcing_set(const Formula& f)
{
    Bindings<Name> env;
    return eval(f, env);
}

Decision ForcingContext::decides(ConditionIndex p, const Formula& f)
{
    const auto yes = forcing_set(f);
    if (yes.test(p))
        return Decision::forces;
    if (not_below(yes).test(p))
        return Decision::forces_negation;
    return Decision::undecided;
}

std::vector<std::pair<ConditionIndex, HFSet>> ForcingContext::decide_name_value(ConditionIndex p, Name y)
{
    require_valid(y);
    std::vector<std::pair<ConditionIndex, HFSet>> out;
    for (auto m : P_->minimal_below(p)) {
        auto [it, fresh] = values_.try_emplace({y.handle(), m});
        if (fresh) {
            it->second = interpret_unchecked(y, P_->up(m));
            if (!eq_set(y, check_name(it->second, *P_)).test(m))
                throw std::logic_error("minimal condition " + P_->id(m) + " does not force the value it interprets");
        }
        out.emplace_back(m, it->second);
    }
    if (out.empty())
        throw std::logic_error("no minimal condition below " + P_->id(p));
    return out;
}

ConditionSet ForcingContext::truth_value(const RegularOpenAlgebra& A, const Formula& f)
{
    return A.ro(forcing_set(f));
}

} // namespace forcinglab
