#include <forcinglab/formula.hpp>

#include <algorithm>
#include <optional>

namespace forcinglab {

namespace {

Formula node(FormulaNode n)
{
    return std::make_shared<const FormulaNode>(std::move(n));
}

} // namespace

Formula mem(Term x, Term y)
{
    return node({Op::mem, std::move(x), std::move(y), {}, nullptr, nullptr, {}});
}

Formula eq(Term x, Term y)
{
    return node({Op::eq, std::move(x), std::move(y), {}, nullptr, nullptr, {}});
}

Formula negation(Formula f)
{
    return node({Op::negation, {}, {}, {}, std::move(f), nullptr, {}});
}

Formula conjunction(Formula f, Formula g)
{
    return node({Op::conjunction, {}, {}, {}, std::move(f), std::move(g), {}});
}

Formula disjunction(Formula f, Formula g)
{
    return node({Op::disjunction, {}, {}, {}, std::move(f), std::move(g), {}});
}

Formula implication(Formula f, Formula g)
{
    return node({Op::implication, {}, {}, {}, std::move(f), std::move(g), {}});
}

Formula forall_in(std::string v, Term range, Formula body)
{
    return node({Op::forall_in, {}, std::move(range), std::move(v), std::move(body), nullptr, {}});
}

Formula exists_in(std::string v, Term range, Formula body)
{
    return node({Op::exists_in, {}, std::move(range), std::move(v), std::move(body), nullptr, {}});
}

std::size_t depth(const Formula& f)
{
    switch (f->op) {
    case Op::mem:
    case Op::eq:
        return 1;
    case Op::negation:
    case Op::forall_in:
    case Op::exists_in:
        return 1 + depth(f->a);
    default:
        return 1 + std::max(depth(f->a), depth(f->b));
    }
}

bool structurally_equal(const Formula& f, const Formula& g)
{
    if (f->op != g->op)
        return false;
    switch (f->op) {
    case Op::mem:
    case Op::eq:
        return f->lhs == g->lhs && f->rhs == g->rhs;
    case Op::negation:
        return structurally_equal(f->a, g->a);
    case Op::forall_in:
    case Op::exists_in:
        return f->var == g->var && f->rhs == g->rhs && structurally_equal(f->a, g->a);
    default:
        return structurally_equal(f->a, g->a) && structurally_equal(f->b, g->b);
    }
}

Formula substitute(const Formula& f, const std::string& v, const Term& t)
{
    auto term = [&](const Term& x) { return x.is_variable() && x.label == v ? t : x; };
    FormulaNode n = *f;
    switch (f->op) {
    case Op::mem:
    case Op::eq:
        n.lhs = term(f->lhs);
        n.rhs = term(f->rhs);
        break;
    case Op::negation:
        n.a = substitute(f->a, v, t);
        break;
    case Op::forall_in:
    case Op::exists_in:
        n.rhs = term(f->rhs);
        if (f->var != v)
            n.a = substitute(f->a, v, t);
        break;
    default:
        n.a = substitute(f->a, v, t);
        n.b = substitute(f->b, v, t);
    }
    return std::make_shared<const FormulaNode>(std::move(n));
}

namespace {

class FormulaReader {
public:
    FormulaReader(const Poset& P, const NameEnv& env) : P_(P), env_(env) {}

    Formula formula(const SExpr& e)
    {
        if (!e.is_list() || e.items.empty() || !e.items[0].is_atom())
            fail(e, "expected a formula, got " + e.to_string());
        const auto& head = e.items[0].text;
        auto arity = [&](std::size_t n) {
            if (e.items.size() != n + 1)
                fail(e, "'" + head + "' takes " + std::to_string(n) + " argument(s)");
        };
        Formula out;
        if (head == "mem" || head == "eq") {
            arity(2);
            auto x = term(e.items[1]);
            auto y = term(e.items[2]);
            out = head == "mem" ? mem(std::move(x), std::move(y)) : eq(std::move(x), std::move(y));
        } else if (head == "ingen") {
            arity(1);
            out = mem(term(e.items[1]), Term::of("gen", generic()));
        } else if (head == "not") {
            arity(1);
            out = negation(formula(e.items[1]));
        } else if (head == "and" || head == "or" || head == "imp") {
            arity(2);
            auto f = formula(e.items[1]);
            auto g = formula(e.items[2]);
            out = head == "and" ? conjunction(f, g) : head == "or" ? disjunction(f, g) : implication(f, g);
        } else if (head == "forall" || head == "exists") {
            if (e.items.size() != 5 || !e.items[1].is_atom() || !e.items[2].is_atom("in"))
                fail(e, "expected (" + head + " <var> in <term> <formula>)");
            const auto& v = e.items[1].text;
            auto range = term(e.items[3]);
            bound_.push_back(v);
            auto body = formula(e.items[4]);
            bound_.pop_back();
            out = head == "forall" ? forall_in(v, std::move(range), std::move(body))
                                   : exists_in(v, std::move(range), std::move(body));
        } else {
            fail(e.items[0], "unknown connective '" + head + "'");
        }
        auto copy = *out;
        copy.span = e.span;
        return std::make_shared<const FormulaNode>(std::move(copy));
    }

    void finish(std::string_view source) const
    {
        if (unbound_.empty())
            return;
        std::string msg = std::string(source) + ": unbound name(s):";
        for (const auto& [id, span] : unbound_)
            msg += " " + id + "@" + span.to_string();
        throw InputError(msg);
    }

private:
    Term term(const SExpr& e)
    {
        Term t;
        t.span = e.span;
        if (e.is_atom()) {
            t.label = e.text;
            if (std::find(bound_.begin(), bound_.end(), e.text) != bound_.end()) {
                t.kind = Term::Kind::variable;
            } else if (const Name* n = env_.find(e.text)) {
                t.name = *n;
            } else if (e.text == "gen") {
                t.name = generic();
            } else {
                unbound_.emplace_back(e.text, e.span);
            }
            return t;
        }
        t.label = e.to_string();
        t.name = parse_name(e, P_, env_);
        return t;
    }

    Name generic()
    {
        if (const Name* n = env_.find("gen"))
            return *n;
        if (!generic_)
            generic_ = generic_name(P_);
        return *generic_;
    }

    [[noreturn]] static void fail(const SExpr& e, const std::string& what)
    {
        throw InputError(e.span.to_string() + ": " + what);
    }

    const Poset& P_;
    const NameEnv& env_;
    std::vector<std::string> bound_;
    std::vector<std::pair<std::string, Span>> unbound_;
    std::optional<Name> generic_;
};

} // namespace

Formula parse_formula(const SExpr& e, const Poset& P, const NameEnv& env)
{
    FormulaReader r(P, env);
    auto f = r.formula(e);
    r.finish("formula");
    return f;
}

Formula parse_formula(std::string_view text, const Poset& P, const NameEnv& env)
{
    return parse_formula(parse_sexpr(text, "formula"), P, env);
}

std::string to_string(const Formula& f)
{
    switch (f->op) {
    case Op::mem:
        return "(mem " + f->lhs.label + " " + f->rhs.label + ")";
    case Op::eq:
        return "(eq " + f->lhs.label + " " + f->rhs.label + ")";
    case Op::negation:
        return "(not " + to_string(f->a) + ")";
    case Op::conjunction:
        return "(and " + to_string(f->a) + " " + to_string(f->b) + ")";
    case Op::disjunction:
        return "(or " + to_string(f->a) + " " + to_string(f->b) + ")";
    case Op::implication:
        return "(imp " + to_string(f->a) + " " + to_string(f->b) + ")";
    case Op::forall_in:
        return "(forall " + f->var + " in " + f->rhs.label + " " + to_string(f->a) + ")";
    case Op::exists_in:
        return "(exists " + f->var + " in " + f->rhs.label + " " + to_string(f->a) + ")";
    }
    return {};
}

} // namespace forcinglab
