#pragma once

#include <memory>
#include <string>
#include <vector>

#include <forcinglab/names.hpp>
#include <forcinglab/sexpr.hpp>

namespace forcinglab {

/// A variable bound by an enclosing quantifier, or a resolved name.
struct Term {
    enum class Kind { variable, name };

    Kind kind = Kind::name;
    /// Variable symbol, or the text the name was written as.
    std::string label;
    Name name;
    Span span;

    static Term variable(std::string v) { return {Kind::variable, std::move(v), {}, {}}; }
    static Term of(std::string label, Name n) { return {Kind::name, std::move(label), n, {}}; }

    bool is_variable() const { return kind == Kind::variable; }
    friend bool operator==(const Term& a, const Term& b)
    {
        return a.kind == b.kind && a.label == b.label && (a.kind == Kind::variable || a.name == b.name);
    }
};

enum class Op { mem, eq, negation, conjunction, disjunction, implication, forall_in, exists_in };

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

/// Formulas of the forcing language with bounded quantifiers only.
struct FormulaNode {
    Op op = Op::mem;
    /// Atoms: lhs, rhs. Quantifiers: `var` ranges over rhs.
    Term lhs, rhs;
    std::string var;
    /// Connectives and quantifier bodies use a (and b for binary connectives).
    Formula a, b;
    Span span;
};

Formula mem(Term x, Term y);
Formula eq(Term x, Term y);
Formula negation(Formula f);
Formula conjunction(Formula f, Formula g);
Formula disjunction(Formula f, Formula g);
Formula implication(Formula f, Formula g);
Formula forall_in(std::string v, Term range, Formula body);
Formula exists_in(std::string v, Term range, Formula body);

/// Atoms count 1; each connective or quantifier adds 1.
std::size_t depth(const Formula& f);
bool structurally_equal(const Formula& f, const Formula& g);

/// f with free occurrences of variable v replaced by t.
Formula substitute(const Formula& f, const std::string& v, const Term& t);

/// Grammar: (mem t t) | (eq t t) | (not f) | (and f f) | (or f f) |
/// (imp f f) | (forall v in t f) | (exists v in t f) | (ingen t).
/// Terms are bound variables, identifiers from `env`, `gen`, or inline name
/// expressions. Unbound identifiers are collected and reported together.
Formula parse_formula(const SExpr& e, const Poset& P, const NameEnv& env);
Formula parse_formula(std::string_view text, const Poset& P, const NameEnv& env);

/// Prints in the grammar above; parse_formula(to_string(f)) reproduces f.
std::string to_string(const Formula& f);

} // namespace forcinglab
