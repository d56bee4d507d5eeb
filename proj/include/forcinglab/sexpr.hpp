#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <forcinglab/hf.hpp>

namespace forcinglab {

struct Span {
    std::size_t line = 1;
    std::size_t column = 1;

    std::string to_string() const { return std::to_string(line) + ":" + std::to_string(column); }
};

/// S-expression with `#{...}` HF literals as a distinct leaf kind.
struct SExpr {
    enum class Kind { atom, list, hf };

    Kind kind = Kind::atom;
    std::string text;
    std::vector<SExpr> items;
    HFSet hf;
    Span span;

    bool is_atom() const { return kind == Kind::atom; }
    bool is_atom(std::string_view s) const { return kind == Kind::atom && text == s; }
    bool is_list() const { return kind == Kind::list; }
    /// A list whose first item is the atom `head`.
    bool is_form(std::string_view head) const { return is_list() && !items.empty() && items[0].is_atom(head); }

    std::string to_string() const;
};

/// Parses every top-level expression. `;` starts a comment running to the end
/// of the line. Throws InputError with a line:column position.
std::vector<SExpr> parse_sexprs(std::string_view text, std::string_view source = "<input>");

/// Exactly one expression.
SExpr parse_sexpr(std::string_view text, std::string_view source = "<input>");

} // namespace forcinglab
