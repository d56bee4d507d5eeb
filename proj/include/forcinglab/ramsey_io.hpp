#pragma once

#include <string>
#include <string_view>

#include <forcinglab/gnw.hpp>
#include <forcinglab/halpern_lauchli.hpp>

namespace forcinglab {

/// `family N=<universe>` then one member per line as space-separated naturals.
FinFamily parse_family(std::string_view text, std::string_view source = "family");
std::string format_family(const FinFamily& F);

/// `coloring d=<d> depth=<D> k=<k>` then `<node0> ... <node_{d-1}> -> <color>`
/// lines; tuples not listed get color 0.
LevelColoring parse_coloring(std::string_view text, std::string_view source = "coloring");
/// Lists every tuple, level by level, in lexicographic order of the tuples.
std::string format_coloring(const LevelColoring& f);

} // namespace forcinglab
