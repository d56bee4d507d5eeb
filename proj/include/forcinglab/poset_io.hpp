#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <forcinglab/poset.hpp>

namespace forcinglab {

/// A poset together with the named condition families declared alongside it.
struct PosetFile {
    PosetPtr poset;
    std::vector<ConditionFamily> families;

    const ConditionFamily& family(std::string_view name) const;
};

/// Line format:
///
///     poset <name>
///     top <id>
///     elem <id>
///     le <lower> <upper>
///     dense <family> <id> <id> ...
///
/// `#` starts a comment. `le` pairs need not be covers; the closure is taken.
/// Errors carry the source name and line number.
PosetFile parse_poset(std::string_view text, std::string_view source = "<input>");

/// Reads `path` and, when present, the sidecar `path.dense`.
PosetFile read_poset_file(const std::filesystem::path& path);

/// Canonical text: elements sorted, `le` lines for the covering relation
/// (plus both directions for equivalent conditions).
std::string format_poset(const Poset& P);

/// `dense <name> <ids...>` lines, one per family.
std::string format_families(const Poset& P, const std::vector<ConditionFamily>& families);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

std::vector<std::string_view> split_words(std::string_view line);

} // namespace forcinglab
