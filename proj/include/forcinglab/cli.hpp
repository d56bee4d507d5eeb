#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <forcinglab/completion.hpp>
#include <forcinglab/names.hpp>
#include <forcinglab/poset_io.hpp>

namespace forcinglab {

/// A poset file with its dense families and, optionally, a names file.
struct Workspace {
    PosetFile file;
    NameEnv names;

    const Poset& poset() const { return *file.poset; }
    const RegularOpenAlgebra& algebra();

private:
    std::unique_ptr<RegularOpenAlgebra> algebra_;
};

Workspace load_workspace(const std::filesystem::path& poset,
    const std::optional<std::filesystem::path>& names = std::nullopt);

/// Runs one command line (without the program name). Exit codes: 0 success
/// or true, 1 false or undecided, 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace forcinglab
