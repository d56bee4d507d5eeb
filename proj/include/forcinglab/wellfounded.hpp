#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace forcinglab {

using Sequence = std::vector<std::uint8_t>;

/// A finite set of sequences closed under initial segments (the empty
/// sequence included).
class SequenceTree {
public:
    /// Throws InputError when `seqs` is not closed under initial segments or
    /// holds more than 200 nodes.
    static SequenceTree make(std::set<Sequence> seqs);

    const std::set<Sequence>& nodes() const { return nodes_; }
    std::vector<Sequence> children(const Sequence& s) const;

private:
    std::set<Sequence> nodes_;
};

/// Some node of length n, found by depth-first search from the root.
std::optional<Sequence> find_path(const SequenceTree& T, std::size_t n);

using RankFunction = std::map<Sequence, std::size_t>;

/// A map into {0..n-1} that strictly decreases from each node to its
/// children, built from node heights; nullopt when none exists.
std::optional<RankFunction> find_rank(const SequenceTree& T, std::size_t n);

bool is_rank_function(const SequenceTree& T, const RankFunction& rho, std::size_t n);

} // namespace forcinglab
