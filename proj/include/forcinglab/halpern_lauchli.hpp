#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace forcinglab {

/// A binary string of length `len`; `code` holds it with the first bit most
/// significant.
struct TreeNode {
    std::uint8_t len = 0;
    std::uint32_t code = 0;

    static TreeNode parse(std::string_view bits);
    std::string to_string() const;
    TreeNode child(int bit) const { return {static_cast<std::uint8_t>(len + 1), code << 1 | static_cast<std::uint32_t>(bit)}; }
    /// Initial segment of length l <= len.
    TreeNode prefix(std::size_t l) const { return {static_cast<std::uint8_t>(l), code >> (len - l)}; }
    bool is_initial_segment_of(const TreeNode& v) const { return len <= v.len && v.prefix(len) == *this; }

    friend bool operator==(const TreeNode&, const TreeNode&) = default;
    friend auto operator<=>(const TreeNode&, const TreeNode&) = default;
};

/// A pruned binary tree of height `depth`: all nodes of length <= depth when
/// complete, or an explicit set closed under initial segments.
class LevelTree {
public:
    static LevelTree complete(std::size_t depth);
    /// Throws InputError unless `nodes` contains the root, is closed under
    /// initial segments, and every node shorter than depth has a child.
    static LevelTree from_nodes(std::size_t depth, std::set<TreeNode> nodes);

    std::size_t depth() const { return depth_; }
    bool contains(const TreeNode& u) const;
    /// (T)_l in increasing order.
    std::vector<TreeNode> level(std::size_t l) const;
    std::vector<TreeNode> children(const TreeNode& u) const;

private:
    std::size_t depth_ = 0;
    bool complete_ = true;
    std::set<TreeNode> nodes_;
};

/// D ⊆ (T)_n and every u in (T)_m extending t has an extension in D.
/// Throws InputError unless |t| <= m <= n <= depth.
bool is_mn_dense(const LevelTree& T, const std::vector<TreeNode>& D, const TreeNode& t, std::size_t m, std::size_t n);

/// f : ⋃_l ∏_{i<d} (2^{<=depth})_l -> {0..k-1} on complete binary trees.
class LevelColoring {
public:
    LevelColoring(std::size_t d, std::size_t depth, std::size_t k);

    std::size_t dimension() const { return d_; }
    std::size_t depth() const { return depth_; }
    std::size_t colors() const { return k_; }

    int at(const std::vector<TreeNode>& tuple) const;
    void set(const std::vector<TreeNode>& tuple, int color);
    /// Raw values at level l, indexed by sum of code_i << (l * i).
    std::vector<std::uint8_t>& level_values(std::size_t l) { return values_.at(l); }
    const std::vector<std::uint8_t>& level_values(std::size_t l) const { return values_.at(l); }

private:
    std::size_t index(const std::vector<TreeNode>& tuple) const;

    std::size_t d_, depth_, k_;
    std::vector<std::vector<std::uint8_t>> values_;
};

struct HLRow {
    std::size_t m = 0;
    std::size_t n = 0;
    int color = 0;
    /// One set per tree, sorted.
    std::vector<std::vector<TreeNode>> sets;
};

struct HLWitness {
    std::size_t l = 0;
    std::vector<TreeNode> t;
    /// One row per m = l .. depth-1.
    std::vector<HLRow> rows;

    std::string to_string() const;
};

/// Least l, then lexicographically least t̄ in (T)_l^d, such that every
/// m in [l, depth-1] has a row: the least n >= m and color c admitting sets
/// D_i that pick one level-n extension of each level-m node above t_i with f
/// constant c on ∏ D_i. Requires d <= 2 and depth <= 5.
std::optional<HLWitness> hl_search(const LevelColoring& f);

/// Every row passes is_mn_dense per tree and f is constant on its product.
bool check_hl_witness(const LevelColoring& f, const HLWitness& w);

struct StrongSubtree {
    std::set<TreeNode> nodes;
    /// Levels where every node keeps all immediate successors of T.
    std::vector<std::size_t> base;
};

/// Builds a subtree of the downward closure of ⋃ denses from the least node
/// at level m_0 above t: at each m_p, every immediate successor of every
/// chosen node is extended to level m_{p+1} inside the closure when possible.
/// m_p joins the base when that succeeds for all successors; otherwise each
/// chosen node is followed by a single extension into denses[p].
/// Throws InputError naming p when denses[p] is not (m_p, m_{p+1})-dense.
StrongSubtree strong_subtree_assemble(const LevelTree& T, const TreeNode& t,
    const std::vector<std::vector<TreeNode>>& denses, const std::vector<std::size_t>& levels);

/// S ⊆ T, S closed under initial segments, and each s in S with |s| in base
/// (and |s| < depth) has all T-successors in S.
bool is_strong_subtree(const LevelTree& T, const std::set<TreeNode>& S, const std::vector<std::size_t>& base);

} // namespace forcinglab
