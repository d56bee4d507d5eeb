#pragma once

// Independent checkers for the combinatorial engines. Sets are handled as
// sorted vectors and nodes as bit strings so no code is shared with the
// bitmask implementations under test.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <forcinglab/gnw.hpp>
#include <forcinglab/halpern_lauchli.hpp>

namespace roracle {

using Set = std::vector<int>;

inline Set to_vec(forcinglab::FinSet s)
{
    Set out;
    for (int i = 0; i < 32; ++i)
        if (s >> i & 1u)
            out.push_back(i);
    return out;
}

inline std::set<Set> members(const forcinglab::FinFamily& F)
{
    std::set<Set> out;
    for (auto m : F.members)
        out.insert(to_vec(m));
    return out;
}

/// Every subset of xs, in no particular order.
inline std::vector<Set> subsets(const Set& xs)
{
    std::vector<Set> out{{}};
    for (int x : xs) {
        const auto n = out.size();
        for (std::size_t i = 0; i < n; ++i) {
            auto s = out[i];
            s.push_back(x);
            out.push_back(s);
        }
    }
    for (auto& s : out)
        std::sort(s.begin(), s.end());
    return out;
}

inline bool has_prefix_in(const std::set<Set>& F, const Set& sorted)
{
    for (std::size_t k = 1; k <= sorted.size(); ++k)
        if (F.contains(Set(sorted.begin(), sorted.begin() + static_cast<long>(k))))
            return true;
    return false;
}

inline bool horn_a(const std::set<Set>& F, const Set& H)
{
    for (const auto& m : F)
        if (std::includes(H.begin(), H.end(), m.begin(), m.end()))
            return false;
    return true;
}

/// Every B ⊆ H with |B| >= m, all sizes enumerated.
inline bool horn_b(const std::set<Set>& F, const Set& H, std::size_t m)
{
    for (const auto& B : subsets(H))
        if (B.size() >= m && !has_prefix_in(F, B))
            return false;
    return true;
}

enum class Verdict { accepts, rejects, neither };

/// Block-size-s acceptance by listing every B ⊆ A above max(a).
inline std::optional<Verdict> accepts(const std::set<Set>& F, const Set& a, const Set& A, std::size_t s)
{
    Set room;
    for (int x : A)
        if (a.empty() || x > a.back())
            room.push_back(x);
    if (room.size() < s || s == 0)
        return std::nullopt;
    bool good = false, bad = false;
    for (const auto& B : subsets(room)) {
        if (B.size() != s)
            continue;
        Set u = a;
        u.insert(u.end(), B.begin(), B.end());
        (has_prefix_in(F, u) ? good : bad) = true;
    }
    return !bad ? Verdict::accepts : !good ? Verdict::rejects : Verdict::neither;
}

// ---------------------------------------------------------------------------
// Halpern–Läuchli on complete binary trees, nodes as strings over {0,1}.

using Node = std::string;

inline std::vector<Node> level(std::size_t l)
{
    std::vector<Node> out{""};
    for (std::size_t i = 0; i < l; ++i) {
        std::vector<Node> next;
        for (const auto& u : out) {
            next.push_back(u + "0");
            next.push_back(u + "1");
        }
        out = std::move(next);
    }
    return out;
}

inline bool extends(const Node& v, const Node& u)
{
    return v.size() >= u.size() && v.compare(0, u.size(), u) == 0;
}

inline std::vector<Node> above(const Node& t, std::size_t l)
{
    std::vector<Node> out;
    for (const auto& u : level(l))
        if (extends(u, t))
            out.push_back(u);
    return out;
}

using Color = std::function<int(const std::vector<Node>&)>;

/// Whether sets picking one level-n extension of each level-m node above
/// t[i] can be chosen with f constant c on their product.
inline bool row_exists(std::size_t d, const Color& f, const std::vector<Node>& t, std::size_t m, std::size_t n, int c)
{
    if (d == 1) {
        for (const auto& u : above(t[0], m)) {
            bool ok = false;
            for (const auto& v : above(u, n))
                ok = ok || f({v}) == c;
            if (!ok)
                return false;
        }
        return true;
    }
    // d == 2: enumerate every choice for tree 0, then each tree-1 node picks
    // independently.
    const auto us = above(t[0], m);
    std::vector<std::vector<Node>> opts;
    for (const auto& u : us)
        opts.push_back(above(u, n));
    std::vector<std::size_t> pick(us.size(), 0);
    for (;;) {
        std::vector<Node> D0;
        for (std::size_t i = 0; i < us.size(); ++i)
            D0.push_back(opts[i][pick[i]]);
        bool all = true;
        for (const auto& u1 : above(t[1], m)) {
            bool ok = false;
            for (const auto& v1 : above(u1, n)) {
                bool constant = true;
                for (const auto& v0 : D0)
                    constant = constant && f({v0, v1}) == c;
                ok = ok || constant;
            }
            if (!ok) {
                all = false;
                break;
            }
        }
        if (all)
            return true;
        std::size_t i = 0;
        while (i < us.size() && ++pick[i] == opts[i].size())
            pick[i++] = 0;
        if (i == us.size())
            return false;
    }
}

/// Least n for row m above t, over colors 0..k-1; nullopt when none.
inline std::optional<std::size_t> least_n(std::size_t d, std::size_t depth, std::size_t k, const Color& f,
    const std::vector<Node>& t, std::size_t m)
{
    for (std::size_t n = m; n <= depth; ++n)
        for (int c = 0; c < static_cast<int>(k); ++c)
            if (row_exists(d, f, t, m, n, c))
                return n;
    return std::nullopt;
}

inline bool good_tuple(std::size_t d, std::size_t depth, std::size_t k, const Color& f, const std::vector<Node>& t)
{
    for (std::size_t m = t[0].size(); m < depth; ++m)
        if (!least_n(d, depth, k, f, t, m))
            return false;
    return true;
}

/// Least l admitting some tuple at level l, by trying every tuple.
inline std::size_t minimal_level(std::size_t d, std::size_t depth, std::size_t k, const Color& f)
{
    for (std::size_t l = 0;; ++l) {
        for (const auto& a : level(l)) {
            if (d == 1) {
                if (good_tuple(d, depth, k, f, {a}))
                    return l;
                continue;
            }
            for (const auto& b : level(l))
                if (good_tuple(d, depth, k, f, {a, b}))
                    return l;
        }
    }
}

/// Recomputes every row of a witness from the definitions.
inline bool witness_valid(std::size_t d, std::size_t depth, const Color& f, const forcinglab::HLWitness& w)
{
    if (w.t.size() != d || w.rows.size() != depth - w.l)
        return false;
    std::vector<Node> t;
    for (const auto& x : w.t) {
        if (x.len != w.l)
            return false;
        t.push_back(x.to_string() == "ε" ? "" : x.to_string());
    }
    for (std::size_t r = 0; r < w.rows.size(); ++r) {
        const auto& row = w.rows[r];
        if (row.m != w.l + r || row.n < row.m || row.n > depth || row.sets.size() != d)
            return false;
        std::vector<std::vector<Node>> sets;
        for (std::size_t i = 0; i < d; ++i) {
            std::vector<Node> s;
            for (const auto& v : row.sets[i]) {
                auto text = v.to_string() == "ε" ? std::string() : v.to_string();
                if (text.size() != row.n)
                    return false;
                s.push_back(text);
            }
            for (const auto& u : above(t[i], row.m))
                if (std::none_of(s.begin(), s.end(), [&](const Node& v) { return extends(v, u); }))
                    return false;
            sets.push_back(s);
        }
        if (d == 1) {
            for (const auto& v : sets[0])
                if (f({v}) != row.color)
                    return false;
        } else {
            for (const auto& a : sets[0])
                for (const auto& b : sets[1])
                    if (f({a, b}) != row.color)
                        return false;
        }
    }
    return true;
}

/// Reads a LevelColoring through string nodes.
inline Color color_of(const forcinglab::LevelColoring& f)
{
    return [&f](const std::vector<Node>& tuple) {
        std::vector<forcinglab::TreeNode> nodes;
        for (const auto& s : tuple)
            nodes.push_back(forcinglab::TreeNode::parse(s.empty() ? "ε" : s));
        return f.at(nodes);
    };
}

} // namespace roracle
