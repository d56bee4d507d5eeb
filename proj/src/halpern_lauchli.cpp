#include <forcinglab/halpern_lauchli.hpp>

#include <algorithm>
#include <functional>

#include <forcinglab/poset.hpp>

namespace forcinglab {

TreeNode TreeNode::parse(std::string_view bits)
{
    if (bits == "ε" || bits == "e" || bits.empty())
        return {};
    if (bits.size() > 31)
        throw InputError("tree node too long");
    TreeNode u;
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw InputError("bad tree node '" + std::string(bits) + "'");
        u = u.child(c - '0');
    }
    return u;
}

std::string TreeNode::to_string() const
{
    if (len == 0)
        return "ε";
    std::string s;
    for (int i = len - 1; i >= 0; --i)
        s += (code >> i & 1) ? '1' : '0';
    return s;
}

// ---------------------------------------------------------------------------

LevelTree LevelTree::complete(std::size_t depth)
{
    if (depth > 20)
        throw SizeError("tree depth above 20");
    LevelTree T;
    T.depth_ = depth;
    return T;
}

LevelTree LevelTree::from_nodes(std::size_t depth, std::set<TreeNode> nodes)
{
    LevelTree T;
    T.depth_ = depth;
    T.complete_ = false;
    T.nodes_ = std::move(nodes);
    if (!T.nodes_.contains(TreeNode{}))
        throw InputError("tree lacks the root");
    for (const auto& u : T.nodes_) {
        if (u.len > depth)
            throw InputError("node " + u.to_string() + " is deeper than the tree");
        if (u.len > 0 && !T.nodes_.contains(u.prefix(u.len - 1)))
            throw InputError("tree is not closed under initial segments at " + u.to_string());
        if (u.len < depth && T.children(u).empty())
            throw InputError("tree is not pruned at " + u.to_string());
    }
    return T;
}

bool LevelTree::contains(const TreeNode& u) const
{
    if (u.len > depth_)
        return false;
    return complete_ || nodes_.contains(u);
}

std::vector<TreeNode> LevelTree::level(std::size_t l) const
{
    std::vector<TreeNode> out;
    if (l > depth_)
        return out;
    if (complete_) {
        for (std::uint32_t c = 0; c < (std::uint32_t{1} << l); ++c)
            out.push_back({static_cast<std::uint8_t>(l), c});
        return out;
    }
    for (const auto& u : nodes_)
        if (u.len == l)
            out.push_back(u);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<TreeNode> LevelTree::children(const TreeNode& u) const
{
    std::vector<TreeNode> out;
    if (u.len >= depth_)
        return out;
    for (int b = 0; b < 2; ++b)
        if (contains(u.child(b)))
            out.push_back(u.child(b));
    return out;
}

bool is_mn_dense(const LevelTree& T, const std::vector<TreeNode>& D, const TreeNode& t, std::size_t m, std::size_t n)
{
    if (!(t.len <= m && m <= n && n <= T.depth()))
        throw InputError("is_mn_dense needs |t| <= m <= n <= depth");
    for (const auto& v : D)
        if (v.len != n || !T.contains(v))
            return false;
    for (const auto& u : T.level(m)) {
        if (!t.is_initial_segment_of(u))
            continue;
        if (std::none_of(D.begin(), D.end(), [&](const TreeNode& v) { return u.is_initial_segment_of(v); }))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

LevelColoring::LevelColoring(std::size_t d, std::size_t depth, std::size_t k) :
    d_(d), depth_(depth), k_(k)
{
    if (d < 1 || k < 1 || k > 255)
        throw InputError("coloring needs d >= 1 and 1 <= k <= 255");
    if (d * depth > 24)
        throw SizeError("coloring too large");
    for (std::size_t l = 0; l <= depth; ++l)
        values_.emplace_back(std::size_t{1} << (l * d), 0);
}

std::size_t LevelColoring::index(const std::vector<TreeNode>& tuple) const
{
    if (tuple.size() != d_)
        throw InputError("tuple has the wrong dimension");
    const std::size_t l = tuple[0].len;
    std::size_t idx = 0;
    for (std::size_t i = 0; i < d_; ++i) {
        if (tuple[i].len != l)
            throw InputError("tuple nodes must share a level");
        idx |= std::size_t{tuple[i].code} << (l * i);
    }
    if (l > depth_)
        throw InputError("tuple deeper than the coloring");
    return idx;
}

int LevelColoring::at(const std::vector<TreeNode>& tuple) const
{
    return values_[tuple[0].len][index(tuple)];
}

void LevelColoring::set(const std::vector<TreeNode>& tuple, int color)
{
    if (color < 0 || static_cast<std::size_t>(color) >= k_)
        throw InputError("color out of range");
    values_[tuple.at(0).len][index(tuple)] = static_cast<std::uint8_t>(color);
}

std::string HLWitness::to_string() const
{
    std::string out = "l=" + std::to_string(l) + " t=";
    for (std::size_t i = 0; i < t.size(); ++i)
        out += (i ? "," : "") + t[i].to_string();
    for (const auto& r : rows) {
        out += "\n  m=" + std::to_string(r.m) + " n=" + std::to_string(r.n) + " color=" + std::to_string(r.color);
        for (std::size_t i = 0; i < r.sets.size(); ++i) {
            out += " D" + std::to_string(i) + "={";
            for (std::size_t j = 0; j < r.sets[i].size(); ++j)
                out += (j ? "," : "") + r.sets[i][j].to_string();
            out += "}";
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct RowSearch {
    const LevelColoring& f;
    std::size_t n;
    int color;

    int value(std::uint32_t a) const { return f.level_values(n)[a]; }
    int value(std::uint32_t a, std::uint32_t b) const { return f.level_values(n)[a | std::size_t{b} << n]; }
};

/// Level-n descendants of a level-m node code u.
std::vector<std::uint32_t> descendants(std::uint32_t u, std::size_t m, std::size_t n)
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t r = 0; r < (std::uint32_t{1} << (n - m)); ++r)
        out.push_back(u << (n - m) | r);
    return out;
}

std::vector<TreeNode> as_nodes(const std::vector<std::uint32_t>& codes, std::size_t n)
{
    std::vector<TreeNode> out;
    for (auto c : codes)
        out.push_back({static_cast<std::uint8_t>(n), c});
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<HLRow> find_row(const LevelColoring& f, const std::vector<TreeNode>& t, std::size_t m)
{
    const std::size_t l = t[0].len, d = f.dimension();
    for (std::size_t n = m; n <= f.depth(); ++n) {
        std::vector<std::vector<std::vector<std::uint32_t>>> cand(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::uint32_t j = 0; j < (std::uint32_t{1} << (m - l)); ++j)
                cand[i].push_back(descendants(t[i].code << (m - l) | j, m, n));
        for (int c = 0; c < static_cast<int>(f.colors()); ++c) {
            const RowSearch rs{f, n, c};
            if (d == 1) {
                std::vector<std::uint32_t> picks;
                for (const auto& vs : cand[0]) {
                    auto it = std::find_if(vs.begin(), vs.end(), [&](auto v) { return rs.value(v) == c; });
                    if (it == vs.end())
                        break;
                    picks.push_back(*it);
                }
                if (picks.size() == cand[0].size())
                    return HLRow{m, n, c, {as_nodes(picks, n)}};
                continue;
            }
            // d == 2: odometer over choice functions for tree 0, keeping
            // only candidates that can pair with every group of tree 1.
            std::vector<std::vector<std::uint32_t>> viable(cand[0].size());
            bool possible = true;
            for (std::size_t g = 0; g < cand[0].size() && possible; ++g) {
                for (auto x : cand[0][g]) {
                    bool ok = std::all_of(cand[1].begin(), cand[1].end(), [&](const auto& vs) {
                        return std::any_of(vs.begin(), vs.end(), [&](auto y) { return rs.value(x, y) == c; });
                    });
                    if (ok)
                        viable[g].push_back(x);
                }
                possible = !viable[g].empty();
            }
            if (!possible)
                continue;
            std::vector<std::size_t> pos(viable.size(), 0);
            for (;;) {
                std::vector<std::uint32_t> d0;
                for (std::size_t g = 0; g < viable.size(); ++g)
                    d0.push_back(viable[g][pos[g]]);
                std::vector<std::uint32_t> d1;
                for (const auto& vs : cand[1]) {
                    auto it = std::find_if(vs.begin(), vs.end(), [&](auto y) {
                        return std::all_of(d0.begin(), d0.end(), [&](auto x) { return rs.value(x, y) == c; });
                    });
                    if (it == vs.end())
                        break;
                    d1.push_back(*it);
                }
                if (d1.size() == cand[1].size())
                    return HLRow{m, n, c, {as_nodes(d0, n), as_nodes(d1, n)}};
                std::size_t g = viable.size();
                while (g > 0 && pos[g - 1] + 1 == viable[g - 1].size())
                    pos[--g] = 0;
                if (g == 0)
                    break;
                ++pos[g - 1];
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<HLWitness> hl_search(const LevelColoring& f)
{
    const std::size_t d = f.dimension(), D = f.depth();
    if (d > 2 || D > 5)
        throw SizeError("hl_search handles d <= 2 and depth <= 5");
    for (std::size_t l = 0; l <= D; ++l) {
        const std::uint32_t width = std::uint32_t{1} << l;
        // t̄ in lexicographic order: tree 0 varies slowest.
        for (std::uint32_t combo = 0; combo < (std::uint32_t{1} << (l * d)); ++combo) {
            std::vector<TreeNode> t(d);
            std::uint32_t rest = combo;
            for (std::size_t i = d; i-- > 0;) {
                t[i] = {static_cast<std::uint8_t>(l), rest % width};
                rest /= width;
            }
            HLWitness w{l, t, {}};
            bool ok = true;
            for (std::size_t m = l; m < D && ok; ++m) {
                auto row = find_row(f, t, m);
                if (row)
                    w.rows.push_back(std::move(*row));
                else
                    ok = false;
            }
            if (ok)
                return w;
        }
    }
    return std::nullopt;
}

bool check_hl_witness(const LevelColoring& f, const HLWitness& w)
{
    const std::size_t d = f.dimension(), D = f.depth();
    if (w.t.size() != d || w.l > D || w.rows.size() != D - std::min(w.l, D))
        return false;
    for (const auto& t : w.t)
        if (t.len != w.l)
            return false;
    const auto T = LevelTree::complete(D);
    for (std::size_t r = 0; r < w.rows.size(); ++r) {
        const auto& row = w.rows[r];
        if (row.m != w.l + r || row.n < row.m || row.n > D || row.sets.size() != d)
            return false;
        for (std::size_t i = 0; i < d; ++i)
            if (!is_mn_dense(T, row.sets[i], w.t[i], row.m, row.n))
                return false;
        std::vector<TreeNode> tuple(d);
        std::function<bool(std::size_t)> constant = [&](std::size_t i) {
            if (i == d)
                return f.at(tuple) == row.color;
            for (const auto& v : row.sets[i]) {
                tuple[i] = v;
                if (!constant(i + 1))
                    return false;
            }
            return true;
        };
        if (!constant(0))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

StrongSubtree strong_subtree_assemble(const LevelTree& T, const TreeNode& t,
    const std::vector<std::vector<TreeNode>>& denses, const std::vector<std::size_t>& levels)
{
    if (levels.size() != denses.size() + 1)
        throw InputError("need one more level than dense sets");
    for (std::size_t p = 0; p + 1 < levels.size(); ++p)
        if (levels[p] >= levels[p + 1])
            throw InputError("levels must increase");
    if (!T.contains(t) || t.len > levels[0] || levels.back() > T.depth())
        throw InputError("levels must lie between |t| and the tree depth");
    for (std::size_t p = 0; p < denses.size(); ++p)
        if (!is_mn_dense(T, denses[p], t, levels[p], levels[p + 1]))
            throw InputError("dense set " + std::to_string(p) + " is not (" + std::to_string(levels[p]) + ","
                + std::to_string(levels[p + 1]) + ")-dense above " + t.to_string());

    std::set<TreeNode> closure;
    for (const auto& D : denses)
        for (const auto& v : D)
            for (std::size_t k = 0; k <= v.len; ++k)
                closure.insert(v.prefix(k));
    auto least_in_closure = [&](const TreeNode& u, std::size_t level) -> std::optional<TreeNode> {
        for (const auto& v : closure)
            if (v.len == level && u.is_initial_segment_of(v))
                return v;
        return std::nullopt;
    };

    StrongSubtree out;
    std::vector<TreeNode> frontier;
    if (denses.empty()) {
        frontier.push_back(t);
    } else {
        auto u = least_in_closure(t, levels[0]);
        if (!u)
            throw InputError("no node at level " + std::to_string(levels[0]) + " above " + t.to_string());
        frontier.push_back(*u);
    }
    auto add_path = [&](const TreeNode& v) {
        for (std::size_t k = 0; k <= v.len; ++k)
            out.nodes.insert(v.prefix(k));
    };
    for (const auto& u : frontier)
        add_path(u);

    for (std::size_t p = 0; p < denses.size(); ++p) {
        const std::size_t next = levels[p + 1];
        std::vector<TreeNode> full;
        bool complete = true;
        for (const auto& x : frontier)
            for (const auto& w : T.children(x)) {
                auto v = least_in_closure(w, next);
                if (!v) {
                    complete = false;
                    break;
                }
                full.push_back(*v);
            }
        if (complete) {
            out.base.push_back(levels[p]);
            frontier = std::move(full);
        } else {
            std::vector<TreeNode> thin;
            for (const auto& x : frontier)
                thin.push_back(*least_in_closure(x, next));
            frontier = std::move(thin);
        }
        for (const auto& v : frontier)
            add_path(v);
    }
    return out;
}

bool is_strong_subtree(const LevelTree& T, const std::set<TreeNode>& S, const std::vector<std::size_t>& base)
{
    for (const auto& s : S) {
        if (!T.contains(s))
            return false;
        if (s.len > 0 && !S.contains(s.prefix(s.len - 1)))
            return false;
        if (std::find(base.begin(), base.end(), s.len) != base.end())
            for (const auto& w : T.children(s))
                if (!S.contains(w))
                    return false;
    }
    return true;
}

} // namespace forcinglab
