#include <forcinglab/wellfounded.hpp>

#include <algorithm>

#include <forcinglab/poset.hpp>

namespace forcinglab {

SequenceTree SequenceTree::make(std::set<Sequence> seqs)
{
    if (seqs.size() > 200)
        throw InputError("sequence trees are limited to 200 nodes");
    seqs.insert(Sequence{});
    for (const auto& s : seqs)
        if (!s.empty() && !seqs.contains(Sequence(s.begin(), s.end() - 1)))
            throw InputError("sequence set is not closed under initial segments");
    SequenceTree T;
    T.nodes_ = std::move(seqs);
    return T;
}

std::vector<Sequence> SequenceTree::children(const Sequence& s) const
{
    std::vector<Sequence> out;
    for (auto it = nodes_.upper_bound(s); it != nodes_.end(); ++it) {
        if (it->size() <= s.size() || !std::equal(s.begin(), s.end(), it->begin()))
            break;
        if (it->size() == s.size() + 1)
            out.push_back(*it);
    }
    return out;
}

std::optional<Sequence> find_path(const SequenceTree& T, std::size_t n)
{
    std::vector<Sequence> stack{Sequence{}};
    while (!stack.empty()) {
        auto s = std::move(stack.back());
        stack.pop_back();
        if (s.size() == n)
            return s;
        auto kids = T.children(s);
        stack.insert(stack.end(), kids.rbegin(), kids.rend());
    }
    return std::nullopt;
}

std::optional<RankFunction> find_rank(const SequenceTree& T, std::size_t n)
{
    RankFunction rho;
    // Longer sequences first, so children are ranked before parents.
    std::vector<Sequence> order(T.nodes().begin(), T.nodes().end());
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
    for (const auto& s : order) {
        std::size_t h = 0;
        for (const auto& c : T.children(s))
            h = std::max(h, rho.at(c) + 1);
        if (h >= n)
            return std::nullopt;
        rho[s] = h;
    }
    return rho;
}

bool is_rank_function(const SequenceTree& T, const RankFunction& rho, std::size_t n)
{
    for (const auto& s : T.nodes()) {
        auto it = rho.find(s);
        if (it == rho.end() || it->second >= n)
            return false;
        for (const auto& c : T.children(s)) {
            auto jt = rho.find(c);
            if (jt == rho.end() || jt->second >= it->second)
                return false;
        }
    }
    return true;
}

} // namespace forcinglab
