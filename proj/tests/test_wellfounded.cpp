#include <doctest.h>

#include <random>

#include <forcinglab/poset.hpp>
#include <forcinglab/wellfounded.hpp>

using namespace forcinglab;

namespace {

std::set<Sequence> random_tree(std::mt19937& rng, std::size_t max_nodes)
{
    std::set<Sequence> nodes{Sequence{}};
    std::vector<Sequence> frontier{Sequence{}};
    while (nodes.size() < max_nodes && !frontier.empty()) {
        const auto i = rng() % frontier.size();
        auto s = frontier[i];
        if (rng() % 4 == 0) {
            frontier.erase(frontier.begin() + static_cast<long>(i));
            continue;
        }
        s.push_back(static_cast<std::uint8_t>(rng() % 3));
        if (nodes.insert(s).second)
            frontier.push_back(s);
    }
    return nodes;
}

// Every map from nodes into {0..n-1}, tried one by one.
bool rank_exists_brute(const SequenceTree& T, std::size_t n)
{
    const std::vector<Sequence> nodes(T.nodes().begin(), T.nodes().end());
    std::vector<std::size_t> value(nodes.size(), 0);
    if (n == 0)
        return false;
    for (;;) {
        RankFunction rho;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            rho[nodes[i]] = value[i];
        bool ok = true;
        for (const auto& s : nodes)
            for (const auto& c : T.children(s))
                ok = ok && rho[c] < rho[s];
        if (ok)
            return true;
        std::size_t i = 0;
        while (i < nodes.size() && ++value[i] == n)
            value[i++] = 0;
        if (i == nodes.size())
            return false;
    }
}

} // namespace

TEST_CASE("sequence trees")
{
    CHECK_THROWS_AS(SequenceTree::make({{1, 2}}), InputError);
    CHECK_THROWS_AS(SequenceTree::make({{}, {1, 2}}), InputError);
    std::set<Sequence> big{{}};
    for (int i = 0; i < 201; ++i)
        big.insert(Sequence{static_cast<std::uint8_t>(i)});
    CHECK_THROWS_AS(SequenceTree::make(big), InputError);
    auto T = SequenceTree::make({{}, {0}, {1}, {0, 5}});
    CHECK(T.children({0}) == std::vector<Sequence>{{0, 5}});
    CHECK(find_path(T, 2) == Sequence{0, 5});
    CHECK_FALSE(find_path(T, 3));
    auto rho = find_rank(T, 3);
    REQUIRE(rho);
    CHECK(is_rank_function(T, *rho, 3));
    CHECK_FALSE(find_rank(T, 2));
}

TEST_CASE("a path of length n exists exactly when no rank into n exists")
{
    std::mt19937 rng(29);
    for (int trial = 0; trial < 300; ++trial) {
        const auto small = trial < 150;
        auto T = SequenceTree::make(random_tree(rng, small ? 7 : 200));
        for (std::size_t n = 0; n <= 8; ++n) {
            const auto path = find_path(T, n);
            const auto rho = find_rank(T, n);
            CHECK(path.has_value() != rho.has_value());
            if (path) {
                CHECK(path->size() == n);
                CHECK(T.nodes().contains(*path));
            }
            if (rho)
                CHECK(is_rank_function(T, *rho, n));
            if (small && n <= 3)
                CHECK(rank_exists_brute(T, n) == rho.has_value());
        }
    }
}
