#include <doctest.h>

#include <bit>
#include <random>

#include <forcinglab/gnw.hpp>
#include <forcinglab/poset.hpp>

#include "ramsey_oracles.hpp"

using namespace forcinglab;

namespace {

FinFamily random_family(std::mt19937& rng, std::size_t universe, std::size_t count, std::size_t max_size)
{
    std::vector<FinSet> ms;
    std::uniform_int_distribution<std::size_t> size(1, max_size);
    std::uniform_int_distribution<int> elem(0, static_cast<int>(universe) - 1);
    for (std::size_t i = 0; i < count; ++i) {
        FinSet s = 0;
        const auto n = size(rng);
        while (static_cast<std::size_t>(std::popcount(s)) < n)
            s |= FinSet{1} << elem(rng);
        ms.push_back(s);
    }
    return FinFamily::make(universe, ms);
}

roracle::Verdict as_oracle(GnwVerdict v)
{
    return v == GnwVerdict::accepts ? roracle::Verdict::accepts
        : v == GnwVerdict::rejects  ? roracle::Verdict::rejects
                                    : roracle::Verdict::neither;
}

} // namespace

TEST_CASE("acceptance examples")
{
    std::vector<FinSet> singles;
    for (int i = 0; i < 6; ++i)
        singles.push_back(FinSet{1} << i);
    auto all_singletons = FinFamily::make(6, singles);
    CHECK(gnw_accepts(all_singletons, 0, fin_set({1, 2, 3}), 1) == GnwVerdict::accepts);
    auto only_zero = FinFamily::make(6, {fin_set({0})});
    CHECK(gnw_accepts(only_zero, 0, fin_set({1, 2, 3, 4, 5}), 1) == GnwVerdict::rejects);
    CHECK_THROWS_AS(gnw_accepts(only_zero, 0, fin_set({1, 2}), 3), InputError);
    CHECK_THROWS_AS(FinFamily::make(3, {fin_set({4})}), InputError);
    CHECK_THROWS_AS(FinFamily::make(3, {0}), InputError);
}

TEST_CASE("acceptance agrees with brute force on graph families")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        // Edges of a random graph on 8 vertices.
        std::vector<FinSet> edges;
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j)
                if (rng() % 3 == 0)
                    edges.push_back(fin_set({i, j}));
        if (edges.empty())
            continue;
        auto F = FinFamily::make(8, edges);
        auto M = roracle::members(F);
        for (FinSet a = 0; a < 8; ++a)
            for (FinSet A = 0; A < 256; A += 7)
                for (std::size_t s = 1; s <= 3; ++s) {
                    auto expected = roracle::accepts(M, roracle::to_vec(a), roracle::to_vec(A), s);
                    if (!expected) {
                        CHECK_THROWS_AS(gnw_accepts(F, a, A, s), InputError);
                        continue;
                    }
                    const auto v = gnw_accepts(F, a, A, s);
                    CHECK(as_oracle(v) == *expected);
                    // Shrinking A keeps acceptance.
                    if (v == GnwVerdict::accepts)
                        for (FinSet B = A; B; B = (B - 1) & A)
                            if (roracle::accepts(M, roracle::to_vec(a), roracle::to_vec(B), s))
                                CHECK(gnw_accepts(F, a, B, s) == GnwVerdict::accepts);
                }
    }
}

TEST_CASE("dichotomy search examples")
{
    std::vector<FinSet> evens;
    for (int i = 0; i < 10; i += 2)
        evens.push_back(FinSet{1} << i);
    auto r = gnw_dichotomy_search(FinFamily::make(10, evens), 5, 1);
    REQUIRE(r);
    // The odd numbers satisfy horn a, but the evens come first in colex order
    // and satisfy horn b.
    CHECK(horn_a_holds(FinFamily::make(10, evens), fin_set({1, 3, 5, 7, 9})));
    CHECK(r->horn == Horn::b);
    CHECK(r->H == fin_set({0, 2, 4, 6, 8}));
    std::vector<FinSet> with_zero{1};
    auto a = gnw_dichotomy_search(FinFamily::make(10, with_zero), 5, 1);
    REQUIRE(a);
    CHECK(a->horn == Horn::a);
    CHECK(a->H == fin_set({1, 2, 3, 4, 5, 6, 7, 8, 9}));

    std::vector<FinSet> pairs;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            pairs.push_back(fin_set({i, j}));
    auto all_pairs = FinFamily::make(6, pairs);
    auto b = gnw_dichotomy_search(all_pairs, 4, 2);
    REQUIRE(b);
    CHECK(b->horn == Horn::b);
    CHECK(std::popcount(b->H) == 6);
    CHECK_THROWS_AS(gnw_dichotomy_search(all_pairs, 7, 2), InputError);
    CHECK_THROWS_AS(gnw_dichotomy_search(all_pairs, 3, 4), InputError);
}

TEST_CASE("dichotomy search results pass the independent horn check")
{
    std::mt19937 rng(11);
    std::size_t found = 0;
    for (int trial = 0; trial < 100; ++trial) {
        auto F = random_family(rng, 10, 20, 4);
        auto M = roracle::members(F);
        auto r = gnw_dichotomy_search(F, 4, 3);
        if (!r)
            continue;
        ++found;
        const auto H = roracle::to_vec(r->H);
        CHECK(H.size() >= 4);
        CHECK((r->horn == Horn::a ? roracle::horn_a(M, H) : roracle::horn_b(M, H, 3)));
    }
    CHECK(found > 0);
}

TEST_CASE("construction examples")
{
    std::vector<FinSet> singles;
    for (int i = 0; i < 6; ++i)
        singles.push_back(FinSet{1} << i);
    auto c = gnw_construct(FinFamily::make(6, singles), 1, 3);
    REQUIRE(c.horn);
    CHECK(*c.horn == Horn::b);
    CHECK(c.completed);
    CHECK(c.transcript.back().kind == GnwEvent::Kind::accept_empty);

    auto z = gnw_construct(FinFamily::make(6, {fin_set({0})}), 1, 3);
    REQUIRE(z.horn);
    CHECK(*z.horn == Horn::a);
    CHECK(z.completed);
    CHECK((z.H & 1u) == 0);
}

TEST_CASE("construction transcripts audit")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        auto F = random_family(rng, 8, 6, 3);
        auto M = roracle::members(F);
        for (std::size_t s = 1; s <= 2; ++s) {
            auto c = gnw_construct(F, s, 3);
            const auto H = roracle::to_vec(c.H);
            if (c.completed) {
                REQUIRE(c.horn);
                CHECK((*c.horn == Horn::a ? roracle::horn_a(M, H) : roracle::horn_b(M, H, s)));
            }
            for (const auto& e : c.transcript) {
                if (e.kind != GnwEvent::Kind::reject_pick)
                    continue;
                // Each excluded k is accepted over some subset of the earlier picks.
                const auto before = roracle::to_vec(e.a & ~(FinSet{1} << e.element));
                for (int k : roracle::to_vec(e.excluded)) {
                    bool accepted = false;
                    for (auto sub : roracle::subsets(before)) {
                        if (!sub.empty() && sub.back() >= k)
                            continue;
                        sub.push_back(k);
                        accepted = accepted || roracle::accepts(M, sub, roracle::to_vec(e.pool), s) == roracle::Verdict::accepts;
                    }
                    CHECK(accepted);
                    if (c.horn == Horn::a)
                        CHECK((c.H >> k & 1u) == 0);
                }
            }
        }
    }
}
