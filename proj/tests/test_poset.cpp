#include <doctest.h>

#include <forcinglab/corpus.hpp>
#include <forcinglab/poset.hpp>
#include <forcinglab/poset_io.hpp>
#include <forcinglab/zoo.hpp>

#include "oracles.hpp"

using namespace forcinglab;

namespace {

Poset diamond()
{
    return Poset::from_relation("diamond", {"t", "a", "b", "z"}, "t", {{"a", "t"}, {"b", "t"}, {"z", "a"}, {"z", "b"}});
}

// Three minimal conditions under a common top.
Poset fan()
{
    return Poset::from_relation("fan", {"t", "a", "b", "c"}, "t", {{"a", "t"}, {"b", "t"}, {"c", "t"}});
}

} // namespace

TEST_CASE("order closure and the greatest element")
{
    auto P = Poset::from_relation("p", {"t", "x", "y"}, "t", {{"y", "x"}, {"x", "t"}});
    CHECK(P.leq("y", "t"));
    CHECK(P.leq("x", "x"));
    CHECK_FALSE(P.leq("x", "y"));
    CHECK_THROWS_AS(Poset::from_relation("p", {"t", "x"}, "t", {}), InputError);
    CHECK_THROWS_AS(Poset::from_relation("p", {"t"}, "t", {{"t", "u"}}), InputError);
    CHECK_THROWS_AS(P.index("nope"), InputError);
}

TEST_CASE("preorders keep equivalent conditions apart")
{
    auto P = Poset::from_relation("p", {"t", "u", "v"}, "t", {{"u", "v"}, {"v", "u"}, {"u", "t"}});
    CHECK(P.leq("u", "v"));
    CHECK(P.leq("v", "u"));
    CHECK(P.size() == 3);
    CHECK(P.minimal().count() == 2);
}

TEST_CASE("compatibility and filters agree with brute force on small posets")
{
    for (const auto& P : small_posets(5)) {
        for (ConditionIndex p = 0; p < P->size(); ++p)
            for (ConditionIndex q = 0; q < P->size(); ++q)
                CHECK(P->compatible(p, q) == oracle::compatible(*P, p, q));
        auto filters = oracle::all_filters(*P);
        for (std::uint32_t mask = 1; mask < (1u << P->size()); ++mask) {
            auto S = oracle::make_set(*P, [&](ConditionIndex p) { return (mask >> p & 1) != 0; });
            CHECK(is_filter(*P, S) == oracle::is_filter(*P, S));
            CHECK(is_dense(*P, S) == oracle::is_dense(*P, S));
        }
        // compatible iff some filter holds both
        for (ConditionIndex p = 0; p < P->size(); ++p)
            for (ConditionIndex q = 0; q < P->size(); ++q) {
                bool shared = false;
                for (const auto& G : filters)
                    shared = shared || (G.test(p) && G.test(q));
                CHECK(shared == P->compatible(p, q));
            }
        for (auto m : members(P->minimal())) {
            CHECK(oracle::is_filter(*P, P->up(m)));
            CHECK(P->down(m).count() >= 1);
        }
    }
}

TEST_CASE("small poset enumeration")
{
    // Partial orders with a greatest element on n points, up to isomorphism,
    // are posets on n - 1 points: 1, 1, 2, 5, 16.
    std::vector<std::size_t> by_size(6);
    for (const auto& P : small_posets(5))
        ++by_size.at(P->size());
    CHECK(by_size == std::vector<std::size_t>{0, 1, 1, 2, 5, 16});
}

TEST_CASE("filters, density, antichains on the diamond")
{
    auto P = diamond();
    CHECK(is_filter(P, P.set_of({"t"})));
    CHECK_FALSE(is_filter(P, P.empty_set()));
    CHECK(is_filter(P, P.up(P.index("z"))));
    CHECK_FALSE(is_filter(P, P.set_of({"a", "t", "b"})));
    CHECK(is_dense(P, P.set_of({"z"})));
    CHECK_FALSE(is_dense(P, P.set_of({"t"})));
    CHECK(is_antichain(P, P.set_of({"a"})));
    CHECK_FALSE(is_antichain(P, P.set_of({"t", "a"})));
    CHECK(is_maximal_antichain(P, P.set_of({"z"})));
}

TEST_CASE("exhaustive sets")
{
    auto F = fan();
    CHECK_FALSE(is_exhaustive(F, F.set_of({"a"})));
    CHECK(is_exhaustive(F, F.set_of({"a", "b", "c"})));
    CHECK(is_maximal_antichain(F, F.set_of({"a", "b", "c"})));
    for (const auto& P : small_posets(5))
        for (std::uint32_t mask = 1; mask < (1u << P->size()); ++mask) {
            auto S = oracle::make_set(*P, [&](ConditionIndex p) { return (mask >> p & 1) != 0; });
            if (is_dense(*P, S) || is_maximal_antichain(*P, S))
                CHECK(is_exhaustive(*P, S));
        }
}

TEST_CASE("maximal antichain extension")
{
    auto one = Poset::from_relation("one", {"t"}, "t", {});
    CHECK(one.ids_of(extend_to_maximal_antichain(one, one.empty_set(), one.full_set())) == std::vector<std::string>{"t"});

    auto C = *cohen(1, 1).poset;
    auto totals = C.set_of({"c0", "c1"});
    auto A = extend_to_maximal_antichain(C, C.empty_set(), totals);
    CHECK(A == totals);
    CHECK(extend_to_maximal_antichain(C, A, totals) == A);

    auto F = fan();
    CHECK_THROWS_AS(extend_to_maximal_antichain(F, F.set_of({"t", "a"}), F.full_set()), InputError);
    CHECK_THROWS_AS(extend_to_maximal_antichain(F, F.set_of({"a"}), F.set_of({"b", "c"})), InputError);

    for (const auto& P : small_posets(5)) {
        auto M = extend_to_maximal_antichain(*P, P->empty_set(), P->full_set());
        CHECK(is_maximal_antichain(*P, M));
    }
}

TEST_CASE("separative quotient")
{
    auto chain = oracle::chain(3);
    auto q = separative_quotient(chain);
    CHECK_FALSE(q.was_separative);
    CHECK(q.quotient.size() == 1);

    auto C = *cohen(1, 1).poset;
    CHECK(oracle::is_separative(C));
    auto qc = separative_quotient(C);
    CHECK(qc.was_separative);
    CHECK(qc.quotient.size() == C.size());

    for (const auto& P : small_posets(5)) {
        CHECK(is_separative(*P) == oracle::is_separative(*P));
        auto s = separative_quotient(*P);
        CHECK(s.was_separative == oracle::is_separative(*P));
        CHECK(oracle::is_separative(s.quotient));
        for (ConditionIndex p = 0; p < P->size(); ++p)
            for (ConditionIndex r = 0; r < P->size(); ++r)
                CHECK(P->compatible(p, r) == s.quotient.compatible(s.projection[p], s.projection[r]));
    }
}

TEST_CASE("Cohen order and compatibility")
{
    auto C = *cohen(1, 2).poset;
    CHECK(C.leq("c01", "c0x"));
    CHECK_FALSE(C.leq("c0x", "c01"));
    CHECK_FALSE(C.compatible("c0x", "c1x"));
    CHECK(C.compatible("c0x", "cx1"));
    CHECK(C.leq("c0x", C.id(C.top())));
}

TEST_CASE("poset file round trip")
{
    for (const auto& P : small_posets(4)) {
        auto text = format_poset(*P);
        auto again = parse_poset(text, "rt");
        CHECK(format_poset(*again.poset) == text);
    }
    CHECK_THROWS_AS(parse_poset("poset p\nelem a\n", "bad"), InputError);
    CHECK_THROWS_AS(parse_poset("poset p\ntop t\nelem t\nle t q\n", "bad"), InputError);
    try {
        parse_poset("poset p\ntop t\nelem t\nbogus\n", "file.poset");
        FAIL("expected an error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("file.poset") != std::string::npos);
    }
}
