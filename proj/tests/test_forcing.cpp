#include <doctest.h>

#include <forcinglab/corpus.hpp>
#include <forcinglab/forcing.hpp>
#include <forcinglab/oracle.hpp>
#include <forcinglab/zoo.hpp>

#include "properties.hpp"

using namespace forcinglab;

namespace {

void require_clean(const props::Tally& t)
{
    for (const auto& n : t.notes)
        INFO(n);
    CHECK(t.checked > 0);
    CHECK(t.failed == 0);
    if (!t.notes.empty())
        MESSAGE(t.notes.front());
}

} // namespace

TEST_CASE("forcing examples on Cohen(1,1)")
{
    auto P = cohen(1, 1).poset;
    ForcingContext ctx(P);
    const auto q = P->index("c0"), other = P->index("c1");
    const auto x = Name::make({{Name(), q}});
    const auto empty = Term::of("empty", Name());
    const auto tx = Term::of("x", x);

    // x = {(∅̌, q)} is forced empty exactly where q is excluded.
    CHECK(ctx.forces(other, eq(tx, empty)));
    CHECK_FALSE(ctx.forces(P->top(), eq(tx, empty)));
    CHECK(ctx.forces(q, negation(eq(tx, empty))));

    const auto in_gen = mem(Term::of("c0", check_name(condition_code(q), *P)), Term::of("gen", generic_name(*P)));
    CHECK(ctx.decides(P->top(), in_gen) == Decision::undecided);
    CHECK(ctx.decides(q, in_gen) == Decision::forces);
    CHECK(ctx.decides(other, in_gen) == Decision::forces_negation);

    auto values = ctx.decide_name_value(P->top(), x);
    REQUIRE(values.size() == 2);
    CHECK(values[0] == std::pair{q, HFSet::natural(1)});
    CHECK(values[1] == std::pair{other, HFSet()});

    const auto two = HFSet::natural(2);
    for (auto [m, z] : ctx.decide_name_value(P->top(), check_name(two, *P)))
        CHECK(z == two);
}

TEST_CASE("forcing errors")
{
    auto P = cohen(1, 1).poset;
    ForcingContext ctx(P);
    CHECK_THROWS_AS(ctx.forcing_set(mem(Term::variable("v"), Term::of("e", Name()))), InputError);
    const auto bad = Name::make({{Name::make({{Name(), P->index("c1")}}), P->index("c0")}});
    CHECK_THROWS_AS(ctx.forcing_set(eq(Term::of("b", bad), Term::of("b", bad))), InputError);
    ForcingContext strict(P, NameDiscipline::strict);
    CHECK_THROWS_AS(strict.forcing_set(mem(Term::of("e", Name()), Term::of("gen", generic_name(*P)))), InputError);
}

TEST_CASE("minimal conditions decide everything")
{
    for (const auto& P : small_posets(4)) {
        ForcingContext ctx(P);
        const auto env = corpus_environment(*P, 1);
        for (const auto& f : closed_formulas(env, 2))
            for (auto m : members(P->minimal()))
                CHECK(ctx.decides(m, f) != Decision::undecided);
    }
}

TEST_CASE("forcing agrees with the filter semantics on small posets")
{
    for (const auto& P : small_posets(4)) {
        ForcingContext ctx(P);
        for (std::uint32_t seed : {0u, 1u}) {
            const auto env = corpus_environment(*P, seed);
            for (const auto& f : closed_formulas(env, 2))
                CHECK(compare_with_oracle(ctx, f).empty());
        }
    }
}

TEST_CASE("axiomatic properties on small posets and Cohen(1,2)")
{
    std::vector<PosetPtr> posets = small_posets(4);
    posets.push_back(cohen(1, 2).poset);
    posets.push_back(dyadic_random(1).poset);
    props::Tally t;
    for (const auto& P : posets) {
        ForcingContext ctx(P);
        const auto env = corpus_environment(*P, 0);
        props::check_atoms(ctx, t);
        props::check_generic(ctx, t);
        props::check_decide_value(ctx, env, t);
        props::check_connective_laws(ctx, closed_formulas(env, 2), t);
        props::check_equality(ctx, env, t);
        props::check_quantified_checks(ctx, env, t);
        props::check_bounded_absoluteness(ctx, t);
    }
    require_clean(t);
}

TEST_CASE("truth values")
{
    for (auto P : {cohen(1, 1).poset, dyadic_random(1).poset}) {
        ForcingContext ctx(P);
        RegularOpenAlgebra A(P);
        const auto gen = Term::of("gen", generic_name(*P));
        for (ConditionIndex q = 0; q < P->size(); ++q)
            CHECK(ctx.truth_value(A, mem(Term::of("q", check_name(condition_code(q), *P)), gen)) == A.embedding(q));
        const auto env = corpus_environment(*P, 2);
        props::Tally t;
        props::check_truth_values(ctx, A, closed_formulas(env, 2), env, t);
        require_clean(t);
    }
}
