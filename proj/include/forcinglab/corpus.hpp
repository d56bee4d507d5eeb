#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <forcinglab/forcing.hpp>
#include <forcinglab/zoo.hpp>

namespace forcinglab {

/// Every partial order with a greatest element on 1..max_size conditions, one
/// per isomorphism class. Conditions are named p0, p1, ... with p0 on top.
std::vector<PosetPtr> small_posets(std::size_t max_size = 5);

/// cohen(1,2), dyadic_random(2), amoeba(2,1/4), collapse(2,2), mathias(6),
/// marker(3).
std::vector<ZooPoset> zoo_corpus();

/// Six names of rank <= 3 obeying the relaxed discipline. Seed 0 gives the
/// check names of 0, 1 and 2 plus three random names; other seeds give six
/// random names of ranks 1, 1, 2, 2, 3, 3.
NameEnv corpus_environment(const Poset& P, std::uint32_t seed);

/// Atoms over the given terms: (mem x y) and (eq x y) for all ordered pairs.
std::vector<Formula> atoms_over(const std::vector<Term>& terms);

/// All closed formulas of depth <= 2 over the bound names of env: atoms,
/// negated atoms, binary connectives of two atoms, and quantifiers
/// (forall/exists v in y) over atoms in env ∪ {v}.
std::vector<Formula> closed_formulas(const NameEnv& env, std::size_t max_depth);

struct OracleSuiteReport {
    /// Formulas whose forcing set was compared with the oracle.
    std::size_t checked = 0;
    /// Depth-3 formulas covered through a checked representative.
    std::size_t covered = 0;
    std::size_t failed = 0;
    /// The first few failing formulas with the conditions where they differ.
    std::vector<std::string> failures;
};

/// Compares forcing with the minimal-filter oracle on every closed formula of
/// depth <= max_depth (<= 3) over env. Depth <= 2 formulas are checked one
/// by one. A depth-3 formula's forcing and oracle sets depend only on the
/// (forcing set, truth vector) pairs of its immediate subformulas (for
/// quantifiers: of the body at each element of the range), so one
/// representative per class of such pairs is checked and the rest counted
/// as covered.
OracleSuiteReport run_oracle_suite(ForcingContext& ctx, const NameEnv& env, std::size_t max_depth);

} // namespace forcinglab
