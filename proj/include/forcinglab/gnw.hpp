#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace forcinglab {

/// Subsets of {0..31} as bitmasks.
using FinSet = std::uint32_t;

std::vector<int> elements_of(FinSet s);
FinSet fin_set(const std::vector<int>& xs);
std::string format_fin_set(FinSet s);

/// A family of nonempty subsets of {0..universe-1}.
struct FinFamily {
    std::size_t universe = 0;
    /// Sorted, duplicate-free.
    std::vector<FinSet> members;

    static FinFamily make(std::size_t universe, std::vector<FinSet> members);
    bool contains(FinSet s) const;
    FinSet full() const { return universe >= 32 ? ~FinSet{0} : (FinSet{1} << universe) - 1; }
};

/// Some nonempty prefix of the increasing enumeration of s lies in F.
bool has_initial_segment_in(const FinFamily& F, FinSet s);

enum class GnwVerdict { accepts, rejects, neither };
std::string_view to_string(GnwVerdict v);

/// Block-size-s semantics. With A' = A above max(a): A accepts a when a ∪ B
/// has an initial segment in F for every s-subset B of A'; A rejects a when
/// no s-subset does (equivalently, no B ⊆ A' with |B| >= s accepts a).
/// Throws InputError when |A'| < s or s = 0.
GnwVerdict gnw_accepts(const FinFamily& F, FinSet a, FinSet A, std::size_t s);

enum class Horn { a, b };
std::string_view to_string(Horn h);

/// Horn a: no member of F is a subset of H.
bool horn_a_holds(const FinFamily& F, FinSet H);
/// Horn b: every B ⊆ H with |B| >= m has an initial segment in F.
bool horn_b_holds(const FinFamily& F, FinSet H, std::size_t m);

struct GnwResult {
    FinSet H = 0;
    Horn horn = Horn::a;
};

/// Tries size-h subsets in colex order, horn a before horn b, and grows the
/// first hit greedily in increasing element order while its horn survives.
/// nullopt when no size-h subset satisfies either horn.
std::optional<GnwResult> gnw_dichotomy_search(const FinFamily& F, std::size_t h, std::size_t m);

struct GnwEvent {
    enum class Kind {
        /// Stage 1: the pool was shrunk (or kept) so that it decides `a`.
        decide,
        /// Stage 1: fewer than s pool elements lie above max(a).
        out_of_room,
        /// Stage 1: n_k = min of the pool was fixed.
        pick,
        /// Stage 2: H accepts the empty set.
        accept_empty,
        /// Stage 2 (rejection path): `element` joins A; `excluded` lists the
        /// k in H with H accepting some a ∪ {k}, a ⊆ A.
        reject_pick,
    };

    Kind kind = Kind::decide;
    FinSet a = 0;
    FinSet pool = 0;
    GnwVerdict verdict = GnwVerdict::neither;
    int element = -1;
    FinSet excluded = 0;

    std::string to_string() const;
};

struct GnwConstruction {
    /// The construction produced a set of size >= h on one of the two paths.
    bool completed = false;
    FinSet H = 0;
    std::optional<Horn> horn;
    std::vector<GnwEvent> transcript;
};

/// Finite run of the three-lemma strategy at block size s.
///
/// Stage 1 builds n_0 < n_1 < ... where each pool H_{k+1} is the largest
/// subset of H_k above n_k deciding every subset of {n_0..n_k} that contains
/// n_k and still has s pool elements above it (ties prefer acceptance, then
/// colex order). Stage 2: if H = {n_k} accepts the empty set the result is H
/// with horn b (m = s). Otherwise A is grown from H in increasing order,
/// admitting n when every a ∪ {n} (a ⊆ A) is rejected by H, or, when too few
/// elements of H lie above n to decide it, is simply not in F.
GnwConstruction gnw_construct(const FinFamily& F, std::size_t s, std::size_t h);

} // namespace forcinglab
