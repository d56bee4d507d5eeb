#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include <forcinglab/poset.hpp>

namespace forcinglab {

using Rational = boost::rational<std::int64_t>;

/// A constructed poset bundled with its designated condition families.
struct ZooPoset {
    PosetPtr poset;
    std::vector<ConditionFamily> families;

    const ConditionFamily& family(std::string_view name) const;
};

// ---------------------------------------------------------------------------
// Cohen: finite partial functions from an index grid to {0,1}.

struct CohenCondition {
    std::size_t index_size = 0;
    std::size_t depth = 0;
    /// One cell per (i, n), row-major; nullopt for cells outside the domain.
    std::vector<std::optional<int>> cells;

    std::optional<int> at(std::size_t i, std::size_t n) const { return cells.at(i * depth + n); }
    /// `c` followed by one character per cell: `0`, `1` or `x` (undefined).
    std::string id() const;
    static CohenCondition from_id(std::string_view id, std::size_t index_size, std::size_t depth);
    /// q <= p iff q extends p as a function.
    friend bool extends(const CohenCondition& q, const CohenCondition& p);
};

/// All partial assignments of I x depth. Families `D_<i>_<n>` are the
/// conditions whose domain contains (i, n).
ZooPoset cohen(std::size_t index_size, std::size_t depth);

// ---------------------------------------------------------------------------
// Random forcing at dyadic resolution k: nonempty unions of atoms
// [a/2^k, (a+1)/2^k).

struct DyadicEvent {
    unsigned k = 0;
    std::uint64_t atoms = 0;

    Rational measure() const;
    DyadicEvent intersect(const DyadicEvent& o) const { return {k, atoms & o.atoms}; }
    bool subset_of(const DyadicEvent& o) const { return (atoms & ~o.atoms) == 0; }
    /// `r` followed by 2^k atom bits.
    std::string id() const;
    static DyadicEvent from_id(std::string_view id, unsigned k);
    /// The half-open interval [lo, hi); endpoints must be multiples of 2^-k.
    static DyadicEvent interval(unsigned k, Rational lo, Rational hi);
};

/// Nonempty dyadic events ordered by inclusion; family `atoms` holds the
/// single-atom events.
ZooPoset dyadic_random(unsigned k);

/// Events of measure strictly greater than eps, with the inclusion order.
/// Family `atoms` holds the minimal events. eps must lie in (0, 1).
ZooPoset amoeba(unsigned k, Rational eps);

// ---------------------------------------------------------------------------
// Collapse: sequences over an alphabet of size X, ordered by end-extension.

/// Sequences of length <= len over {0..x_size-1}. Family `hit_<x>` holds the
/// sequences whose range contains x together with the sequences of maximal
/// length (which have no proper extension in the truncation).
ZooPoset collapse(std::size_t x_size, std::size_t len);

// ---------------------------------------------------------------------------
// Mathias: (stem, envelope) with the stem an initial part of the envelope.

struct MathiasCondition {
    std::uint32_t stem = 0;
    std::uint32_t envelope = 0;

    bool valid(std::size_t universe) const;
    /// `m<stem>:<envelope>` with `.`-separated elements.
    std::string id() const;
    static MathiasCondition from_id(std::string_view id);
    friend bool operator==(const MathiasCondition&, const MathiasCondition&) = default;
};

/// q <= p iff stem_p ⊆ stem_q, env_q ⊆ env_p and stem_q \ stem_p ⊆ env_p.
bool mathias_leq(const MathiasCondition& q, const MathiasCondition& p);
/// q <= p with equal stems.
bool pure_extension(const MathiasCondition& q, const MathiasCondition& p);

/// All conditions over {0..universe-1} with nonempty envelope. Family
/// `stem_nonempty` is dense.
ZooPoset mathias(std::size_t universe);

/// The conditions below `p` (the cone Q_p), as a poset with top `p`.
ZooPoset mathias_cone(std::size_t universe, const MathiasCondition& p);

// ---------------------------------------------------------------------------
// Marker poset: partial functions Z -> {0,1} with interval domains.

struct MarkerCondition {
    int lo = 0;
    /// Values on [lo, lo + bits.size()); empty for the top condition.
    std::vector<std::uint8_t> bits;

    bool is_top() const { return bits.empty(); }
    int hi() const { return lo + static_cast<int>(bits.size()) - 1; }
    std::size_t length() const { return bits.size(); }
    bool defined_at(int i) const { return !is_top() && i >= lo && i <= hi(); }
    int at(int i) const { return bits.at(static_cast<std::size_t>(i - lo)); }

    /// (q + n)(i) = q(i - n)
    MarkerCondition translate(int n) const;
    /// Bitwise complement.
    MarkerCondition complement() const;
    /// Union of two conditions with disjoint, adjacent domains; nullopt otherwise.
    static std::optional<MarkerCondition> concatenate(const MarkerCondition& a, const MarkerCondition& b);

    /// `k` for top, else `k<lo>:<bits>`.
    std::string id() const;
    static MarkerCondition from_id(std::string_view id);
    friend bool operator==(const MarkerCondition&, const MarkerCondition&) = default;
};

/// q <= p iff q = p, or p is top, or q is a gap-free concatenation of
/// translates of p and its complement that contains p itself and at least
/// one translate of the complement.
bool marker_leq(const MarkerCondition& q, const MarkerCondition& p);

/// All conditions with domain inside [-L, L]. D_<p>_<i> families for p of
/// length at most 2 are attached only when they are dense inside the window,
/// which the boundary usually prevents (see marker_dense_family).
ZooPoset marker(int half_width);

/// D_{p,i}: conditions incompatible with p, or below p with m+i in the
/// domain and q(m+i) != q(m), where m = max(I_p).
ConditionFamily marker_dense_family(const Poset& P, const MarkerCondition& p, int i);

} // namespace forcinglab
