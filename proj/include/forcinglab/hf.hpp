#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace forcinglab {

/// A hereditarily finite set, interned: equal sets have equal handles.
///
/// Handles refer to a process-wide table guarded by a mutex; the table only
/// grows. Element lists are sorted by handle and duplicate-free.
class HFSet {
public:
    /// The empty set.
    HFSet() = default;

    static HFSet make(std::vector<HFSet> elements);
    /// von Neumann natural n = {0, ..., n-1}
    static HFSet natural(std::size_t n);
    /// Parses `#{}` / `#{#{} #{#{}}}`; throws InputError.
    static HFSet parse(std::string_view text);

    const std::vector<HFSet>& elements() const;
    std::size_t size() const { return elements().size(); }
    bool empty() const { return handle_ == 0; }
    bool contains(HFSet x) const;
    bool subset_of(HFSet other) const;
    /// 0 for the empty set, else 1 + max rank of the elements.
    std::size_t rank() const;
    /// If this is a von Neumann natural, its value.
    std::optional<std::size_t> as_natural() const;

    std::string to_string() const;
    std::uint32_t handle() const { return handle_; }

    friend bool operator==(HFSet a, HFSet b) { return a.handle_ == b.handle_; }
    friend auto operator<=>(HFSet a, HFSet b) { return a.handle_ <=> b.handle_; }

private:
    explicit HFSet(std::uint32_t h) : handle_(h) {}
    std::uint32_t handle_ = 0;
};

} // namespace forcinglab
