#include <forcinglab/hf.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>

#include <forcinglab/poset.hpp>

namespace forcinglab {

namespace {

struct Node {
    std::vector<HFSet> elements;
    std::size_t rank = 0;
};

struct Table {
    std::mutex mutex;
    // deque: references to nodes stay valid while the table grows.
    std::deque<Node> nodes{Node{}};
    std::map<std::vector<std::uint32_t>, std::uint32_t> index{{{}, 0}};
};

Table& table()
{
    static Table t;
    return t;
}

} // namespace

HFSet HFSet::make(std::vector<HFSet> elements)
{
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    std::vector<std::uint32_t> key;
    key.reserve(elements.size());
    std::size_t rank = 0;
    for (auto e : elements) {
        key.push_back(e.handle_);
        rank = std::max(rank, e.rank() + 1);
    }
    auto& t = table();
    std::lock_guard lock(t.mutex);
    auto [it, inserted] = t.index.try_emplace(std::move(key), static_cast<std::uint32_t>(t.nodes.size()));
    if (inserted)
        t.nodes.push_back(Node{std::move(elements), rank});
    return HFSet(it->second);
}

HFSet HFSet::natural(std::size_t n)
{
    std::vector<HFSet> below;
    HFSet cur;
    for (std::size_t i = 0; i < n; ++i) {
        below.push_back(cur);
        cur = make(below);
    }
    return cur;
}

const std::vector<HFSet>& HFSet::elements() const
{
    auto& t = table();
    std::lock_guard lock(t.mutex);
    return t.nodes[handle_].elements;
}

std::size_t HFSet::rank() const
{
    auto& t = table();
    std::lock_guard lock(t.mutex);
    return t.nodes[handle_].rank;
}

bool HFSet::contains(HFSet x) const
{
    const auto& el = elements();
    return std::binary_search(el.begin(), el.end(), x);
}

bool HFSet::subset_of(HFSet other) const
{
    const auto& a = elements();
    const auto& b = other.elements();
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::optional<std::size_t> HFSet::as_natural() const
{
    const std::size_t n = size();
    if (rank() != n || natural(n) != *this)
        return std::nullopt;
    return n;
}

std::string HFSet::to_string() const
{
    std::string out = "#{";
    bool first = true;
    for (auto e : elements()) {
        if (!first)
            out += ' ';
        first = false;
        out += e.to_string();
    }
    return out + "}";
}

namespace {

HFSet parse_at(std::string_view text, std::size_t& pos)
{
    auto skip = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
            ++pos;
    };
    skip();
    if (text.substr(pos, 2) != "#{")
        throw InputError("expected '#{' at offset " + std::to_string(pos) + " in HF literal");
    pos += 2;
    std::vector<HFSet> elements;
    for (;;) {
        skip();
        if (pos >= text.size())
            throw InputError("unterminated HF literal");
        if (text[pos] == '}') {
            ++pos;
            return HFSet::make(std::move(elements));
        }
        elements.push_back(parse_at(text, pos));
    }
}

} // namespace

HFSet HFSet::parse(std::string_view text)
{
    std::size_t pos = 0;
    auto out = parse_at(text, pos);
    while (pos < text.size() && std::string_view(" \t\r\n").find(text[pos]) != std::string_view::npos)
        ++pos;
    if (pos != text.size())
        throw InputError("trailing text after HF literal");
    return out;
}

} // namespace forcinglab
