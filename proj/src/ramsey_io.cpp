#include <forcinglab/ramsey_io.hpp>

#include <functional>
#include <map>
#include <sstream>
#include <vector>

#include <forcinglab/poset.hpp>

namespace forcinglab {

namespace {

struct Lines {
    std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
};

Lines split_lines(std::string_view text)
{
    Lines out;
    std::istringstream in{std::string(text)};
    std::string line;
    for (std::size_t n = 1; std::getline(in, line); ++n) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream words(line);
        std::vector<std::string> w;
        for (std::string x; words >> x;)
            w.push_back(x);
        if (!w.empty())
            out.rows.emplace_back(n, std::move(w));
    }
    return out;
}

[[noreturn]] void fail(std::string_view source, std::size_t line, const std::string& what)
{
    throw InputError(std::string(source) + ":" + std::to_string(line) + ": " + what);
}

std::size_t number(std::string_view source, std::size_t line, const std::string& s)
{
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size() || s.empty() || s[0] == '-' || s[0] == '+')
        fail(source, line, "expected a natural number, got '" + s + "'");
    return v;
}

/// Reads `key=value` header fields in the given order.
std::vector<std::size_t> header(std::string_view source, const Lines& L, std::string_view kind,
    const std::vector<std::string>& keys)
{
    if (L.rows.empty())
        throw InputError(std::string(source) + ": empty file");
    const auto& [line, w] = L.rows.front();
    if (w.size() != keys.size() + 1 || w[0] != kind)
        fail(source, line, "expected '" + std::string(kind) + "' header");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const auto prefix = keys[i] + "=";
        if (!w[i + 1].starts_with(prefix))
            fail(source, line, "expected " + prefix + "<n>");
        out.push_back(number(source, line, w[i + 1].substr(prefix.size())));
    }
    return out;
}

} // namespace

FinFamily parse_family(std::string_view text, std::string_view source)
{
    const auto L = split_lines(text);
    const auto n = header(source, L, "family", {"N"})[0];
    std::vector<FinSet> members;
    for (std::size_t r = 1; r < L.rows.size(); ++r) {
        const auto& [line, w] = L.rows[r];
        FinSet s = 0;
        for (const auto& x : w) {
            const auto v = number(source, line, x);
            if (v >= n)
                fail(source, line, "element " + x + " outside 0.." + std::to_string(n - 1));
            s |= FinSet{1} << v;
        }
        members.push_back(s);
    }
    try {
        return FinFamily::make(n, std::move(members));
    } catch (const InputError& e) {
        throw InputError(std::string(source) + ": " + e.what());
    }
}

std::string format_family(const FinFamily& F)
{
    std::string out = "family N=" + std::to_string(F.universe) + "\n";
    for (auto m : F.members) {
        std::string line;
        for (int x : elements_of(m))
            line += (line.empty() ? "" : " ") + std::to_string(x);
        out += line + "\n";
    }
    return out;
}

LevelColoring parse_coloring(std::string_view text, std::string_view source)
{
    const auto L = split_lines(text);
    const auto h = header(source, L, "coloring", {"d", "depth", "k"});
    if (h[0] < 1 || h[0] > 2 || h[1] > 10 || h[2] < 1 || h[2] > 255)
        fail(source, L.rows.front().first, "need 1 <= d <= 2, depth <= 10 and 1 <= k <= 255");
    LevelColoring f(h[0], h[1], h[2]);
    std::map<std::vector<TreeNode>, std::size_t> seen;
    for (std::size_t r = 1; r < L.rows.size(); ++r) {
        const auto& [line, w] = L.rows[r];
        if (w.size() != h[0] + 2 || w[h[0]] != "->")
            fail(source, line, "expected " + std::to_string(h[0]) + " node(s), '->' and a color");
        std::vector<TreeNode> tuple;
        for (std::size_t i = 0; i < h[0]; ++i) {
            try {
                tuple.push_back(TreeNode::parse(w[i]));
            } catch (const InputError& e) {
                fail(source, line, e.what());
            }
            if (tuple.back().len != tuple.front().len || tuple.back().len > h[1])
                fail(source, line, "nodes must share one level <= depth");
        }
        const auto c = number(source, line, w.back());
        if (c >= h[2])
            fail(source, line, "color " + w.back() + " outside 0.." + std::to_string(h[2] - 1));
        if (auto [it, fresh] = seen.emplace(tuple, line); !fresh)
            fail(source, line, "tuple already colored on line " + std::to_string(it->second));
        f.set(tuple, static_cast<int>(c));
    }
    return f;
}

std::string format_coloring(const LevelColoring& f)
{
    std::string out = "coloring d=" + std::to_string(f.dimension()) + " depth=" + std::to_string(f.depth())
        + " k=" + std::to_string(f.colors()) + "\n";
    for (std::size_t l = 0; l <= f.depth(); ++l) {
        std::vector<TreeNode> tuple(f.dimension());
        std::function<void(std::size_t)> walk = [&](std::size_t i) {
            if (i == tuple.size()) {
                for (const auto& u : tuple)
                    out += u.to_string() + " ";
                out += "-> " + std::to_string(f.at(tuple)) + "\n";
                return;
            }
            for (std::uint32_t c = 0; c < (std::uint32_t{1} << l); ++c) {
                tuple[i] = {static_cast<std::uint8_t>(l), c};
                walk(i + 1);
            }
        };
        walk(0);
    }
    return out;
}

} // namespace forcinglab
