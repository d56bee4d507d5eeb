#include <forcinglab/poset_io.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace forcinglab {

const ConditionFamily& PosetFile::family(std::string_view name) const
{
    for (const auto& f : families)
        if (f.name == name)
            return f;
    throw InputError("unknown family '" + std::string(name) + "'");
}

std::vector<std::string_view> split_words(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

namespace {

struct RawFamily {
    std::string name;
    std::vector<std::string> ids;
};

[[noreturn]] void fail(std::string_view source, std::size_t line, const std::string& msg)
{
    throw InputError(std::string(source) + ":" + std::to_string(line) + ": " + msg);
}

std::string_view strip_comment(std::string_view line)
{
    if (auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
    return line;
}

void parse_dense_line(const std::vector<std::string_view>& w, std::string_view source, std::size_t lineno,
    std::vector<RawFamily>& out)
{
    if (w.size() < 2)
        fail(source, lineno, "dense line needs a family name");
    if (!valid_identifier(w[1]))
        fail(source, lineno, "invalid family name '" + std::string(w[1]) + "'");
    RawFamily f{std::string(w[1]), {}};
    for (std::size_t i = 2; i < w.size(); ++i)
        f.ids.emplace_back(w[i]);
    out.push_back(std::move(f));
}

std::vector<ConditionFamily> resolve(const Poset& P, const std::vector<RawFamily>& raw, std::string_view source)
{
    std::vector<ConditionFamily> out;
    for (const auto& r : raw) {
        ConditionFamily f{r.name, P.empty_set(), FamilyKind::unrestricted};
        for (const auto& id : r.ids) {
            auto i = P.find(id);
            if (!i)
                throw InputError(std::string(source) + ": family '" + r.name + "' names unknown condition '" + id + "'");
            f.members.set(*i);
        }
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<RawFamily> parse_dense_text(std::string_view text, std::string_view source)
{
    std::vector<RawFamily> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto w = split_words(strip_comment(line));
        if (w.empty())
            continue;
        if (w[0] != "dense")
            fail(source, lineno, "expected 'dense', found '" + std::string(w[0]) + "'");
        parse_dense_line(w, source, lineno, out);
    }
    return out;
}

} // namespace

PosetFile parse_poset(std::string_view text, std::string_view source)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    std::string name;
    std::string top;
    std::vector<std::string> elems;
    std::vector<std::pair<std::string, std::string>> le;
    std::vector<RawFamily> raw;
    bool seen_header = false;

    auto need_id = [&](std::string_view id) {
        if (!valid_identifier(id))
            fail(source, lineno, "invalid identifier '" + std::string(id) + "'");
        return std::string(id);
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto w = split_words(strip_comment(line));
        if (w.empty())
            continue;
        const auto kw = w[0];
        if (!seen_header) {
            if (kw != "poset" || w.size() != 2)
                fail(source, lineno, "expected 'poset <name>'");
            name = need_id(w[1]);
            seen_header = true;
            continue;
        }
        if (kw == "top") {
            if (w.size() != 2)
                fail(source, lineno, "expected 'top <id>'");
            if (!top.empty())
                fail(source, lineno, "duplicate top");
            top = need_id(w[1]);
        } else if (kw == "elem") {
            if (w.size() != 2)
                fail(source, lineno, "expected 'elem <id>'");
            elems.push_back(need_id(w[1]));
        } else if (kw == "le") {
            if (w.size() != 3)
                fail(source, lineno, "expected 'le <id> <id>'");
            le.emplace_back(need_id(w[1]), need_id(w[2]));
        } else if (kw == "dense") {
            parse_dense_line(w, source, lineno, raw);
        } else {
            fail(source, lineno, "unknown keyword '" + std::string(kw) + "'");
        }
    }
    if (!seen_header)
        throw InputError(std::string(source) + ": missing 'poset' header");
    if (top.empty())
        throw InputError(std::string(source) + ": missing 'top' line");
    if (std::find(elems.begin(), elems.end(), top) == elems.end())
        elems.push_back(top);

    auto P = std::make_shared<const Poset>(Poset::from_relation(name, elems, top, le));
    return PosetFile{P, resolve(*P, raw, source)};
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write '" + path.string() + "'");
    out << text;
}

PosetFile read_poset_file(const std::filesystem::path& path)
{
    auto pf = parse_poset(read_text_file(path), path.string());
    auto sidecar = path;
    sidecar += ".dense";
    if (std::filesystem::exists(sidecar)) {
        auto raw = parse_dense_text(read_text_file(sidecar), sidecar.string());
        auto more = resolve(*pf.poset, raw, sidecar.string());
        pf.families.insert(pf.families.end(), more.begin(), more.end());
    }
    return pf;
}

std::string format_poset(const Poset& P)
{
    std::ostringstream out;
    out << "poset " << P.name() << "\n";
    out << "top " << P.id(P.top()) << "\n";
    for (const auto& id : P.ids())
        out << "elem " << id << "\n";
    const auto n = P.size();
    for (std::size_t p = 0; p < n; ++p) {
        ConditionSet equiv = P.up(p) & P.down(p);
        ConditionSet strict_up = P.up(p) - equiv;
        ConditionSet covers = strict_up;
        for (auto r = strict_up.find_first(); r != ConditionSet::npos; r = strict_up.find_next(r))
            covers -= (P.up(r) - (P.up(r) & P.down(r)));
        // Keep one representative per equivalence class of covers.
        for (auto q = covers.find_first(); q != ConditionSet::npos; q = covers.find_next(q)) {
            ConditionSet same = P.up(q) & P.down(q);
            if (same.find_first() == q)
                out << "le " << P.id(p) << " " << P.id(q) << "\n";
        }
        for (auto q = equiv.find_first(); q != ConditionSet::npos; q = equiv.find_next(q))
            if (q != p)
                out << "le " << P.id(p) << " " << P.id(q) << "\n";
    }
    return out.str();
}

std::string format_families(const Poset& P, const std::vector<ConditionFamily>& families)
{
    std::ostringstream out;
    for (const auto& f : families) {
        out << "dense " << f.name;
        for (const auto& id : P.ids_of(f.members))
            out << " " << id;
        out << "\n";
    }
    return out.str();
}

} // namespace forcinglab
