#include <forcinglab/mathias_decide.hpp>

#include <algorithm>
#include <bit>
#include <sstream>

#include <forcinglab/gnw.hpp>
#include <forcinglab/hf.hpp>

namespace forcinglab {

ClopenPredicate ClopenPredicate::make(std::size_t horizon, std::vector<std::string> accepted)
{
    if (horizon > 31)
        throw InputError("clopen horizon must be at most 31");
    for (const auto& s : accepted) {
        if (s.size() > horizon)
            throw InputError("accepted prefix '" + s + "' is longer than the horizon " + std::to_string(horizon));
        if (s.find_first_not_of("01") != std::string::npos)
            throw InputError("accepted prefix '" + s + "' is not a bitstring");
    }
    std::sort(accepted.begin(), accepted.end());
    accepted.erase(std::unique(accepted.begin(), accepted.end()), accepted.end());
    return {horizon, std::move(accepted)};
}

bool ClopenPredicate::holds(std::uint32_t real) const
{
    return std::any_of(accepted.begin(), accepted.end(), [&](const std::string& s) {
        for (std::size_t i = 0; i < s.size(); ++i)
            if (((real >> i & 1) != 0) != (s[i] == '1'))
                return false;
        return true;
    });
}

ClopenPredicate ClopenPredicate::parse(std::string_view text, std::string_view source)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::size_t> horizon;
    std::vector<std::string> accepted;
    auto fail = [&](const std::string& what) {
        throw InputError(std::string(source) + ":" + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream words(line);
        std::vector<std::string> w;
        for (std::string x; words >> x;)
            w.push_back(x);
        if (w.empty())
            continue;
        if (!horizon) {
            if (w.size() != 2 || w[0] != "clopen" || !w[1].starts_with("t="))
                fail("expected 'clopen t=<horizon>'");
            try {
                horizon = std::stoul(w[1].substr(2));
            } catch (const std::exception&) {
                fail("bad horizon '" + w[1] + "'");
            }
            continue;
        }
        if (w.size() != 1)
            fail("expected one bitstring per line");
        accepted.push_back(w[0] == "ε" ? "" : w[0]);
    }
    if (!horizon)
        fail("missing 'clopen t=<horizon>' header");
    try {
        return make(*horizon, std::move(accepted));
    } catch (const InputError& e) {
        throw InputError(std::string(source) + ": " + e.what());
    }
}

std::string ClopenPredicate::to_string() const
{
    std::string out = "clopen t=" + std::to_string(horizon) + "\n";
    for (const auto& s : accepted)
        out += (s.empty() ? "ε" : s) + "\n";
    return out;
}

std::vector<ClopenPredicate> all_clopen_predicates(std::size_t horizon)
{
    if (horizon > 4)
        throw SizeError("all_clopen_predicates is limited to horizon 4");
    const std::size_t strings = std::size_t{1} << horizon;
    std::vector<ClopenPredicate> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << strings); ++mask) {
        std::vector<std::string> acc;
        for (std::size_t v = 0; v < strings; ++v)
            if (mask >> v & 1) {
                std::string s(horizon, '0');
                for (std::size_t i = 0; i < horizon; ++i)
                    s[i] = (v >> i & 1) ? '1' : '0';
                acc.push_back(s);
            }
        out.push_back(ClopenPredicate::make(horizon, std::move(acc)));
    }
    return out;
}

std::vector<std::uint32_t> reals_through(const MathiasCondition& q)
{
    std::vector<std::uint32_t> out;
    const std::uint32_t free = q.envelope & ~q.stem;
    for (std::uint32_t z = free;; z = (z - 1) & free) {
        if ((q.stem | z) != 0)
            out.push_back(q.stem | z);
        if (z == 0)
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<bool> decided_by_enumeration(const MathiasCondition& q, const ClopenPredicate& X)
{
    std::optional<bool> value;
    for (auto r : reals_through(q)) {
        const bool v = X.holds(r);
        if (value && *value != v)
            return std::nullopt;
        value = v;
    }
    return value;
}

MathiasDecision mathias_pure_decide(std::size_t universe, const MathiasCondition& p, const ClopenPredicate& X)
{
    if (!p.valid(universe))
        throw InputError("'" + p.id() + "' is not a Mathias condition over " + std::to_string(universe));
    if (static_cast<std::size_t>(std::popcount(p.envelope)) < static_cast<std::size_t>(std::popcount(p.stem)) + X.horizon)
        throw SizeError("envelope of " + p.id() + " needs at least |stem| + " + std::to_string(X.horizon)
            + " elements");
    const std::uint32_t window = X.horizon >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << X.horizon) - 1;
    const std::uint32_t rest = p.envelope & ~p.stem;
    const std::uint32_t high = rest & ~window;
    const auto low = elements_of(rest & window);

    for (std::size_t size = low.size() + 1; size-- > 0;) {
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i)
            idx[i] = i;
        for (;;) {
            std::uint32_t keep = 0;
            for (auto i : idx)
                keep |= std::uint32_t{1} << low[i];
            const MathiasCondition q{p.stem, p.stem | high | keep};
            if (q.envelope != 0)
                if (auto v = decided_by_enumeration(q, X))
                    return {q, *v};
            std::size_t i = 0;
            while (i < size && idx[i] + 1 == (i + 1 < size ? idx[i + 1] : low.size()))
                ++i;
            if (i == size)
                break;
            ++idx[i];
            for (std::size_t j = 0; j < i; ++j)
                idx[j] = j;
        }
    }
    // Keeping no horizon element leaves one window pattern; only an empty
    // envelope could stop that, and the size check rules it out.
    throw std::logic_error("no deciding pure extension of " + p.id());
}

Name mathias_real_name(const Poset& P)
{
    std::vector<NameEntry> entries;
    for (ConditionIndex r = 0; r < P.size(); ++r) {
        const auto c = MathiasCondition::from_id(P.id(r));
        for (int n : elements_of(c.stem))
            entries.push_back({check_name(HFSet::natural(static_cast<std::size_t>(n)), P), r});
    }
    return Name::make(std::move(entries));
}

Formula clopen_formula(const ClopenPredicate& X, const Poset& P, Name real)
{
    auto nat = [&](std::size_t i) {
        return Term::of(std::to_string(i), check_name(HFSet::natural(i), P));
    };
    const Term r = Term::of("real", real);
    const Formula truth = eq(nat(0), nat(0));
    Formula out;
    for (const auto& s : X.accepted) {
        Formula clause = truth;
        for (std::size_t i = 0; i < s.size(); ++i) {
            auto lit = mem(nat(i), r);
            if (s[i] == '0')
                lit = negation(lit);
            clause = i == 0 ? lit : conjunction(clause, lit);
        }
        out = out ? disjunction(out, clause) : clause;
    }
    return out ? out : negation(truth);
}

} // namespace forcinglab
