#include <forcinglab/cli.hpp>

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include <forcinglab/corpus.hpp>
#include <forcinglab/forcing.hpp>
#include <forcinglab/formula.hpp>
#include <forcinglab/generic.hpp>
#include <forcinglab/gnw.hpp>
#include <forcinglab/halpern_lauchli.hpp>
#include <forcinglab/mathias_decide.hpp>
#include <forcinglab/oracle.hpp>
#include <forcinglab/ramsey_io.hpp>
#include <forcinglab/zoo.hpp>

namespace forcinglab {

const RegularOpenAlgebra& Workspace::algebra()
{
    if (!algebra_)
        algebra_ = std::make_unique<RegularOpenAlgebra>(file.poset);
    return *algebra_;
}

Workspace load_workspace(const std::filesystem::path& poset, const std::optional<std::filesystem::path>& names)
{
    Workspace ws;
    ws.file = read_poset_file(poset);
    if (names)
        ws.names = parse_names(read_text_file(*names), ws.poset(), names->string());
    return ws;
}

namespace {

std::string join_ids(const std::vector<std::string>& ids)
{
    std::string out;
    for (const auto& id : ids)
        out += (out.empty() ? "" : " ") + id;
    return out;
}

std::string set_line(const Poset& P, const ConditionSet& s)
{
    return "{" + join_ids(P.ids_of(s)) + "}";
}

/// A formula argument: literal text, or @path to read it from a file.
std::string formula_text(const std::string& arg)
{
    return arg.starts_with("@") ? read_text_file(arg.substr(1)) : arg;
}

int poset_check(const std::string& path, std::ostream& out)
{
    const auto pf = read_poset_file(path);
    const auto& P = *pf.poset;
    out << "poset " << P.name() << "\n";
    out << "conditions " << P.size() << "\n";
    out << "top " << P.id(P.top()) << "\n";
    out << "minimal " << P.minimal().count() << "\n";
    out << "separative " << (is_separative(P) ? "yes" : "no") << "\n";
    const auto q = separative_quotient(P);
    out << "separative-quotient " << q.quotient.size() << "\n";
    for (const auto& f : pf.families) {
        out << "family " << f.name << " size " << f.members.count() << " dense "
            << (is_dense(P, f.members) ? "yes" : "no") << " exhaustive " << (is_exhaustive(P, f.members) ? "yes" : "no")
            << " antichain " << (is_antichain(P, f.members) ? "yes" : "no") << "\n";
    }
    return 0;
}

int print_file(const std::string& kind, const std::string& path, const std::optional<std::string>& poset,
    const std::optional<std::string>& names, std::ostream& out)
{
    const auto text = read_text_file(path);
    if (kind == "poset") {
        const auto pf = parse_poset(text, path);
        out << format_poset(*pf.poset) << format_families(*pf.poset, pf.families);
    } else if (kind == "family") {
        out << format_family(parse_family(text, path));
    } else if (kind == "coloring") {
        out << format_coloring(parse_coloring(text, path));
    } else if (kind == "clopen") {
        out << ClopenPredicate::parse(text, path).to_string();
    } else if (kind == "names" || kind == "formula") {
        if (!poset)
            throw InputError("printing " + kind + " needs --poset");
        auto ws = load_workspace(*poset, kind == "formula" && names ? names : std::nullopt);
        if (kind == "names") {
            out << format_names(parse_names(text, ws.poset(), path), ws.poset());
        } else {
            for (const auto& e : parse_sexprs(text, path))
                out << to_string(parse_formula(e, ws.poset(), ws.names)) << "\n";
        }
    } else {
        throw InputError("unknown file kind '" + kind + "'");
    }
    return 0;
}

struct MkOptions {
    std::string ctor;
    std::size_t i = 1, depth = 1, k = 1, x = 2, len = 1, universe = 2;
    int L = 1;
    std::string eps = "1/4";
    std::optional<std::string> out;
};

Rational parse_rational(const std::string& s)
{
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw InputError("bad rational '" + s + "'");
    }
}

int make_poset(const MkOptions& o, std::ostream& out)
{
    ZooPoset z = [&] {
        if (o.ctor == "cohen")
            return cohen(o.i, o.depth);
        if (o.ctor == "random")
            return dyadic_random(static_cast<unsigned>(o.k));
        if (o.ctor == "amoeba")
            return amoeba(static_cast<unsigned>(o.k), parse_rational(o.eps));
        if (o.ctor == "collapse")
            return collapse(o.x, o.len);
        if (o.ctor == "mathias")
            return mathias(o.universe);
        if (o.ctor == "marker")
            return marker(o.L);
        throw InputError("unknown constructor '" + o.ctor + "' (cohen, random, amoeba, collapse, mathias, marker)");
    }();
    const auto poset_text = format_poset(*z.poset);
    const auto families = format_families(*z.poset, z.families);
    if (o.out) {
        write_text_file(*o.out, poset_text);
        write_text_file(*o.out + ".dense", families);
        out << "wrote " << *o.out << " (" << z.poset->size() << " conditions, " << z.families.size()
            << " families)\n";
    } else {
        out << poset_text << families;
    }
    return 0;
}

int force(Workspace& ws, const std::string& cond, const std::string& text, std::ostream& out)
{
    const auto p = ws.poset().index(cond);
    const auto f = parse_formula(formula_text(text), ws.poset(), ws.names);
    ForcingContext ctx(ws.file.poset);
    const auto d = ctx.decides(p, f);
    out << cond << " " << to_string(d) << " " << to_string(f) << "\n";
    return d == Decision::forces ? 0 : 1;
}

int truth(Workspace& ws, const std::string& text, std::ostream& out)
{
    const auto f = parse_formula(formula_text(text), ws.poset(), ws.names);
    ForcingContext ctx(ws.file.poset);
    out << set_line(ws.poset(), ctx.truth_value(ws.algebra(), f)) << "\n";
    return 0;
}

std::vector<std::string> split_commas(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, ',');)
        if (!item.empty())
            out.push_back(item);
    return out;
}

int generic(Workspace& ws, const std::string& from, const std::string& families, std::ostream& out)
{
    GenericRequest req{ws.poset().index(from), {}};
    for (const auto& name : split_commas(families))
        req.families.push_back(ws.file.family(name));
    out << set_line(ws.poset(), build_generic(ws.poset(), req)) << "\n";
    return 0;
}

int ultra(Workspace& ws, std::ostream& out)
{
    std::vector<std::string> lines;
    for (const auto& G : enumerate_ultrafilters(ws.poset()))
        lines.push_back(set_line(ws.poset(), G));
    std::sort(lines.begin(), lines.end());
    for (const auto& l : lines)
        out << l << "\n";
    return 0;
}

int oracle(Workspace& ws, const std::optional<std::string>& text, std::size_t depth, std::ostream& out)
{
    ForcingContext ctx(ws.file.poset);
    if (text) {
        int status = 0;
        for (const auto& e : parse_sexprs(formula_text(*text), "formula")) {
            const auto f = parse_formula(e, ws.poset(), ws.names);
            const auto diff = compare_with_oracle(ctx, f);
            out << to_string(f) << ": " << (diff.empty() ? "agree" : "DISAGREE");
            for (const auto& d : diff)
                out << " " << ws.poset().id(d.condition) << "(forced=" << d.forced << ",oracle=" << d.oracle << ")";
            out << "\n";
            if (!diff.empty())
                status = 1;
        }
        return status;
    }
    const auto r = run_oracle_suite(ctx, ws.names, depth);
    out << "oracle suite depth " << depth << " on " << ws.poset().name() << ": checked " << r.checked << ", covered "
        << r.covered << ", disagreements " << r.failed << "\n";
    for (const auto& f : r.failures)
        out << "  " << f << "\n";
    return r.failed == 0 ? 0 : 1;
}

struct GnwOptions {
    std::string family;
    std::size_t h = 1, m = 1;
    std::optional<std::size_t> s;
};

int ramsey_gnw(const GnwOptions& o, std::ostream& out)
{
    const auto F = parse_family(read_text_file(o.family), o.family);
    int status = 1;
    if (auto r = gnw_dichotomy_search(F, o.h, o.m)) {
        out << "dichotomy h=" << o.h << " m=" << o.m << ": H=" << format_fin_set(r->H) << " horn " << to_string(r->horn)
            << "\n";
        status = 0;
    } else {
        out << "dichotomy h=" << o.h << " m=" << o.m << ": exhausted\n";
    }
    const auto s = o.s.value_or(o.m);
    const auto c = gnw_construct(F, s, o.h);
    out << "construction at block size " << s << ":\n";
    for (const auto& e : c.transcript)
        out << "  " << e.to_string() << "\n";
    out << "  result H=" << format_fin_set(c.H);
    if (c.horn)
        out << " horn " << to_string(*c.horn);
    out << (c.completed ? " completed" : " incomplete") << "\n";
    return status;
}

int ramsey_hl(const std::string& path, std::ostream& out)
{
    const auto f = parse_coloring(read_text_file(path), path);
    const auto w = hl_search(f);
    if (!w) {
        out << "no witness\n";
        return 1;
    }
    out << w->to_string() << "\n";
    out << "check " << (check_hl_witness(f, *w) ? "ok" : "FAILED") << "\n";
    return 0;
}

int ramsey_mathias(std::size_t universe, const std::string& path, const std::optional<std::string>& cond,
    std::ostream& out)
{
    const auto X = ClopenPredicate::parse(read_text_file(path), path);
    const auto full = universe >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << universe) - 1;
    const auto p = cond ? MathiasCondition::from_id(*cond) : MathiasCondition{0, full};
    const auto d = mathias_pure_decide(universe, p, X);
    const auto check = decided_by_enumeration(d.q, X);
    out << "p " << p.id() << "\n";
    out << "q " << d.q.id() << " decides " << (d.positive ? "real in X" : "real not in X") << "\n";
    out << "enumeration " << (check && *check == d.positive ? "agrees" : "DISAGREES") << " over "
        << reals_through(d.q).size() << " reals\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"forcinglab: finite forcing posets, names and the forcing relation"};
    app.require_subcommand(1);
    std::function<int()> action;

    std::string path, kind, cond, text, families, from;
    std::optional<std::string> names_path, poset_opt, formula_opt, cond_opt;
    std::size_t depth = 3;

    auto* poset = app.add_subcommand("poset", "poset file commands");
    poset->require_subcommand(1);
    auto* check = poset->add_subcommand("check", "invariants and separativity report");
    check->add_option("file", path)->required();
    check->callback([&] { action = [&] { return poset_check(path, out); }; });

    auto* print = app.add_subcommand("print", "parse a file and print its canonical form");
    print->add_option("kind", kind, "poset, names, formula, family, coloring or clopen")->required();
    print->add_option("file", path)->required();
    print->add_option("--poset", poset_opt);
    print->add_option("--names", names_path);
    print->callback([&] { action = [&] { return print_file(kind, path, poset_opt, names_path, out); }; });

    MkOptions mk;
    auto* mkc = app.add_subcommand("mk", "build a zoo poset");
    mkc->add_option("ctor", mk.ctor, "cohen, random, amoeba, collapse, mathias or marker")->required();
    mkc->add_option("--i", mk.i);
    mkc->add_option("--depth", mk.depth);
    mkc->add_option("--k", mk.k);
    mkc->add_option("--eps", mk.eps);
    mkc->add_option("--x", mk.x);
    mkc->add_option("--len", mk.len);
    mkc->add_option("--universe", mk.universe);
    mkc->add_option("--L", mk.L);
    mkc->add_option("--out", mk.out);
    mkc->callback([&] { action = [&] { return make_poset(mk, out); }; });

    auto with_workspace = [&](CLI::App* sub) {
        sub->add_option("--poset", path)->required();
        sub->add_option("--names", names_path);
    };
    auto load = [&] {
        return load_workspace(path, names_path ? std::optional<std::filesystem::path>(*names_path) : std::nullopt);
    };

    auto* forcec = app.add_subcommand("force", "does a condition force a formula");
    with_workspace(forcec);
    forcec->add_option("--cond", cond)->required();
    forcec->add_option("formula", text, "formula text or @file")->required();
    forcec->callback([&] { action = [&] { auto ws = load(); return force(ws, cond, text, out); }; });

    auto* truthc = app.add_subcommand("truth", "Boolean value of a formula as a regular open set");
    with_workspace(truthc);
    truthc->add_option("formula", text, "formula text or @file")->required();
    truthc->callback([&] { action = [&] { auto ws = load(); return truth(ws, text, out); }; });

    auto* genc = app.add_subcommand("generic", "build a filter generic for named families");
    with_workspace(genc);
    genc->add_option("--from", from)->required();
    genc->add_option("--families", families);
    genc->callback([&] { action = [&] { auto ws = load(); return generic(ws, from, families, out); }; });

    auto* ultrac = app.add_subcommand("ultra", "list the maximal filters");
    with_workspace(ultrac);
    ultrac->callback([&] { action = [&] { auto ws = load(); return ultra(ws, out); }; });

    auto* oraclec = app.add_subcommand("oracle", "compare forcing with the minimal-filter semantics");
    with_workspace(oraclec);
    oraclec->add_option("--formula", formula_opt, "formula text or @file (several formulas allowed)");
    oraclec->add_option("--depth", depth, "without --formula: check every formula up to this depth (1..3)");
    oraclec->callback([&] { action = [&] { auto ws = load(); return oracle(ws, formula_opt, depth, out); }; });

    auto* ramsey = app.add_subcommand("ramsey", "combinatorial searches");
    ramsey->require_subcommand(1);
    GnwOptions gnw;
    auto* gnwc = ramsey->add_subcommand("gnw", "accept/reject dichotomy on a finite family");
    gnwc->set_help_flag("--help", "Print this help message and exit");
    gnwc->add_option("--family", gnw.family)->required();
    gnwc->add_option("--h", gnw.h)->required();
    gnwc->add_option("--m", gnw.m)->required();
    gnwc->add_option("--s", gnw.s, "block size for the construction (default m)");
    gnwc->callback([&] { action = [&] { return ramsey_gnw(gnw, out); }; });
    auto* hlc = ramsey->add_subcommand("hl", "dense-set search on a level coloring");
    hlc->add_option("--coloring", path)->required();
    hlc->callback([&] { action = [&] { return ramsey_hl(path, out); }; });
    std::size_t universe = 0;
    auto* mathc = ramsey->add_subcommand("mathias", "pure decision of a clopen predicate");
    mathc->add_option("--universe", universe)->required();
    mathc->add_option("--clopen", path)->required();
    mathc->add_option("--cond", cond_opt, "condition id (default: empty stem, full envelope)");
    mathc->callback([&] { action = [&] { return ramsey_mathias(universe, path, cond_opt, out); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }
    try {
        return action();
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const SizeError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace forcinglab
