// Command-line surface: argument parsing, dispatch to the library, and
// deterministic text/JSON reports.
//
// Exit codes: 0 = computed, 1 = property violated / mismatch found,
// 2 = usage, parse or budget error (and internal re-verification failures,
// which abort with a bug banner).  Every emitted witness is re-verified
// before the report goes out.
#ifndef RINGLAB_CLI_HPP
#define RINGLAB_CLI_HPP

#include <CLI11.hpp>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ringlab/dsl.hpp"
#include "ringlab/products.hpp"
#include "ringlab/report.hpp"

namespace ringlab {

struct CliResult {
    int exit_code = 0;
    Json report;
    std::string text;
};

namespace clidetail {

inline std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(detail::strip(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    cur = detail::strip(cur);
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    while (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

inline std::vector<FiniteRing> parse_family(const std::string& s) {
    std::vector<FiniteRing> out;
    for (const std::string& part : split_list(s, ','))
        if (!part.empty()) out.push_back(make_ring(part));
    return out;
}

inline VarTable vars_from_flag(const std::string& vars) {
    VarTable vt;
    for (const std::string& v : split_list(vars, ','))
        if (!v.empty()) vt.lookup_or_add(v);
    vt.frozen = true;
    return vt;
}

inline std::vector<Poly> parse_poly_list(const std::string& s, VarTable& vt) {
    std::vector<Poly> out;
    for (const std::string& part : split_list(s, ','))
        if (!part.empty()) out.push_back(parse_poly(part, vt));
    return out;
}

// morphism literal: a named morphism (e, i, o, s, dp<p>) or
//   "<dom presentation> -> <cod presentation> [: img1, img2, ...]"
// with images in domain-variable order, written in the codomain's variables.
inline PrimMorphism parse_morphism_literal(const std::string& text) {
    std::string s = detail::strip(text);
    if (auto named = named_morphism(s)) return *named;
    std::size_t arrow = s.find("->");
    if (arrow == std::string::npos)
        throw parse_error("morphism literal needs '->' (or a known name): " + s);
    Presentation dom = parse_presentation(s.substr(0, arrow));
    std::string rest = detail::strip(s.substr(arrow + 2));
    std::size_t colon = rest.find(':');
    Presentation cod =
        parse_presentation(colon == std::string::npos ? rest : rest.substr(0, colon));
    PrimMorphism m;
    m.dom = dom;
    m.cod = cod;
    if (colon != std::string::npos) {
        VarTable vt = VarTable::fixed(cod.all_var_names());
        for (const std::string& part : split_list(rest.substr(colon + 1), ','))
            if (!part.empty()) m.images.push_back(parse_poly(part, vt));
    }
    if (static_cast<int>(m.images.size()) != dom.nvars)
        throw parse_error("morphism literal: expected " + std::to_string(dom.nvars) +
                          " image(s), got " + std::to_string(m.images.size()));
    m.validate();
    return m;
}

// validated before any computation: a refuted morphism is a usage error
inline PrimMorphism parse_checked_morphism(const std::string& text) {
    PrimMorphism m = parse_morphism_literal(text);
    WellDefinedTools tools;
    tools.finite_refute = {make_ring("Z/2"), make_ring("Z/3"), make_ring("Z/4")};
    m.verification = verify_well_defined(m, tools).verdict;
    if (m.verification == Verification::Refuted)
        throw invalid_argument_error("morphism is not well-defined: " + text);
    return m;
}

inline std::string read_text_arg(const std::string& arg) {
    std::ifstream in(arg);
    if (!in) throw parse_error("cannot open file '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Theory theory_from_flag(const std::string& spec) {
    if (spec.rfind("builtin:", 0) == 0) return builtin_theory(spec.substr(8));
    // inline source starts with the header keyword; anything else is a path
    if (spec.rfind("theory ", 0) == 0 || spec.find('\n') != std::string::npos)
        return parse_theory(spec);
    return parse_theory(read_text_arg(spec));
}

inline std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    for (const std::string& part : split_list(s, ','))
        if (!part.empty()) out.push_back(std::stoi(part));
    return out;
}

inline std::vector<std::vector<int>> parse_tuple_list(const std::string& s) {
    std::vector<std::vector<int>> out;
    for (const std::string& part : split_list(s, ';')) out.push_back(parse_int_list(part));
    return out;
}

inline Diagram parse_diagram(const std::string& arg) {
    std::string src = detail::strip(arg);
    if (!src.empty() && src[0] != '{') src = read_text_arg(src);
    Json j = Json::parse(src);
    Diagram D;
    D.ring = make_ring(j.at("ring").get<std::string>());
    for (const Json& obj : j.at("objects")) {
        D.objects.push_back(parse_presentation(obj.at("pres").get<std::string>()));
        D.anchors.push_back(obj.at("anchor").get<std::vector<int>>());
    }
    if (j.contains("arrows"))
        for (const Json& ar : j.at("arrows")) {
            Diagram::Arrow a;
            a.src = ar.at("src").get<int>();
            a.dst = ar.at("dst").get<int>();
            a.u = parse_checked_morphism(ar.at("morphism").get<std::string>());
            D.arrows.push_back(std::move(a));
        }
    D.validate();
    return D;
}

}  // namespace clidetail

inline CliResult run_command(const std::vector<std::string>& args) {
    CLI::App app{"finitely presented rings, arithmetic theories and finite models"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    bool json_out = false, text_out = false;
    std::uint64_t budget_tuples = EnumBudget{}.max_tuples;
    int bound = 3;
    GroebnerBudget gb_budget;
    app.add_flag("--json", json_out, "emit the JSON report");
    app.add_flag("--text", text_out, "emit the text rendering (default)");
    app.add_option("--budget", budget_tuples, "enumeration budget (tuples)");
    app.add_option("--bound", bound, "schema cursor bound");
    app.add_option("--gb-max-basis", gb_budget.max_basis, "Groebner basis size cap");
    app.add_option("--gb-max-degree", gb_budget.max_degree, "Groebner degree cap");
    app.add_option("--gb-max-coeff-bits", gb_budget.max_coeff_bits, "Groebner coefficient cap");

    std::string pres_s, ring_s, family_s, vars_s, gens_s, q_s, order_s = "grlex";
    std::string domain_s = "Q", morphism_s, morphism2_s, points_s, theory_s, axiom_s;
    std::string diagram_s, x_s, check_rings_s, filter_s, factors_s, which_s = "continues";
    std::string images_s, param_s, p_s = "0";
    int degree_bound = -1, hom_index = 0, max_factors = 3;

    CLI::App* homs_cmd = app.add_subcommand("homs", "enumerate hom(P, A)");
    homs_cmd->add_option("--pres", pres_s)->required();
    homs_cmd->add_option("--ring", ring_s)->required();

    CLI::App* exists_cmd = app.add_subcommand("exists", "the set exists_m A");
    exists_cmd->add_option("--morphism", morphism_s)->required();
    exists_cmd->add_option("--ring", ring_s)->required();

    CLI::App* pushout_cmd = app.add_subcommand("pushout", "pushout of m and a over their domain");
    pushout_cmd->add_option("--m", morphism_s)->required();
    pushout_cmd->add_option("--a", morphism2_s)->required();

    CLI::App* colimit_cmd = app.add_subcommand("colimit", "colimit of an anchored diagram");
    colimit_cmd->add_option("--diagram", diagram_s)->required();

    CLI::App* ideal_cmd = app.add_subcommand("ideal", "Groebner basis and ideal membership");
    ideal_cmd->add_option("--gens", gens_s)->required();
    ideal_cmd->add_option("--q", q_s)->required();
    ideal_cmd->add_option("--vars", vars_s)->required();
    ideal_cmd->add_option("--domain", domain_s, "Z | Q | Zp");
    ideal_cmd->add_option("--p", p_s, "prime for Zp");
    ideal_cmd->add_option("--order", order_s, "lex | grlex");

    CLI::App* radical_cmd = app.add_subcommand("radical", "radical membership over a field");
    radical_cmd->add_option("--gens", gens_s)->required();
    radical_cmd->add_option("--q", q_s)->required();
    radical_cmd->add_option("--vars", vars_s)->required();
    radical_cmd->add_option("--p", p_s, "0 for Q, else a prime");

    CLI::App* closure_cmd = app.add_subcommand("closure", "Zariski closure of a finite point set");
    closure_cmd->add_option("--ring", ring_s)->required();
    closure_cmd->add_option("--nvars", vars_s)->required();
    closure_cmd->add_option("--points", points_s, "semicolon-separated tuples of element indices");
    closure_cmd->add_option("--degree-bound", degree_bound, "per-variable degree bound (non-fields)");

    CLI::App* crad_cmd = app.add_subcommand("crad", "relative radical membership");
    crad_cmd->add_option("--ring", ring_s)->required();
    crad_cmd->add_option("--family", family_s)->required();
    crad_cmd->add_option("--ideal", gens_s)->required();
    crad_cmd->add_option("--q", q_s)->required();
    crad_cmd->add_option("--vars", vars_s)->required();

    CLI::App* gc_cmd = app.add_subcommand("gc-check", "relative Nullstellensatz consistency");
    gc_cmd->add_option("--ring", ring_s)->required();
    gc_cmd->add_option("--family", family_s)->required();
    gc_cmd->add_option("--ideal", gens_s)->required();
    gc_cmd->add_option("--q", q_s)->required();
    gc_cmd->add_option("--vars", vars_s)->required();

    CLI::App* sat_cmd = app.add_subcommand("sat", "theory / axiom satisfaction");
    sat_cmd->add_option("--ring", ring_s)->required();
    sat_cmd->add_option("--theory", theory_s, "builtin:<name>, file path, or inline source");
    sat_cmd->add_option("--axiom", axiom_s, "a single sentence");

    CLI::App* classify_cmd = app.add_subcommand("classify", "universal / Horn / negative tags");
    classify_cmd->add_option("--theory", theory_s);
    classify_cmd->add_option("--axiom", axiom_s);

    CLI::App* resultant_cmd = app.add_subcommand("resultant", "resultant membership over a family");
    resultant_cmd->add_option("--n", morphism_s)->required();
    resultant_cmd->add_option("--m", morphism2_s)->required();
    resultant_cmd->add_option("--family", family_s)->required();

    CLI::App* cover_cmd = app.add_subcommand("cover", "complement cover check over a family");
    cover_cmd->add_option("--m", morphism_s)->required();
    cover_cmd->add_option("--x", x_s, "semicolon-separated morphism literals");
    cover_cmd->add_option("--family", family_s)->required();

    CLI::App* diamor_cmd = app.add_subcommand("diamor", "change of basis and the double oracle");
    diamor_cmd->add_option("--diagram", diagram_s)->required();
    diamor_cmd->add_option("--x", x_s, "semicolon-separated '<morphism literal> @ <object>'")
        ->required();
    diamor_cmd->add_option("--check-rings", check_rings_s, "verify the equivalence on these rings");

    CLI::App* rprod_cmd = app.add_subcommand("rprod", "reduced product along a filter");
    rprod_cmd->add_option("--factors", factors_s)->required();
    rprod_cmd->add_option("--filter", filter_s, "semicolon-separated generator subsets");
    rprod_cmd->add_option("--axiom", axiom_s, "preservation check for this sentence");

    CLI::App* purity_cmd = app.add_subcommand("purity", "purity / e.c. instance check");
    purity_cmd->add_option("--ring-a", ring_s)->required();
    purity_cmd->add_option("--ring-b", family_s)->required();
    purity_cmd->add_option("--hom-index", hom_index, "index into ring_homs(A, B)");
    purity_cmd->add_option("--m", morphism_s)->required();
    purity_cmd->add_option("--param", param_s, "comma-separated element indices");

    CLI::App* member_cmd = app.add_subcommand("member", "category membership searches");
    member_cmd->add_option("--ring", ring_s)->required();
    member_cmd->add_option("--family", family_s)->required();
    member_cmd->add_option("--which", which_s, "continues | embeds | special");
    member_cmd->add_option("--max-factors", max_factors);

    CliResult res;
    Json& rep = res.report;
    rep["schema_version"] = kReportSchemaVersion;
    std::vector<std::string> headline;

    try {
        std::vector<char*> argv;
        std::vector<std::string> storage = args;
        storage.insert(storage.begin(), "ringlab");
        for (std::string& s : storage) argv.push_back(s.data());
        app.parse(static_cast<int>(argv.size()), argv.data());

        EnumBudget budget{budget_tuples};
        {
            Json echo = Json::array();
            for (const std::string& a : args) echo.push_back(a);
            rep["argv"] = echo;
            rep["budgets"] = {{"enumeration_tuples", budget.max_tuples},
                              {"gb_max_basis", gb_budget.max_basis},
                              {"gb_max_degree", gb_budget.max_degree},
                              {"gb_max_coeff_bits", gb_budget.max_coeff_bits},
                              {"schema_bound", bound}};
        }

        if (*homs_cmd) {
            rep["command"] = "homs";
            Presentation P = parse_presentation(pres_s);
            FiniteRing A = make_ring(ring_s);
            PointSet ps = homs(P, A, budget);
            for (const auto& pt : ps.members)
                if (!is_point_of(P, A, pt)) throw error("homs: emitted point failed re-verification");
            rep["result"] = pointset_json(ps);
            headline.push_back("|hom(" + P.to_string() + ", " + A.name() + ")| = " +
                               std::to_string(ps.size()));
        } else if (*exists_cmd) {
            rep["command"] = "exists";
            PrimMorphism m = clidetail::parse_checked_morphism(morphism_s);
            FiniteRing A = make_ring(ring_s);
            PointSet es = exists_set(m, A, budget);
            // every member must have a preimage point
            PointSet qs = homs(m.cod, A, budget);
            for (const auto& a : es.members) {
                bool hit = false;
                for (const auto& b : qs.members)
                    if (precompose_values(m, A, b) == a) {
                        hit = true;
                        break;
                    }
                if (!hit) throw error("exists: emitted point failed re-verification");
            }
            rep["morphism"] = morphism_json(m);
            rep["result"] = pointset_json(es);
            headline.push_back("|exists_m " + A.name() + "| = " + std::to_string(es.size()));
        } else if (*pushout_cmd) {
            rep["command"] = "pushout";
            PrimMorphism m = clidetail::parse_checked_morphism(morphism_s);
            PrimMorphism a = clidetail::parse_checked_morphism(morphism2_s);
            PushoutResult po = pushout(m, a);
            rep["m"] = morphism_json(m);
            rep["a"] = morphism_json(a);
            rep["apex"] = po.apex.to_string();
            rep["from_cod"] = morphism_json(po.from_cod);
            rep["from_other"] = morphism_json(po.from_other);
            headline.push_back("apex: " + po.apex.to_string());
        } else if (*colimit_cmd) {
            rep["command"] = "colimit";
            Diagram D = clidetail::parse_diagram(diagram_s);
            ColimitResult col = colimit(D);
            rep["ring"] = D.ring.name();
            rep["objects"] = D.objects.size();
            rep["arrows"] = D.arrows.size();
            rep["apex"] = col.apex.to_string();
            Json injs = Json::array();
            for (const auto& inj : col.injections) injs.push_back(morphism_json(inj));
            rep["injections"] = injs;
            headline.push_back("apex: " + col.apex.to_string());
        } else if (*ideal_cmd) {
            rep["command"] = "ideal";
            VarTable vt = clidetail::vars_from_flag(vars_s);
            std::vector<Poly> gens = clidetail::parse_poly_list(gens_s, vt);
            Poly q = parse_poly(q_s, vt);
            MonomialOrder ord = order_s == "lex" ? MonomialOrder::lex() : MonomialOrder::grlex();
            GBDomain dom = domain_s == "Z"    ? GBDomain::Integers
                           : domain_s == "Zp" ? GBDomain::ModP
                                              : GBDomain::Rationals;
            Int p = dom == GBDomain::ModP ? Int(p_s) : Int(0);
            GBasis gb = gbasis(gens, ord, dom, p, gb_budget);
            bool member = normal_form(q, gb).is_zero();
            Json basis = Json::array();
            for (const Poly& g : gb.gens) basis.push_back(poly_to_string(g, vt.names));
            rep["domain"] = to_string(dom);
            rep["order"] = order_s;
            rep["basis"] = basis;
            rep["q"] = poly_to_string(q, vt.names);
            rep["member"] = member ? "proved" : "refuted";
            headline.push_back("membership: " + std::string(member ? "proved" : "refuted"));
        } else if (*radical_cmd) {
            rep["command"] = "radical";
            VarTable vt = clidetail::vars_from_flag(vars_s);
            std::vector<Poly> gens = clidetail::parse_poly_list(gens_s, vt);
            Poly q = parse_poly(q_s, vt);
            Int p(p_s);
            bool member = radical_member(q, gens, p, gb_budget);
            rep["p"] = p_s;
            rep["q"] = poly_to_string(q, vt.names);
            rep["member"] = member ? "proved" : "refuted";
            headline.push_back("radical membership: " + std::string(member ? "proved" : "refuted"));
        } else if (*closure_cmd) {
            rep["command"] = "closure";
            FiniteRing A = make_ring(ring_s);
            int nvars = std::stoi(vars_s);
            PointSet E{A, Presentation::free_ring(nvars), {}, "input"};
            for (auto& t : clidetail::parse_tuple_list(points_s)) {
                if (!is_point_of(E.pres, A, t))
                    throw invalid_argument_error("closure: input tuple out of range");
                E.members.push_back(t);
            }
            detail::sort_unique(E.members);
            std::optional<int> D;
            if (degree_bound > 0) D = degree_bound;
            PointSet cl = zariski_closure(E, D, budget);
            rep["ring"] = A.name();
            rep["input"] = pointset_json(E);
            rep["closure"] = pointset_json(cl);
            rep["equals_input"] = cl.members == E.members;
            headline.push_back("closure size " + std::to_string(cl.size()) + " (input " +
                               std::to_string(E.size()) + ")");
        } else if (*crad_cmd) {
            rep["command"] = "crad";
            FiniteRing A = make_ring(ring_s);
            std::vector<FiniteRing> C = clidetail::parse_family(family_s);
            VarTable vt = clidetail::vars_from_flag(vars_s);
            int nx = static_cast<int>(vt.names.size());
            std::vector<ParamPoly> I;
            for (Poly& g : clidetail::parse_poly_list(gens_s, vt))
                I.push_back(ParamPoly::plain(g, nx));
            ParamPoly q = ParamPoly::plain(parse_poly(q_s, vt), nx);
            bool member = crad_member(q, I, nx, A, C, budget);
            rep["ring"] = A.name();
            Json fam = Json::array();
            for (const auto& B : C) fam.push_back(B.name());
            rep["family"] = fam;
            rep["member"] = member;
            headline.push_back(std::string("crad membership: ") + (member ? "true" : "false"));
        } else if (*gc_cmd) {
            rep["command"] = "gc-check";
            FiniteRing A = make_ring(ring_s);
            std::vector<FiniteRing> C = clidetail::parse_family(family_s);
            VarTable vt = clidetail::vars_from_flag(vars_s);
            int nx = static_cast<int>(vt.names.size());
            std::vector<ParamPoly> I;
            for (Poly& g : clidetail::parse_poly_list(gens_s, vt))
                I.push_back(ParamPoly::plain(g, nx));
            std::vector<ParamPoly> qs;
            std::vector<std::string> qnames;
            for (Poly& g : clidetail::parse_poly_list(q_s, vt)) {
                qnames.push_back(poly_to_string(g, vt.names));
                qs.push_back(ParamPoly::plain(g, nx));
            }
            GcReport gc = gc_check(A, C, I, nx, qs, budget);
            // re-verify any mismatch
            PointSet z = zero_set(I, nx, A, nullptr, budget);
            for (std::size_t i = 0; i < qs.size(); ++i) {
                GcEntry again{vanishes(qs[i], z), crad_member(qs[i], I, nx, A, C, budget)};
                if (again.in_vanishing_of_zero_set != gc.entries[i].in_vanishing_of_zero_set ||
                    again.in_crad != gc.entries[i].in_crad)
                    throw error("gc-check: certificate failed re-verification");
            }
            Json entries = Json::array();
            for (std::size_t i = 0; i < gc.entries.size(); ++i) {
                Json e;
                e["q"] = qnames[i];
                e["in_vanishing_of_zero_set"] = gc.entries[i].in_vanishing_of_zero_set;
                e["in_crad"] = gc.entries[i].in_crad;
                e["match"] = gc.entries[i].match();
                entries.push_back(e);
            }
            rep["ring"] = A.name();
            rep["entries"] = entries;
            rep["consistent"] = gc.consistent;
            headline.push_back(std::string("gc-check: ") +
                               (gc.consistent ? "consistent" : "mismatch found"));
            if (!gc.consistent) res.exit_code = 1;
        } else if (*sat_cmd) {
            rep["command"] = "sat";
            FiniteRing A = make_ring(ring_s);
            std::vector<Axiom> axioms;
            std::string tname;
            if (!theory_s.empty()) {
                Theory T = clidetail::theory_from_flag(theory_s);
                tname = T.name;
                axioms = T.expand(bound);
            } else if (!axiom_s.empty()) {
                axioms.push_back(parse_sentence(axiom_s));
                tname = "(inline)";
            } else {
                throw invalid_argument_error("sat: provide --theory or --axiom");
            }
            Json reports = Json::array();
            bool all = true;
            for (const Axiom& chi : axioms) {
                SatReport r = satisfies(A, chi, budget);
                all = all && r.holds;
                reports.push_back(sat_report_json(A, chi, r));
            }
            rep["ring"] = A.name();
            rep["theory"] = tname;
            rep["bound"] = bound;
            rep["reports"] = reports;
            rep["all_hold"] = all;
            headline.push_back(A.name() + (all ? " |= " : " |/= ") + tname);
            if (!all) res.exit_code = 1;
        } else if (*classify_cmd) {
            rep["command"] = "classify";
            std::vector<Axiom> axioms;
            if (!theory_s.empty())
                axioms = clidetail::theory_from_flag(theory_s).expand(bound);
            else if (!axiom_s.empty())
                axioms.push_back(parse_sentence(axiom_s));
            else
                throw invalid_argument_error("classify: provide --theory or --axiom");
            Json out = Json::array();
            for (const Axiom& chi : axioms) {
                AxiomClass c = classify(chi, gb_budget);
                Json e;
                e["axiom"] = chi.name;
                e["universal"] = to_string(c.universal);
                e["horn"] = c.horn;
                e["negative"] = c.negative;
                Json ms = Json::array();
                for (Verification v : c.member_surjectivity) ms.push_back(to_string(v));
                e["member_surjectivity"] = ms;
                out.push_back(e);
            }
            rep["axioms"] = out;
            headline.push_back("classified " + std::to_string(axioms.size()) + " axiom(s)");
        } else if (*resultant_cmd) {
            rep["command"] = "resultant";
            PrimMorphism n = clidetail::parse_checked_morphism(morphism_s);
            PrimMorphism m = clidetail::parse_checked_morphism(morphism2_s);
            std::vector<FiniteRing> C = clidetail::parse_family(family_s);
            bool member = resultant_member(n, m, C, budget);
            // disjointness is symmetric; re-verify with the roles swapped
            if (member != resultant_member(m, n, C, budget))
                throw error("resultant: symmetry re-verification failed");
            rep["n"] = morphism_json(n);
            rep["m"] = morphism_json(m);
            Json fam = Json::array();
            for (const auto& B : C) fam.push_back(B.name());
            rep["family"] = fam;
            rep["member"] = member;
            rep["note"] = "relative to the given family";
            headline.push_back(std::string("resultant membership: ") + (member ? "true" : "false"));
        } else if (*cover_cmd) {
            rep["command"] = "cover";
            PrimMorphism m = clidetail::parse_checked_morphism(morphism_s);
            std::vector<PrimMorphism> X;
            for (const std::string& part : clidetail::split_list(x_s, ';'))
                if (!part.empty()) X.push_back(clidetail::parse_checked_morphism(part));
            std::vector<FiniteRing> C = clidetail::parse_family(family_s);
            CoverReport cr = complement_cover(m, X, C, budget);
            Json entries = Json::array();
            for (std::size_t bi = 0; bi < C.size(); ++bi) {
                const CoverEntry& e = cr.entries[bi];
                // re-verify listed counterexample points
                PointSet em = exists_set(m, C[bi], budget);
                for (const auto& pt : e.uncovered)
                    if (em.contains(pt))
                        throw error("cover: counterexample failed re-verification");
                Json je;
                je["ring"] = e.ring;
                je["exact"] = e.exact;
                Json un = Json::array();
                for (const auto& pt : e.uncovered) un.push_back(tuple_json(C[bi], pt));
                Json ex = Json::array();
                for (const auto& pt : e.excess) ex.push_back(tuple_json(C[bi], pt));
                je["uncovered"] = un;
                je["excess"] = ex;
                entries.push_back(je);
            }
            rep["entries"] = entries;
            rep["all_exact"] = cr.all_exact;
            headline.push_back(std::string("cover: ") + (cr.all_exact ? "exact" : "not exact"));
            if (!cr.all_exact) res.exit_code = 1;
        } else if (*diamor_cmd) {
            rep["command"] = "diamor";
            Diagram D = clidetail::parse_diagram(diagram_s);
            std::vector<std::pair<PrimMorphism, int>> X;
            for (const std::string& part : clidetail::split_list(x_s, ';')) {
                if (part.empty()) continue;
                std::size_t at = part.rfind('@');
                if (at == std::string::npos)
                    throw parse_error("diamor: expected '<morphism> @ <object index>'");
                PrimMorphism m = clidetail::parse_checked_morphism(part.substr(0, at));
                int obj = std::stoi(detail::strip(part.substr(at + 1)));
                X.emplace_back(std::move(m), obj);
            }
            Axiom chi = change_of_basis(X, D);
            rep["apex"] = chi.pres.to_string();
            Json members = Json::array();
            for (const auto& m : chi.formula.morphisms) members.push_back(morphism_json(m));
            rep["members"] = members;
            bool all_agree = true;
            Json checks = Json::array();
            for (const FiniteRing& B : clidetail::parse_family(check_rings_s)) {
                DiamorCheck dc = diamor_check(D, X, B, budget);
                Json e;
                e["ring"] = B.name();
                e["axiom_holds"] = dc.axiom_holds;
                e["cocones_realise"] = dc.cocones_realise;
                e["agree"] = dc.agree();
                checks.push_back(e);
                all_agree = all_agree && dc.agree();
            }
            rep["checks"] = checks;
            rep["all_agree"] = all_agree;
            headline.push_back(std::string("diamor: ") +
                               (all_agree ? "both sides agree" : "DISAGREEMENT"));
            if (!all_agree) res.exit_code = 1;
        } else if (*rprod_cmd) {
            rep["command"] = "rprod";
            std::vector<FiniteRing> family = clidetail::parse_family(factors_s);
            std::vector<std::vector<int>> gens;
            for (const std::string& part : clidetail::split_list(filter_s, ';'))
                if (!part.empty()) gens.push_back(clidetail::parse_int_list(part));
            Filter f = make_filter(static_cast<int>(family.size()), gens);
            ReducedProduct rp = reduced_product(family, f);
            Json jf;
            jf["s0"] = f.s0_indices();
            jf["is_ultra"] = f.is_ultra();
            jf["member_count"] = f.members().size();
            rep["filter"] = jf;
            rep["carrier"] = rp.carrier.name();
            rep["carrier_cardinality"] = rp.carrier.cardinality();
            if (rp.collapse_iso) rep["collapse_verified"] = true;
            if (!axiom_s.empty()) {
                Axiom chi = parse_sentence(axiom_s);
                PreservationReport pr = preservation_check(chi, family, f, budget);
                Json jp;
                jp["horn"] = pr.horn;
                jp["factors_hold"] = pr.factor_holds;
                jp["carrier_holds"] = pr.carrier_holds;
                jp["preservation_expected"] = pr.preservation_expected;
                jp["violated"] = pr.violated;
                if (pr.carrier_witness)
                    jp["carrier_witness"] = named_tuple_json(rp.carrier, chi.pres, *pr.carrier_witness);
                rep["preservation"] = jp;
                if (pr.violated) throw error("rprod: preservation violated (library bug)");
                if (!pr.carrier_holds) res.exit_code = 1;
                headline.push_back(std::string("carrier ") +
                                   (pr.carrier_holds ? "satisfies" : "fails") + " the axiom");
            } else {
                headline.push_back("carrier: " + rp.carrier.name());
            }
        } else if (*purity_cmd) {
            rep["command"] = "purity";
            FiniteRing A = make_ring(ring_s);
            FiniteRing B = make_ring(family_s);
            std::vector<RingHom> fs = ring_homs(A, B, budget);
            if (hom_index < 0 || hom_index >= static_cast<int>(fs.size()))
                throw invalid_argument_error("purity: hom index out of range (found " +
                                             std::to_string(fs.size()) + " homs)");
            PrimMorphism m = clidetail::parse_checked_morphism(morphism_s);
            std::vector<int> a = clidetail::parse_int_list(param_s);
            PurityReport pr = purity_check(fs[hom_index], m, a, budget);
            if (pr.zero_phrasing && !pr.phrasings_agree)
                throw error("purity: phrasings disagree (library bug)");
            Json jp;
            jp["realized_below"] = pr.realized_below;
            jp["realized_above"] = pr.realized_above;
            jp["pure_violation"] = pr.pure_violation;
            jp["zero_phrasing"] = pr.zero_phrasing;
            if (pr.zero_phrasing) {
                jp["z_below_nonempty"] = pr.z_below_nonempty;
                jp["z_above_nonempty"] = pr.z_above_nonempty;
                jp["ec_violation"] = pr.ec_violation;
                jp["phrasings_agree"] = pr.phrasings_agree;
            }
            rep["hom"] = {{"dom", A.name()}, {"cod", B.name()}, {"index", hom_index}};
            rep["m"] = morphism_json(m);
            rep["param"] = tuple_json(A, a);
            rep["report"] = jp;
            headline.push_back(std::string("purity: ") +
                               (pr.pure_violation ? "pure-violation" : "no violation"));
            if (pr.pure_violation) res.exit_code = 1;
        } else if (*member_cmd) {
            rep["command"] = "member";
            FiniteRing A = make_ring(ring_s);
            std::vector<FiniteRing> C = clidetail::parse_family(family_s);
            MembershipKind kind = which_s == "embeds"    ? MembershipKind::Embeds
                                  : which_s == "special" ? MembershipKind::Special
                                                         : MembershipKind::Continues;
            MembershipResult mr = category_membership(A, C, kind, max_factors, budget);
            rep["ring"] = A.name();
            rep["which"] = which_s;
            rep["verdict"] = mr.verdict == MembershipResult::Verdict::Found ? "found"
                             : mr.verdict == MembershipResult::Verdict::NotFound
                                 ? "not-found"
                                 : "not-found-at-bound";
            rep["detail"] = mr.detail;
            Json wit = Json::array();
            for (const auto& [ci, h] : mr.witness) {
                Json e;
                e["target"] = C[ci].name();
                e["injective"] = h.injective;
                e["surjective"] = h.surjective;
                wit.push_back(e);
            }
            rep["witness"] = wit;
            headline.push_back("member(" + which_s + "): " + rep["verdict"].get<std::string>());
        }
    } catch (const CLI::ParseError& e) {
        res.exit_code = 2;
        rep["error"] = {{"type", "usage"}, {"message", e.what()}};
        res.text = std::string("usage error: ") + e.what();
        return res;
    } catch (const parse_error& e) {
        res.exit_code = 2;
        rep["error"] = {{"type", "parse"}, {"message", e.what()}};
        res.text = std::string("parse error: ") + e.what();
        return res;
    } catch (const budget_error& e) {
        res.exit_code = 2;
        rep["error"] = {{"type", "budget"}, {"message", e.what()}};
        res.text = std::string("budget error: ") + e.what();
        return res;
    } catch (const invalid_argument_error& e) {
        res.exit_code = 2;
        rep["error"] = {{"type", "invalid-argument"}, {"message", e.what()}};
        res.text = std::string("invalid argument: ") + e.what();
        return res;
    } catch (const error& e) {
        res.exit_code = 2;
        rep["error"] = {{"type", "internal"}, {"message", e.what()}};
        res.text = std::string("*** BUG: re-verification failed *** ") + e.what();
        return res;
    } catch (const std::exception& e) {
        // malformed numerics and similar standard-library failures
        res.exit_code = 2;
        rep["error"] = {{"type", "usage"}, {"message", e.what()}};
        res.text = std::string("usage error: ") + e.what();
        return res;
    }

    rep["exit_code"] = res.exit_code;
    std::string text;
    for (const std::string& h : headline) text += h + "\n";
    res.text = text;
    (void)json_out;
    (void)text_out;
    return res;
}

}  // namespace ringlab

#endif
