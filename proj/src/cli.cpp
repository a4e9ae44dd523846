#include "ritt/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>

#include "ritt/catalog.hpp"
#include "ritt/characters.hpp"
#include "ritt/decompose.hpp"
#include "ritt/dgraph.hpp"
#include "ritt/errors.hpp"
#include "ritt/expr.hpp"
#include "ritt/extension.hpp"

namespace ritt {

namespace {

using Json = nlohmann::ordered_json;

// Output of one command before rendering.
struct Outcome {
    explicit Outcome(std::string cmd = "") : command(std::move(cmd)) {}

    std::string command;
    Json inputs = Json::object();
    Json results = Json::object();
    std::vector<Check> checks;
    std::string verdict = "ok";
    std::vector<std::string> text;  // human-readable lines
    int code = kExitOk;
};

Json checks_json(const std::vector<Check>& checks) {
    Json arr = Json::array();
    for (const auto& c : checks) {
        Json j{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
        if (c.informational) j["informational"] = true;
        arr.push_back(std::move(j));
    }
    return arr;
}

void render(const Outcome& o, bool json, std::ostream& out) {
    if (json) {
        Json j{{"command", o.command},
               {"inputs", o.inputs},
               {"results", o.results},
               {"checks", checks_json(o.checks)},
               {"verdict", o.verdict}};
        out << j.dump(2) << "\n";
        return;
    }
    for (const auto& line : o.text) out << line << "\n";
    for (const auto& c : o.checks)
        out << (c.informational ? "INFO " : (c.pass ? "PASS " : "FAIL ")) << c.name << ": " << c.detail << "\n";
    if (o.verdict != "ok") out << "verdict: " << o.verdict << "\n";
}

Poly parse_poly(const std::string& s) { return lower_poly(*parse_expr(s)); }
RatFunc parse_ratfunc(const std::string& s) { return lower_ratfunc(*parse_expr(s)); }

Json chain_json(const Decomposition& d) {
    Json arr = Json::array();
    for (const auto& f : d.factors) arr.push_back(to_string(f));
    return arr;
}

Character character_named(const std::string& kind, unsigned p) {
    if (kind == "deg") return Character::degree();
    if (kind == "length") return Character::length();
    if (kind == "power-class") return Character::power_class(p);
    if (kind == "degree-four") return Character::degree_four();
    if (kind == "affine-leading") return Character::affine_leading();
    throw PreconditionError("unknown character kind '" + kind + "'");
}

Outcome cmd_decompose(const std::string& expr) {
    Outcome o{"decompose"};
    o.inputs["expr"] = expr;
    const Poly f = parse_poly(expr);
    const auto all = complete_decompositions(f);
    o.results["polynomial"] = to_string(f);
    o.results["decompositions"] = Json::array();
    bool same = true;
    for (const auto& d : all) {
        o.results["decompositions"].push_back(chain_json(d));
        o.text.push_back(to_string(d));
        same = same && d.length() == all.front().length();
    }
    o.results["length"] = all.front().length();
    o.text.push_back("length " + std::to_string(all.front().length()));
    o.checks.push_back({"all prime decompositions share one length", same,
                        std::to_string(all.size()) + " decomposition(s)"});
    if (!same) {
        o.verdict = "failed";
        o.code = kExitVerificationFailed;
    }
    return o;
}

Outcome cmd_compose(const std::vector<std::string>& exprs) {
    Outcome o{"compose"};
    o.inputs["exprs"] = exprs;
    std::vector<RatFunc> parts;
    for (const auto& e : exprs) parts.push_back(parse_ratfunc(e));
    RatFunc value = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) value = compose(value, parts[i]);
    o.results["value"] = to_string(value);
    o.results["degree"] = value.degree();
    o.text.push_back(to_string(value));
    return o;
}

Outcome cmd_char(const std::string& kind, unsigned p, const std::string& expr) {
    Outcome o{"char"};
    o.inputs = {{"kind", kind}, {"p", p}, {"expr", expr}};
    const Character c = character_named(kind, p);
    const CharValue v = char_eval(c, parse_poly(expr));
    o.results = {{"character", to_string(c)}, {"value", to_string(v)}, {"q", to_string(v.q)}, {"m", v.m}};
    o.text.push_back(to_string(v));
    return o;
}

Outcome cmd_verify(const std::string& name) {
    Outcome o{"verify"};
    o.inputs["fixture"] = name;
    const FixtureReport rep = verify_fixture(name);
    o.checks = rep.checks;
    if (rep.value) o.results["value"] = to_string(*rep.value);
    o.results["verified"] = rep.verified();
    o.verdict = rep.verified() ? "verified" : "failed";
    if (!rep.verified()) o.code = kExitVerificationFailed;
    o.text.push_back("fixture " + rep.name);
    return o;
}

Outcome cmd_extend(const std::string& kind, const std::string& charname, const std::vector<std::string>& witnesses,
                   const std::string& expr, const std::string& fixture_id) {
    Outcome o{"extend"};
    o.inputs = {{"kind", kind}};
    if (kind == "obstruction") {
        if (fixture_id.empty()) throw PreconditionError("extend --kind obstruction needs --fixture");
        o.inputs["fixture"] = fixture_id;
        const ObstructionReport rep = obstruction_report(fixture_id);
        o.checks = rep.checks;
        o.results = {{"id", rep.id},
                     {"identity", rep.identity},
                     {"identity_verified", rep.identity_verified},
                     {"left", to_string(rep.left)},
                     {"right", to_string(rep.right)},
                     {"steps", rep.steps}};
        o.verdict = to_string(rep.verdict);
        o.text.push_back(rep.id + ": " + to_string(rep.left) + " vs " + to_string(rep.right));
        for (const auto& s : rep.steps) o.text.push_back("  " + s);
        if (rep.verdict != Verdict::Contradiction) o.code = kExitVerificationFailed;
        return o;
    }
    if (expr.empty()) throw PreconditionError("extend needs an expression");
    o.inputs["character"] = charname;
    o.inputs["expr"] = expr;
    const PolyCharacter phi = as_poly_character(character_named(charname, 3));
    const IdealPredicate ideal = decomposable_ideal();
    const Poly r = parse_poly(expr);
    if (kind == "square") {
        const CharValue v = extend_by_square(phi, ideal, r);
        o.results["value"] = to_string(v);
        o.text.push_back(to_string(v));
        return o;
    }
    if (kind != "ideal") throw PreconditionError("unknown extension kind '" + kind + "'");
    o.inputs["witnesses"] = witnesses;
    std::vector<Poly> ws;
    for (const auto& w : witnesses) ws.push_back(parse_poly(w));
    const ExtensionResult res = extend_over_ideal(phi, ideal, r, ws);
    o.results["value"] = to_string(res.value);
    for (const auto& w : res.audit)
        o.checks.push_back({"witness " + to_string(w.witness), w.left == w.right && w.right == res.value,
                            "phi(R o Q)/phi(Q) = " + to_string(w.right) + ", phi(Q o R)/phi(Q) = " + to_string(w.left)});
    o.text.push_back(to_string(res.value));
    return o;
}

Outcome cmd_graph(const std::string& expr, std::size_t budget, const std::string& dot_path) {
    Outcome o{"graph"};
    o.inputs = {{"expr", expr}, {"budget", budget}};
    const DecompGraph g = build_gamma(parse_poly(expr), budget);
    Json verts = Json::array(), edges = Json::array(), removed = Json::array();
    for (const auto& v : g.vertices) verts.push_back(to_string(v));
    for (const auto& e : g.edges)
        edges.push_back({{"from", e.from}, {"to", e.to}, {"u", to_string(e.u)}, {"v", to_string(e.v)},
                         {"conjugator", to_string(e.conjugator)}});
    for (const auto& l : g.loop_removals) removed.push_back({{"edge", l.edge}, {"u", to_string(l.u)}, {"v", to_string(l.v)}});
    o.results = {{"vertices", verts}, {"edges", edges}, {"loop_removals", removed}, {"root", g.root}, {"closed", g.closed}};
    o.text.push_back(std::to_string(g.vertices.size()) + " vertices, " + std::to_string(g.edges.size()) + " edges, " +
                     std::to_string(g.loop_removals.size()) + " loops removed");
    for (std::size_t i = 0; i < g.vertices.size(); ++i) o.text.push_back("  v" + std::to_string(i) + " " + verts[i].get<std::string>());
    if (g.closed) {
        const GraphPredicates p = graph_predicates(g);
        o.results["complete_without_loops"] = p.is_complete_without_loops;
        o.results["disconnected_without_root"] = p.disconnected_without_root;
        o.text.push_back(std::string("complete without loops: ") + (p.is_complete_without_loops ? "yes" : "no"));
        o.text.push_back(std::string("disconnected without root: ") + (p.disconnected_without_root ? "yes" : "no"));
    } else {
        o.verdict = "truncated";
        o.code = kExitVerificationFailed;
    }
    if (!dot_path.empty()) {
        std::ofstream f(dot_path, std::ios::binary);
        if (!f) throw PreconditionError("cannot write " + dot_path);
        f << export_dot(g);
        o.results["dot"] = dot_path;
    }
    return o;
}

Outcome cmd_feasible(unsigned i, unsigned j, unsigned kmax) {
    Outcome o{"feasible"};
    o.inputs = {{"i", i}, {"j", j}, {"kmax", kmax}};
    const FeasibilityReport rep = cyclic_feasibility(i, j, kmax);
    Json sols = Json::array();
    for (const auto& s : rep.solutions) {
        sols.push_back({{"p", s.p}, {"q", s.q}, {"m", s.m}, {"n", s.n}, {"k", s.k}});
        o.text.push_back("(p, q, m, n, k) = (" + std::to_string(s.p) + ", " + std::to_string(s.q) + ", " +
                         std::to_string(s.m) + ", " + std::to_string(s.n) + ", " + std::to_string(s.k) + ")");
    }
    o.results = {{"solutions", sols}, {"note", rep.note}};
    o.checks.push_back({"(q - n)(k - 1) = j - i on every solution", rep.relation_holds, rep.note});
    if (rep.solutions.empty()) o.text.push_back("no solutions");
    return o;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact composition algebra of polynomials and rational maps", "ritt"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output")->configurable(false);

    auto add_json = [&json](CLI::App* sub) { sub->add_flag("--json", json, "machine-readable output"); };

    std::string expr, kind, charname = "deg", fixture_name, dot_path;
    std::vector<std::string> exprs, witnesses;
    unsigned p = 3, i = 0, j = 0, kmax = 5;
    std::size_t budget = 10000;

    auto* dec = app.add_subcommand("decompose", "prime decompositions of a polynomial");
    dec->add_option("expr", expr, "polynomial")->required();
    add_json(dec);

    auto* comp = app.add_subcommand("compose", "compose maps, outermost first");
    comp->add_option("exprs", exprs, "maps")->required();
    add_json(comp);

    auto* chr = app.add_subcommand("char", "evaluate a character");
    chr->add_option("--kind", kind, "deg | length | power-class | degree-four | affine-leading")
        ->required()
        ->check(CLI::IsMember({"deg", "length", "power-class", "degree-four", "affine-leading"}));
    chr->add_option("--p", p, "power class parameter");
    chr->add_option("expr", expr, "polynomial")->required();
    add_json(chr);

    auto* ver = app.add_subcommand("verify", "verify a catalog identity");
    ver->add_option("--fixture", fixture_name, "fixture name")->required();
    add_json(ver);

    auto* ext = app.add_subcommand("extend", "extend a character or report an obstruction");
    ext->add_option("--kind", kind, "ideal | square | obstruction")
        ->required()
        ->check(CLI::IsMember({"ideal", "square", "obstruction"}));
    ext->add_option("--char", charname, "deg | length")->check(CLI::IsMember({"deg", "length"}));
    ext->add_option("--witness", witnesses, "witness in the ideal (repeatable)")->allow_extra_args(false);
    ext->add_option("--fixture", fixture_name, "obstruction id");
    ext->add_option("expr", expr, "element outside the ideal");
    add_json(ext);

    auto* gr = app.add_subcommand("graph", "decomposition graph of a polynomial");
    gr->add_option("expr", expr, "polynomial")->required();
    gr->add_option("--budget", budget, "vertex budget");
    gr->add_option("--dot", dot_path, "write DOT to this path");
    add_json(gr);

    auto* fea = app.add_subcommand("feasible", "cyclic character feasibility");
    fea->add_option("i", i)->required();
    fea->add_option("j", j)->required();
    fea->add_option("--kmax", kmax, "largest exponent k");
    add_json(fea);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        Outcome o;
        if (*dec)
            o = cmd_decompose(expr);
        else if (*comp)
            o = cmd_compose(exprs);
        else if (*chr)
            o = cmd_char(kind, p, expr);
        else if (*ver)
            o = cmd_verify(fixture_name);
        else if (*ext)
            o = cmd_extend(kind, charname, witnesses, expr, fixture_name);
        else if (*gr)
            o = cmd_graph(expr, budget, dot_path);
        else
            o = cmd_feasible(i, j, kmax);
        render(o, json, out);
        return o.code;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
}

}  // namespace ritt
