#include "toricqh/commands.hpp"

#include "toricqh/expr.hpp"
#include "toricqh/io.hpp"
#include "toricqh/qh.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <set>
#include <ostream>
#include <sstream>

namespace toricqh {

using nlohmann::json;

namespace {

json int_array(const IntVec& v)
{
    json a = json::array();
    for (const auto& x : v)
        a.push_back(x.get_si());
    return a;
}

json index_array(const IndexSet& s)
{
    json a = json::array();
    for (int i : s)
        a.push_back(i + 1);
    return a;
}

json polytope_summary(const Polytope& p)
{
    json facets = json::array();
    for (const Facet& f : p.facets())
        facets.push_back({{"normal", int_array(f.normal)}, {"offset", offset_symbolic(f.offset)}});
    return {{"name", p.name()}, {"dim", p.dim()}, {"convention", "inward"}, {"facets", facets}};
}

json error_json(const Error& e)
{
    std::string message = e.what();
    const std::string prefix = std::string(error_name(e.code())) + ": ";
    if (message.rfind(prefix, 0) == 0)
        message = message.substr(prefix.size());
    return {{"code", error_name(e.code())}, {"message", message}};
}

IntVec parse_int_list(const std::string& text, const char* what)
{
    IntVec out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
            ++used;
        if (used == 0 || used != item.size())
            throw Error(ErrorCode::ParseError, std::string(what) + ": '" + item + "' is not an integer");
        out.emplace_back(v);
    }
    if (out.empty())
        throw Error(ErrorCode::ParseError, std::string(what) + ": empty list");
    return out;
}

Space parse_space(const std::string& s)
{
    return s == "M" ? Space::M : Space::L;
}

Flavor parse_flavor(const std::string& s)
{
    return s == "classical" ? Flavor::Classical : Flavor::Quantum;
}

json vertices_json(const std::vector<Vertex>& vertices)
{
    json out = json::array();
    for (const Vertex& v : vertices) {
        json coords = json::array();
        for (const auto& c : v.coords)
            coords.push_back(offset_symbolic(c));
        json edges = json::array();
        for (const auto& w : v.edge_dirs)
            edges.push_back(int_array(w));
        out.push_back({{"coords", coords}, {"tight", index_array(v.tight)}, {"edges", edges}});
    }
    return out;
}

json collections_json(const std::vector<PrimitiveCollection>& cs)
{
    json out = json::array();
    for (const auto& c : cs)
        out.push_back({{"indices", index_array(c.indices)}, {"batyrev", int_array(c.batyrev)}, {"degree", c.degree}});
    return out;
}

json presentation_json(const Ring& ring)
{
    const Presentation& pr = ring.presentation();
    const QuotientRing& q = ring.quotient();
    const std::string unit = pr.unit_name();
    json linear = json::array(), sr = json::array(), reduced = json::array(), basis = json::array();
    for (const F2Poly& f : pr.linear_relations)
        linear.push_back(format_poly(f, pr.generators, unit));
    for (const F2Poly& f : pr.sr_relations)
        sr.push_back(format_poly(f, pr.generators, unit));
    std::set<int> shown;
    for (int d : ring.display_index())
        if (d >= 0)
            shown.insert(d);
    json survivors = json::array();
    for (int d : shown)
        survivors.push_back(pr.generators[static_cast<std::size_t>(d)]);
    for (const F2Poly& f : q.homogeneous_basis().generators) {
        const bool linear = std::all_of(f.terms().begin(), f.terms().end(),
                                        [](const Monomial& m) { return m.x_degree() == 1 && m.t == 0; });
        if (!linear)
            reduced.push_back(ring.format_reduced(f));
    }
    for (const Monomial& m : q.standard_basis())
        basis.push_back(ring.format(q.element_of(m)));
    return {{"space", to_string(pr.space)},
            {"flavor", to_string(pr.flavor)},
            {"generators", pr.generators},
            {"generator_cods", pr.generator_cods},
            {"grading_unit", unit},
            {"unit_cod", pr.grading_unit},
            {"linear_relations", linear},
            {"sr_relations", sr},
            {"survivors", survivors},
            {"monomial_order", q.homogeneous_basis().order},
            {"reduced_relations", reduced},
            {"standard_basis", basis},
            {"rank", q.dim()},
            {"hilbert_function", q.hilbert_function()}};
}

json element_json(const Ring& ring, const QHElement& e)
{
    json j = {{"text", ring.format(e)}};
    if (auto d = ring.quotient().homogeneous_degree(e))
        j["degree"] = *d;
    return j;
}

struct Outcome {
    Outcome() = default;
    Outcome(json p) : payload(std::move(p)) {}

    json payload = json::object();
    bool passed = true;
    std::optional<json> error;
};

Outcome cmd_validate(const Polytope& p)
{
    DelzantReport r = validate_delzant(p);
    Outcome o;
    json issues = json::array();
    for (const auto& i : r.issues)
        issues.push_back({{"code", error_name(i.code)}, {"message", i.message}});
    o.payload = {{"delzant", r.passed()}, {"vertex_count", r.vertices.size()}, {"issues", issues}};
    if (!r.passed()) {
        o.passed = false;
        o.error = issues.front();
    }
    return o;
}

Outcome cmd_vertices(const Polytope& p)
{
    return {{{"vertices", vertices_json(delzant_vertices(p))}}};
}

Outcome cmd_primitives(const Polytope& p)
{
    const auto vertices = delzant_vertices(p);
    const auto cs = primitive_data(p, vertices);
    int min_degree = 0;
    for (const auto& c : cs)
        min_degree = min_degree == 0 ? c.degree : std::min(min_degree, c.degree);
    return {{{"primitive_collections", collections_json(cs)}, {"min_quantum_degree", min_degree}}};
}

Outcome cmd_presentation(const Polytope& p, Space space, Flavor flavor)
{
    Ring ring(p, space, flavor);
    Outcome o;
    o.payload = {{"presentation", presentation_json(ring)}};
    if (flavor == Flavor::Quantum)
        o.payload["primitive_collections"] = collections_json(ring.collections());
    return o;
}

Outcome cmd_seidel(const Polytope& p, std::optional<int> facet, const std::string& combo)
{
    Ring ring(p, Space::L, Flavor::Quantum);
    SeidelElement s;
    if (facet) {
        if (*facet < 1 || *facet > p.facet_count())
            throw Error(ErrorCode::ParseError, "facet " + std::to_string(*facet) + " out of range 1.." +
                                                   std::to_string(p.facet_count()));
        s = seidel_facet(ring, static_cast<std::size_t>(*facet - 1));
    } else {
        IntVec c = parse_int_list(combo, "--combo");
        if (static_cast<int>(c.size()) != p.facet_count())
            throw Error(ErrorCode::ParseError, "--combo needs " + std::to_string(p.facet_count()) + " entries");
        s = seidel_composite(ring, c);
    }
    return {{{"combination", int_array(s.combination)}, {"element", element_json(ring, s.element)}}};
}

Outcome cmd_mul(const Polytope& p, const std::string& a, const std::string& b)
{
    Ring ring(p, Space::L, Flavor::Quantum);
    const ElementExpr ea = parse_expr(a, ring.nvars());
    const ElementExpr eb = parse_expr(b, ring.nvars());
    const QHElement x = evaluate(ring, ea), y = evaluate(ring, eb);
    return {{{"left", element_json(ring, x)},
             {"right", element_json(ring, y)},
             {"result", element_json(ring, multiply(ring, x, y))}}};
}

Outcome cmd_invert(const Polytope& p, const std::string& a)
{
    Ring ring(p, Space::L, Flavor::Quantum);
    const QHElement x = evaluate(ring, parse_expr(a, ring.nvars()));
    const QHElement inv = invert(ring, x);
    const bool verified = multiply(ring, x, inv) == ring.fundamental_class();
    Outcome o{{{"element", element_json(ring, x)}, {"inverse", element_json(ring, inv)}, {"verified", verified}}};
    o.passed = verified;
    return o;
}

Outcome cmd_betti(const Polytope& p, const std::string& xi_text)
{
    if (xi_text.empty()) {
        BettiCrosscheck c = betti_crosscheck(p);
        return {{{"xi", int_array(c.xi)},
                 {"betti", c.betti},
                 {"hilbert_l", c.hilbert_l},
                 {"hilbert_m", c.hilbert_m},
                 {"crosscheck", true}}};
    }
    const auto vertices = delzant_vertices(p);
    const IntVec xi = parse_int_list(xi_text, "--xi");
    return {{{"xi", int_array(xi)}, {"betti", betti_numbers(p, vertices, xi)}}};
}

Outcome cmd_psi(const Polytope& p)
{
    Outcome o;
    json flavors = json::object();
    for (Flavor f : {Flavor::Classical, Flavor::Quantum}) {
        Ring l(p, Space::L, f), m(p, Space::M, f);
        const bool ok = verify_psi(l.presentation(), m.presentation());
        flavors[std::string(to_string(f))] = ok;
        o.passed = o.passed && ok;
    }
    o.payload = {{"psi", flavors}, {"verdict", o.passed ? "isomorphism" : "mismatch"}};
    return o;
}

json certificate_json(const Ring& ring, const UniruledCertificate& c)
{
    json coef = json::array();
    for (int e : c.fundamental_coefficient.exponents())
        coef.push_back(e);
    json j = {{"witness", {{"combination", int_array(c.witness.combination)},
                           {"element", element_json(ring, c.witness.element)}}},
              {"fundamental_coefficient_exponents", coef},
              {"min_quantum_degree", c.min_quantum_degree},
              {"verdict", c.uniruled ? "uniruled" : "inconclusive"},
              {"reason", c.reason}};
    if (c.inverse)
        j["inverse"] = element_json(ring, *c.inverse);
    return j;
}

Outcome cmd_uniruled(const Polytope& p)
{
    Ring ring(p, Space::L, Flavor::Quantum);
    UniruledCertificate c = uniruled_certificate(ring);
    Outcome o{{{"certificate", certificate_json(ring, c)}}};
    o.passed = c.uniruled;
    return o;
}

Outcome cmd_selfcheck(const Polytope& p)
{
    struct Check {
        const char* name;
        bool needs_fano;
        std::function<std::string()> run;  // detail on pass; throws on failure
    };

    std::optional<Ring> ring;
    const std::vector<Check> checks = {
        {"delzant", false,
         [&] {
             DelzantReport r = validate_delzant(p);
             r.raise();
             return std::to_string(r.vertices.size()) + " vertices";
         }},
        {"fano", false,
         [&] {
             ring.emplace(p, Space::L, Flavor::Quantum);
             int min_degree = 0;
             for (const auto& c : ring->collections())
                 min_degree = min_degree == 0 ? c.degree : std::min(min_degree, c.degree);
             return std::to_string(ring->collections().size()) + " primitive collections, min degree " +
                    std::to_string(min_degree);
         }},
        {"betti", false,
         [&] {
             BettiCrosscheck c = betti_crosscheck(p);
             return "betti " + json(c.betti).dump();
         }},
        {"seidel_relations", true,
         [&] {
             for (const auto& pc : ring->collections())
                 if (!verify_seidel_relation(*ring, pc))
                     throw Error(ErrorCode::CrosscheckFailed,
                                 "Seidel relation fails for " + index_array(pc.indices).dump());
             return std::to_string(ring->collections().size()) + " relations hold";
         }},
        {"psi", true,
         [&] {
             for (Flavor f : {Flavor::Classical, Flavor::Quantum}) {
                 Ring l(p, Space::L, f), m(p, Space::M, f);
                 if (!verify_psi(l.presentation(), m.presentation()))
                     throw Error(ErrorCode::CrosscheckFailed, std::string(to_string(f)) + " presentations differ");
             }
             return std::string("classical and quantum");
         }},
        {"uniruled", true,
         [&] {
             UniruledCertificate c = uniruled_certificate(*ring);
             if (!c.uniruled)
                 throw Error(ErrorCode::CrosscheckFailed, c.reason);
             return "witness " + ring->format(c.witness.element);
         }},
    };

    Outcome o;
    json results = json::array();
    bool delzant_ok = true;
    for (const Check& c : checks) {
        json r = {{"name", c.name}};
        if (!delzant_ok || (c.needs_fano && !ring)) {
            r["status"] = "skipped";
            results.push_back(r);
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        try {
            r["detail"] = c.run();
            r["status"] = "pass";
        } catch (const Error& e) {
            r["status"] = "fail";
            r["error"] = error_json(e);
            o.passed = false;
            if (std::string(c.name) == "delzant")
                delzant_ok = false;
        }
        r["elapsed_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        results.push_back(r);
    }
    o.payload = {{"checks", results}, {"all_passed", o.passed}};
    return o;
}

void render(const json& j, const std::string& indent, std::string& out)
{
    for (auto it = j.begin(); it != j.end(); ++it) {
        const json& v = it.value();
        const std::string key = j.is_object() ? it.key() : "-";
        const bool scalar_array =
            v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return !e.is_structured(); });
        if (v.is_object() || (v.is_array() && !scalar_array && !v.empty())) {
            out += indent + key + ":\n";
            render(v, indent + "  ", out);
        } else if (v.is_array()) {
            std::string items;
            for (const auto& e : v)
                items += (items.empty() ? "" : ", ") + (e.is_string() ? e.get<std::string>() : e.dump());
            out += indent + key + ": [" + items + "]\n";
        } else {
            out += indent + key + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
        }
    }
}

bool sub_is(const CLI::App& app, const char* name)
{
    return app.get_subcommands().front()->get_name() == name;
}

}  // namespace

std::string render_text(const json& report)
{
    std::string out;
    render(report, "", out);
    return out;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Quantum homology of real Lagrangians in Fano toric manifolds", "toric-qh"};
    app.require_subcommand(1);

    std::string format = "text";
    if (const char* env = std::getenv("TORIC_QH_FORMAT"))
        format = env;
    app.add_option("--format", format, "Output format (default from TORIC_QH_FORMAT)")
        ->check(CLI::IsMember({"text", "json"}));

    std::string source, space = "L", flavor = "quantum", combo, xi, expr_a, expr_b;
    std::optional<int> facet;

    auto with_polytope = [&](CLI::App* sub) {
        sub->add_option("polytope", source, "Built-in name or polytope file")->required();
        return sub;
    };

    with_polytope(app.add_subcommand("validate", "Delzant checks"));
    with_polytope(app.add_subcommand("vertices", "Vertices, tight facets and edge directions"));
    with_polytope(app.add_subcommand("primitives", "Primitive collections and Batyrev vectors"));
    auto* pres = app.add_subcommand("presentation", "Ring presentation");
    pres->add_option("--space", space)->check(CLI::IsMember({"L", "M"}));
    pres->add_option("--flavor", flavor)->check(CLI::IsMember({"classical", "quantum"}));
    with_polytope(pres);
    auto* seidel = app.add_subcommand("seidel", "Lagrangian Seidel element");
    auto* facet_opt = seidel->add_option("--facet", facet, "Facet index (1-based)");
    auto* combo_opt = seidel->add_option("--combo", combo, "Exponents c1,...,cd");
    facet_opt->excludes(combo_opt);
    with_polytope(seidel);
    auto* mul = app.add_subcommand("mul", "Quantum product of two elements");
    mul->add_option("a", expr_a)->required();
    mul->add_option("b", expr_b)->required();
    with_polytope(mul);
    auto* inv = app.add_subcommand("invert", "Inverse of an element");
    inv->add_option("a", expr_a)->required();
    with_polytope(inv);
    auto* betti = app.add_subcommand("betti", "Morse-index Betti numbers");
    betti->add_option("--xi", xi, "Generic covector x1,...,xn");
    with_polytope(betti);
    with_polytope(app.add_subcommand("psi-check", "Square-root isomorphism check"));
    with_polytope(app.add_subcommand("uniruled", "Uniruledness certificate"));
    with_polytope(app.add_subcommand("selfcheck", "Run every invariant check"));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (sub_is(app, "seidel") && !facet && combo.empty()) {
        err << "error: seidel needs --facet or --combo\n";
        return 2;
    }
    if (format != "text" && format != "json") {
        err << "error: unknown format '" << format << "'\n";
        return 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    json report = {{"schema_version", kReportSchemaVersion}, {"command", command}};
    int code = 0;
    try {
        const Polytope p = load_polytope(source);
        report["polytope"] = polytope_summary(p);
        Outcome o;
        if (command == "validate")
            o = cmd_validate(p);
        else if (command == "vertices")
            o = cmd_vertices(p);
        else if (command == "primitives")
            o = cmd_primitives(p);
        else if (command == "presentation")
            o = cmd_presentation(p, parse_space(space), parse_flavor(flavor));
        else if (command == "seidel")
            o = cmd_seidel(p, facet, combo);
        else if (command == "mul")
            o = cmd_mul(p, expr_a, expr_b);
        else if (command == "invert")
            o = cmd_invert(p, expr_a);
        else if (command == "betti")
            o = cmd_betti(p, xi);
        else if (command == "psi-check")
            o = cmd_psi(p);
        else if (command == "uniruled")
            o = cmd_uniruled(p);
        else
            o = cmd_selfcheck(p);
        report["status"] = o.passed ? "ok" : "fail";
        report.update(o.payload);
        if (o.error)
            report["error"] = *o.error;
        code = o.passed ? 0 : 1;
    } catch (const Error& e) {
        code = is_input_error(e.code()) ? 2 : 1;
        report["status"] = code == 2 ? "input_error" : "rejected";
        report["error"] = error_json(e);
    }

    if (format == "json")
        out << report.dump(2) << "\n";
    else
        out << render_text(report);
    if (code != 0 && report.contains("error"))
        err << "error: " << report["error"]["code"].get<std::string>() << ": "
            << report["error"]["message"].get<std::string>() << "\n";
    return code;
}

}  // namespace toricqh
