#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "toricqh/commands.hpp"
#include "toricqh/expr.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

using namespace toricqh;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code = 0)
{
    args.insert(args.begin(), {"--format", "json"});
    Run r = run(args);
    CHECK(r.code == expected_code);
    return json::parse(r.out);
}

ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::ParseError;
}

// The same polytope written with outward normals.
json outward_json(const Polytope& p)
{
    json j = polytope_to_json(p);
    j["convention"] = "outward";
    for (auto& f : j["facets"]) {
        for (auto& v : f["normal"])
            v = -v.get<long>();
        f["offset"][0] = -f["offset"][0].get<long>();
    }
    return j;
}

const std::vector<std::string> corpus = {
    "X1", "X2", "X5", "L", "1", "q", "q^2", "q^-2", "q^-10", "q^0", "X1^2", "X1^0", "X1*X2", "X1*X4*q^-2",
    "X1 + X2", "X1 + L", "X1*X4 + L*q^-2", "X5*q", "X1^3 + X4*q^-2", "X4^2 + X1*X4 + q^-2", "L*q^-2",
    "1*q^3", "X1^2*X4*q^3", "X1^2*X4*q^3 + X4*q", "X3*X3*X3", "q*q*q^-1", "X1*q^-1 + X2*q^-1",
    "X1 + X2 + X3 + X4 + X5", "X2^7", "q^-1*X1", "L + L", "1 + 1 + 1", "X1^12*q^-12", "X1*X2*X3*X4*X5",
    "X4*X4*q^2 + L", "X1^2*q^2 + X1*q + L", "q^-3*X2^2*X3", "X5^2*q^-1", "L*X1", "X3^4 + X2^4", "q^-1",
    "X1^1", "q^1", "X2*q^-5 + X3*q^5", "X4^3*q^-3 + X1^3*q^-3", "X1 + q", "L*q + L*q^-1", "X2*X2", "q^2*q^-2",
    "X1^2 + X1*X4 + X4^2", "X4*q^4", "X3*q^-2*X2",
};

}  // namespace

TEST_CASE("expression parser round trip")
{
    CHECK(corpus.size() >= 50);
    for (const auto& text : corpus) {
        CAPTURE(text);
        const ElementExpr e = parse_expr(text, 5);
        CHECK(parse_expr(print_expr(e), 5) == e);
        CHECK(print_expr(parse_expr(print_expr(e), 5)) == print_expr(e));
    }
    CHECK(print_expr(parse_expr("q^1*X1^1", 5)) == "q*X1");
    CHECK(print_expr(parse_expr("  X1 *  q^ -2 ", 5)) == "X1*q^-2");
}

TEST_CASE("expression parser errors carry a column")
{
    for (const char* bad : {"", "Y", "X", "X0", "X6", "X1^", "X1^-1", "X1 +", "q^--1", "12", "X1 X2", "*X1"}) {
        CAPTURE(bad);
        CHECK(code_of([&] { parse_expr(bad, 5); }) == ErrorCode::ParseError);
    }
    try {
        parse_expr("X1 + Y", 5);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("column 6") != std::string::npos);
    }
}

TEST_CASE("expressions evaluate in the ring")
{
    const Ring ring(testing::builtin("blowup_cp3"), Space::L, Flavor::Quantum);
    CHECK(evaluate(ring, parse_expr("L + 1", 5)).is_zero());
    CHECK(evaluate(ring, parse_expr("q*q^-1", 5)) == ring.fundamental_class());
    CHECK(ring.format(evaluate(ring, parse_expr("X4*X4", 5))) == "X1*X4 + L*q^-2");
}

TEST_CASE("built-in polytopes")
{
    CHECK(testing::builtin("cp1").facet_count() == 2);
    CHECK(testing::builtin("cp4").facet_count() == 5);
    const Polytope b = testing::builtin("blowup_cp3");
    CHECK(b.facet_count() == 5);
    CHECK_FALSE(builtin_polytope("cp0").has_value());
    CHECK_FALSE(builtin_polytope("cpx").has_value());
    CHECK(load_polytope(testing::fixture("blowup_cp3_inward.json")).facets() == b.facets());
}

TEST_CASE("load, serialize and load again")
{
    for (const auto& name : testing::all_builtins()) {
        const Polytope p = testing::builtin(name);
        CHECK(polytope_from_text(polytope_to_json(p).dump()) == p);
        CHECK(polytope_from_json(outward_json(p)) == p);
    }
}

TEST_CASE("malformed files")
{
    CHECK(code_of([] { load_polytope(testing::fixture("malformed.json")); }) == ErrorCode::ParseError);
    try {
        polytope_from_text("{\n  \"dim\": 2,\n  oops\n}");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    const auto schema = [](const std::string& text, const std::string& path) {
        CAPTURE(text);
        try {
            polytope_from_text(text);
            FAIL("expected SchemaError");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::SchemaError);
            CHECK(std::string(e.what()).find(path) != std::string::npos);
        }
    };
    schema(R"({"facets": []})", "dim");
    schema(R"({"dim": 1})", "facets");
    schema(R"({"dim": 1, "facets": [{"normal": [1, 0], "offset": [0, 1]}]})", "facets[0].normal");
    schema(R"({"dim": 1, "facets": [{"normal": [1], "offset": [2, 4]}]})", "facets[0].offset");
    schema(R"({"dim": 1, "facets": [{"normal": [1], "offset": [1, 0]}]})", "facets[0].offset[1]");
    schema(R"({"dim": 1, "facets": [{"normal": ["a"], "offset": [0, 1]}]})", "facets[0].normal[0]");
    schema(R"({"dim": 1, "convention": "sideways", "facets": []})", "convention");
    schema(R"({"dim": 1, "facets": [{"normal": [1]}]})", "facets[0].offset");
}

TEST_CASE("outward and inward conventions give identical reports")
{
    for (const auto& name : testing::all_builtins()) {
        CAPTURE(name);
        const Polytope p = testing::builtin(name);
        const std::string in_path = "roundtrip_" + name + "_in.json", out_path = "roundtrip_" + name + "_out.json";
        std::ofstream(in_path) << polytope_to_json(p).dump();
        std::ofstream(out_path) << outward_json(p).dump();
        for (std::vector<std::string> cmd : {std::vector<std::string>{"presentation"},
                                             {"presentation", "--space", "M"},
                                             {"presentation", "--flavor", "classical"},
                                             {"primitives"},
                                             {"uniruled"},
                                             {"betti"},
                                             {"psi-check"}}) {
            auto a = cmd, b = cmd;
            a.push_back(in_path);
            b.push_back(out_path);
            json ja = run_json(a), jb = run_json(b);
            CHECK(ja == jb);
        }
        std::remove(in_path.c_str());
        std::remove(out_path.c_str());
    }
}

TEST_CASE("command reports")
{
    json j = run_json({"presentation", "--space", "L", "--flavor", "quantum", "blowup_cp3"});
    CHECK(j["schema_version"] == kReportSchemaVersion);
    CHECK(j["presentation"]["reduced_relations"] == json({"X4^2 + X1*X4 + q^-2", "X1^3 + X4*q^-2"}));
    CHECK(j["presentation"]["rank"] == 6);
    CHECK(j["polytope"]["facets"][3]["offset"] == "-1/2·π");

    CHECK(run_json({"mul", "X4", "X4", "blowup_cp3"})["result"]["text"] == "X1*X4 + L*q^-2");
    CHECK(run_json({"invert", "X1*q", "blowup_cp3"})["inverse"]["text"] == "X1^2*X4*q^3 + X4*q");
    CHECK(run_json({"seidel", "--combo", "0,0,0,2,0", "blowup_cp3"})["element"]["text"] == "X1*X4*q^2 + L");
    CHECK(run_json({"seidel", "--facet", "1", "blowup_cp3"})["element"]["text"] == "X1*q");
    CHECK(run_json({"betti", "--xi", "1,2,4", "blowup_cp3"})["betti"] == json({1, 2, 2, 1}));
    CHECK(run_json({"uniruled", "cp3"})["certificate"]["verdict"] == "uniruled");
    CHECK(run_json({"psi-check", "cp1xcp1"})["verdict"] == "isomorphism");
    CHECK(run_json({"vertices", "cp2"})["vertices"].size() == 3);
    CHECK(run_json({"primitives", "blowup_cp3"})["primitive_collections"].size() == 2);
    CHECK(run_json({"validate", "cp5"})["delzant"] == true);

    json self = run_json({"selfcheck", "blowup_cp3"});
    CHECK(self["all_passed"] == true);
    for (const auto& c : self["checks"]) {
        CHECK(c["status"] == "pass");
        CHECK(c.contains("elapsed_ms"));
    }
}

TEST_CASE("exit codes")
{
    json det2 = run_json({"validate", testing::fixture("square_det2.json")}, 1);
    CHECK(det2["error"]["code"] == "RejectNonUnimodular");
    CHECK(run_json({"validate", testing::fixture("pyramid.json")}, 1)["error"]["code"] == "RejectNonSimple");
    CHECK(run_json({"presentation", testing::fixture("hirzebruch2.json")}, 1)["error"]["code"] == "NoBatyrevVector");
    CHECK(run_json({"presentation", "--flavor", "classical", testing::fixture("hirzebruch2.json")})["status"] == "ok");
    CHECK(run_json({"betti", "--xi", "1,1", "cp2"}, 1)["error"]["code"] == "NonGenericXi");
    CHECK(run_json({"invert", "X1 + X5", "blowup_cp3"}, 1)["error"]["code"] == "NotInvertible");

    json self = run_json({"selfcheck", testing::fixture("square_det2.json")}, 1);
    CHECK(self["checks"][0]["status"] == "fail");
    for (std::size_t i = 1; i < self["checks"].size(); ++i)
        CHECK(self["checks"][i]["status"] == "skipped");

    CHECK(run_json({"validate", testing::fixture("malformed.json")}, 2)["error"]["code"] == "ParseError");
    CHECK(run_json({"validate", "no_such_file.json"}, 2)["error"]["code"] == "SchemaError");
    CHECK(run_json({"mul", "Y", "Y", "blowup_cp3"}, 2)["error"]["code"] == "ParseError");
    CHECK(run_json({"seidel", "--combo", "1,2", "blowup_cp3"}, 2)["error"]["code"] == "ParseError");
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate", "cp2"}).code == 2);
    CHECK(run({"presentation", "--space", "N", "cp2"}).code == 2);
    CHECK(run({"seidel", "cp2"}).code == 2);
    CHECK(run({"seidel", "--facet", "1", "--combo", "1,0,0", "cp2"}).code == 2);
    CHECK(run({"--format", "yaml", "validate", "cp2"}).code == 2);
    CHECK(run({"validate"}).code == 2);
}

TEST_CASE("text output is rendered from the JSON report")
{
    Run text = run({"--format", "text", "mul", "X4", "X4", "blowup_cp3"});
    json j = run_json({"mul", "X4", "X4", "blowup_cp3"});
    CHECK(text.code == 0);
    CHECK(text.out == render_text(j));
    CHECK(text.out.find("text: X1*X4 + L*q^-2") != std::string::npos);
}

TEST_CASE("format defaults to TORIC_QH_FORMAT")
{
    setenv("TORIC_QH_FORMAT", "json", 1);
    Run r = run({"validate", "cp2"});
    unsetenv("TORIC_QH_FORMAT");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["command"] == "validate");
    CHECK(run({"validate", "cp2"}).out.rfind("command: validate", 0) == 0);
}
