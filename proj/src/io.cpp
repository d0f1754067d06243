#include "toricqh/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace toricqh {

using nlohmann::json;

namespace {

Facet facet(std::initializer_list<long> normal, long num, long den = 1)
{
    Facet f;
    for (long v : normal)
        f.normal.emplace_back(v);
    f.offset = make_rat(num, den);
    return f;
}

Polytope projective_space(int n)
{
    std::vector<Facet> facets;
    for (int i = 0; i < n; ++i) {
        Facet f;
        f.normal.assign(static_cast<std::size_t>(n), 0);
        f.normal[static_cast<std::size_t>(i)] = 1;
        f.offset = 0;
        facets.push_back(std::move(f));
    }
    Facet last;
    last.normal.assign(static_cast<std::size_t>(n), -1);
    last.offset = -1;
    facets.push_back(std::move(last));
    return Polytope("cp" + std::to_string(n), n, facets, Convention::Inward);
}

[[noreturn]] void schema_error(const std::string& path, const std::string& what)
{
    throw Error(ErrorCode::SchemaError, path + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& path)
{
    if (!obj.is_object())
        schema_error(path.empty() ? "$" : path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        schema_error(path.empty() ? key : path + "." + key, "missing field");
    return *it;
}

Integer integer_of(const json& v, const std::string& path)
{
    if (v.is_number_integer())
        return Integer(v.get<long>());
    if (v.is_number_unsigned() && v.get<unsigned long>() <= static_cast<unsigned long>(LONG_MAX))
        return Integer(static_cast<long>(v.get<unsigned long>()));
    schema_error(path, "expected an integer");
}

}  // namespace

std::optional<Polytope> builtin_polytope(std::string_view name)
{
    if (name == "cp1xcp1")
        return Polytope("cp1xcp1", 2,
                        {facet({1, 0}, 0), facet({-1, 0}, -1), facet({0, 1}, 0), facet({0, -1}, -1)},
                        Convention::Inward);
    if (name == "blowup_cp3")
        // Outward normals v_1..v_5 of the blow-up of CP³ at a point, offsets in π-units:
        // 0 <= x1, 0 <= x2, 0 <= x3 <= 1/2, x1 + x2 + x3 <= 1.
        return Polytope("blowup_cp3", 3,
                        {facet({-1, 0, 0}, 0), facet({0, -1, 0}, 0), facet({0, 0, -1}, 0), facet({0, 0, 1}, 1, 2),
                         facet({1, 1, 1}, 1)},
                        Convention::Outward);
    if (name.size() > 2 && name.substr(0, 2) == "cp") {
        int n = 0;
        auto digits = name.substr(2);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && n >= 1 && n <= 32)
            return projective_space(n);
    }
    return std::nullopt;
}

std::vector<std::string> builtin_names()
{
    return {"cp1", "cp2", "cp3", "cp4", "cp5", "cp1xcp1", "blowup_cp3"};
}

Polytope polytope_from_json(const json& j)
{
    std::string name = "unnamed";
    if (j.is_object() && j.contains("name")) {
        if (!j["name"].is_string())
            schema_error("name", "expected a string");
        name = j["name"].get<std::string>();
    }
    const json& dim_j = field(j, "dim", "");
    if (!dim_j.is_number_integer() || dim_j.get<long>() < 1 || dim_j.get<long>() > 64)
        schema_error("dim", "expected a positive integer");
    const int dim = dim_j.get<int>();

    Convention convention = Convention::Inward;
    if (j.contains("convention")) {
        const json& c = j["convention"];
        if (c == "inward")
            convention = Convention::Inward;
        else if (c == "outward")
            convention = Convention::Outward;
        else
            schema_error("convention", "expected \"inward\" or \"outward\"");
    }

    const json& facets_j = field(j, "facets", "");
    if (!facets_j.is_array())
        schema_error("facets", "expected an array");
    std::vector<Facet> facets;
    for (std::size_t i = 0; i < facets_j.size(); ++i) {
        const std::string path = "facets[" + std::to_string(i) + "]";
        const json& normal_j = field(facets_j[i], "normal", path);
        if (!normal_j.is_array() || normal_j.size() != static_cast<std::size_t>(dim))
            schema_error(path + ".normal", "expected an array of " + std::to_string(dim) + " integers");
        Facet f;
        for (std::size_t k = 0; k < normal_j.size(); ++k)
            f.normal.push_back(integer_of(normal_j[k], path + ".normal[" + std::to_string(k) + "]"));
        const json& offset_j = field(facets_j[i], "offset", path);
        if (!offset_j.is_array() || offset_j.size() != 2)
            schema_error(path + ".offset", "expected [numerator, denominator]");
        Integer num = integer_of(offset_j[0], path + ".offset[0]");
        Integer den = integer_of(offset_j[1], path + ".offset[1]");
        if (den <= 0)
            schema_error(path + ".offset[1]", "denominator must be positive");
        if (gcd(num, den) != 1)
            schema_error(path + ".offset", "fraction is not in lowest terms");
        f.offset = make_rat(num, den);
        facets.push_back(std::move(f));
    }
    try {
        return Polytope(name, dim, facets, convention);
    } catch (const Error& e) {
        schema_error("facets", e.what());
    }
}

Polytope polytope_from_text(std::string_view text)
{
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::size_t line = 1, column = 1;
        const std::size_t upto = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < upto; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else
                ++column;
        }
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line) + ", column " + std::to_string(column) + ": invalid JSON");
    }
    return polytope_from_json(j);
}

json polytope_to_json(const Polytope& p)
{
    json facets = json::array();
    for (const Facet& f : p.facets()) {
        json normal = json::array();
        for (const auto& v : f.normal)
            normal.push_back(v.get_si());
        facets.push_back({{"normal", normal}, {"offset", {f.offset.get_num().get_si(), f.offset.get_den().get_si()}}});
    }
    return {{"name", p.name()}, {"dim", p.dim()}, {"convention", "inward"}, {"facets", facets}};
}

Polytope load_polytope(const std::string& source)
{
    if (auto p = builtin_polytope(source))
        return *p;
    std::ifstream in(source);
    if (!in)
        throw Error(ErrorCode::SchemaError, "'" + source + "' is neither a built-in polytope nor a readable file");
    std::stringstream buf;
    buf << in.rdbuf();
    return polytope_from_text(buf.str());
}

std::string offset_symbolic(const Rat& r)
{
    if (r == 0)
        return "0";
    if (r.get_den() == 1) {
        if (r == 1)
            return "π";
        if (r == -1)
            return "-π";
        return r.get_num().get_str() + "·π";
    }
    return r.get_str() + "·π";
}

}  // namespace toricqh
