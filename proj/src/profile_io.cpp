#include "galcurve/profile_io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace galcurve {

using nlohmann::json;

std::string_view to_string(Family family) {
    switch (family) {
        case Family::natural: return "natural";
        case Family::geodesic: return "geodesic";
        case Family::asymptotic: return "asymptotic";
        case Family::line_of_curvature: return "line_of_curvature";
    }
    return "natural";
}

namespace {

Family family_from_string(const std::string& s) {
    if (s == "natural") return Family::natural;
    if (s == "geodesic") return Family::geodesic;
    if (s == "asymptotic") return Family::asymptotic;
    if (s == "line_of_curvature") return Family::line_of_curvature;
    throw SchemaError("unknown family '" + s +
                      "' (expected natural, geodesic, asymptotic or "
                      "line_of_curvature)");
}

std::string require_string(const json& j, const char* key) {
    if (!j.contains(key))
        throw SchemaError(std::string("missing key '") + key + "'");
    if (!j.at(key).is_string())
        throw SchemaError(std::string("key '") + key + "' must be a string");
    return j.at(key).get<std::string>();
}

}  // namespace

ProfileDocument parse_profile_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("profile must be a JSON object");

    static const std::set<std::string> known{
        "kappa_g", "kappa_n", "tau_g", "domain", "n", "step",
        "family", "constants"};
    for (const auto& [key, value] : j.items())
        if (!known.count(key)) throw SchemaError("unknown key '" + key + "'");

    ProfileDocument doc;
    doc.kappa_g = require_string(j, "kappa_g");
    doc.kappa_n = require_string(j, "kappa_n");
    doc.tau_g = require_string(j, "tau_g");

    if (!j.contains("domain") || !j.at("domain").is_array() ||
        j.at("domain").size() != 2 || !j.at("domain")[0].is_number() ||
        !j.at("domain")[1].is_number())
        throw SchemaError("'domain' must be an array of two numbers");
    doc.a = j.at("domain")[0].get<double>();
    doc.b = j.at("domain")[1].get<double>();
    if (!(doc.a < doc.b)) throw SchemaError("'domain' must satisfy a < b");

    if (j.contains("n") && j.contains("step"))
        throw SchemaError("'n' and 'step' are mutually exclusive");
    if (j.contains("n")) {
        if (!j.at("n").is_number_integer())
            throw SchemaError("'n' must be an integer");
        doc.n = j.at("n").get<int>();
    }
    if (j.contains("step")) {
        if (!j.at("step").is_number())
            throw SchemaError("'step' must be a number");
        doc.step = j.at("step").get<double>();
        if (!(*doc.step > 0.0)) throw SchemaError("'step' must be positive");
    }

    if (j.contains("family"))
        doc.family = family_from_string(require_string(j, "family"));

    if (j.contains("constants")) {
        const json& c = j.at("constants");
        if (!c.is_object()) throw SchemaError("'constants' must be an object");
        static const std::set<std::string> keys{"c1", "c2", "c3", "c4", "phase"};
        for (const auto& [key, value] : c.items()) {
            if (!keys.count(key))
                throw SchemaError("unknown constant '" + key + "'");
            if (!value.is_number())
                throw SchemaError("constant '" + key + "' must be a number");
        }
        if (c.contains("c1")) doc.constants.c1 = c.at("c1").get<double>();
        if (c.contains("c2")) doc.constants.c2 = c.at("c2").get<double>();
        if (c.contains("c3")) doc.constants.c3 = c.at("c3").get<double>();
        if (c.contains("c4")) doc.constants.c4 = c.at("c4").get<double>();
        if (c.contains("phase"))
            doc.constants.phase = c.at("phase").get<double>();
    }
    return doc;
}

ProfileDocument load_profile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw SchemaError("cannot open profile file '" + path.string() + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_profile_json(buffer.str());
}

Grid profile_grid(const ProfileDocument& doc, std::optional<int> n_override) {
    int n = 0;
    if (n_override) {
        n = *n_override;
    } else if (doc.n) {
        n = *doc.n;
    } else if (doc.step) {
        n = static_cast<int>(std::ceil((doc.b - doc.a) / *doc.step));
        if (n % 2 != 0) ++n;
        n = std::max(n, 8);
    } else {
        n = 1000;
    }
    if (n < 8 || n % 2 != 0)
        throw SchemaError("'n' must be an even integer >= 8, got " +
                          std::to_string(n));
    return Grid(doc.a, doc.b, n);
}

CurvatureProfile build_profile(const ProfileDocument& doc, const Grid& g) {
    const auto parse_field = [](const std::string& src, const char* name) {
        try {
            return Expression::parse(src);
        } catch (const ParseError& e) {
            throw SchemaError(std::string(name) + ": " + e.what());
        }
    };
    CurvatureProfile p{parse_field(doc.kappa_g, "kappa_g"),
                       parse_field(doc.kappa_n, "kappa_n"),
                       parse_field(doc.tau_g, "tau_g"), g};

    const auto require_zero = [&](const Expression& e, const char* name) {
        for (int k = 0; k <= g.n; ++k)
            if (e.eval(g.node(k)) != 0.0)
                throw SchemaError(std::string(to_string(doc.family)) +
                                  " requires " + name + " = 0");
    };
    switch (doc.family) {
        case Family::natural: break;
        case Family::geodesic: require_zero(p.kappa_g, "kappa_g"); break;
        case Family::asymptotic: require_zero(p.kappa_n, "kappa_n"); break;
        case Family::line_of_curvature: require_zero(p.tau_g, "tau_g"); break;
    }
    return p;
}

}  // namespace galcurve
