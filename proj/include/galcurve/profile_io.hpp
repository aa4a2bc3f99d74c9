#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "galcurve/profile.hpp"
#include "galcurve/synthesis.hpp"

namespace galcurve {

/// A profile document violated the schema (missing or unknown keys,
/// malformed expressions, invalid grid or family constraints).
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Family { natural, geodesic, asymptotic, line_of_curvature };

std::string_view to_string(Family family);

/// Parsed profile file. Keys: kappa_g, kappa_n, tau_g (expression
/// strings), domain ([a, b]), n or step (mutually exclusive), optional
/// family and constants {c1..c4, phase}.
struct ProfileDocument {
    std::string kappa_g;
    std::string kappa_n;
    std::string tau_g;
    double a = 0.0;
    double b = 0.0;
    std::optional<int> n;
    std::optional<double> step;
    Family family = Family::natural;
    FamilyConstants constants;
};

ProfileDocument parse_profile_json(const std::string& text);
ProfileDocument load_profile(const std::filesystem::path& path);

/// Grid for a document: explicit n wins, then step (rounded up to an even
/// interval count), then the default resolution h = (b - a) / 1000.
Grid profile_grid(const ProfileDocument& doc,
                  std::optional<int> n_override = std::nullopt);

/// Parses the three expressions and applies the family constraints
/// (geodesic needs kappa_g = 0 on the grid, asymptotic kappa_n = 0,
/// line of curvature tau_g = 0).
CurvatureProfile build_profile(const ProfileDocument& doc, const Grid& g);

}  // namespace galcurve
