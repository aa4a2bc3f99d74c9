#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "galcurve/classify.hpp"
#include "galcurve/io.hpp"
#include "galcurve/profile_io.hpp"
#include "galcurve/surface.hpp"
#include "galcurve/synthesis.hpp"
#include "galcurve/verify.hpp"

namespace {

using namespace galcurve;

constexpr int kExitFailedChecks = 1;
constexpr int kExitSchema = 2;
constexpr int kExitNumeric = 3;

struct CliError {
    int code;
    std::string message;
};

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CliError{kExitSchema, "cannot open output file '" + path + "'"};
    return out;
}

void write_or_print(const std::string& path,
                    const std::function<void(std::ostream&)>& writer) {
    if (path.empty()) {
        writer(std::cout);
    } else {
        auto out = open_output(path);
        writer(out);
    }
}

int cmd_synthesize(const std::string& profile_path, const std::string& out_path,
                   const std::string& format, std::optional<int> n_override,
                   bool with_frames) {
    const ProfileDocument doc = load_profile(profile_path);
    const Grid grid = profile_grid(doc, n_override);
    const CurvatureProfile profile = build_profile(doc, grid);

    SampledCurve curve{grid, {}, false};
    FrameFieldSet frames;
    if (doc.family == Family::line_of_curvature) {
        if (with_frames)
            throw CliError{kExitSchema,
                           "--frames is not available for the "
                           "line_of_curvature family"};
        curve = synthesize_line_of_curvature(profile.kappa_g, profile.kappa_n,
                                             doc.constants, grid);
    } else {
        // geodesic/asymptotic constraints were enforced by build_profile,
        // so every remaining family is the general synthesis
        NaturalSynthesis synth =
            synthesize_with_frames(profile, doc.constants.phase);
        curve = std::move(synth.curve);
        frames = std::move(synth.frames);
    }

    const FrameFieldSet* frame_ptr = with_frames ? &frames : nullptr;
    write_or_print(out_path, [&](std::ostream& os) {
        if (format == "csv")
            write_curve_csv(os, curve, frame_ptr);
        else
            write_curve_json(os, curve, frame_ptr);
    });
    return 0;
}

int cmd_classify(const std::string& profile_path, double tol,
                 std::optional<int> n_override) {
    const ProfileDocument doc = load_profile(profile_path);
    const Grid grid = profile_grid(doc, n_override);
    const CurvatureProfile profile = build_profile(doc, grid);
    const ClassificationReport report = classify_profile(profile, tol);
    write_report_json(std::cout, report);
    return 0;
}

int cmd_verify(const std::string& profile_path, double tol,
               std::optional<int> n_override) {
    const ProfileDocument doc = load_profile(profile_path);
    const Grid grid = profile_grid(doc, n_override);
    const CurvatureProfile profile = build_profile(doc, grid);

    VerifyOptions options;
    options.roundtrip_tol = tol;
    options.phase = doc.constants.phase;
    const VerifyReport report = verify_profile(profile, options);

    std::string failed;
    for (const auto& check : report.checks) {
        std::cout << check.name << ": value=" << format_double(check.value)
                  << " tol=" << format_double(check.tol) << ' '
                  << (check.pass ? "PASS" : "FAIL") << '\n';
        if (!check.pass) failed += (failed.empty() ? "" : ", ") + check.name;
    }
    for (const auto& s : report.skipped) std::cout << "skipped: " << s << '\n';
    std::cout << "verify: " << (report.all_pass ? "PASS" : "FAIL") << '\n';
    if (!report.all_pass)
        throw CliError{kExitFailedChecks, "failed checks: " + failed};
    return 0;
}

int cmd_export_surface(const std::string& out_prefix, const std::string& format,
                       std::optional<int> n_override) {
    const int n = n_override.value_or(100);
    if (n < 1) throw CliError{kExitSchema, "--n must be positive"};
    const SurfaceMesh mesh = example_surface_mesh(n, n);
    const int curve_n = std::max(8, n % 2 == 0 ? n : n + 1);
    const SampledCurve curve = example_geodesic_curve(curve_n);

    const std::string ext = format == "csv" ? ".csv" : ".json";
    {
        auto out = open_output(out_prefix + "_mesh" + ext);
        format == "csv" ? write_mesh_csv(out, mesh) : write_mesh_json(out, mesh);
    }
    {
        auto out = open_output(out_prefix + "_curve" + ext);
        format == "csv" ? write_curve_csv(out, curve)
                        : write_curve_json(out, curve);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Curves on surfaces in the Galilean 3-space: synthesis from "
                 "Darboux curvature data, classification and verification"};
    app.require_subcommand(1);

    std::string profile_path;
    std::string out_path;
    std::string format = "csv";
    std::string out_prefix = "surface";
    double classify_tol = 1e-9;
    double verify_tol = 1e-3;
    std::optional<int> n_override;
    bool with_frames = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
    };
    auto add_n = [&](CLI::App* cmd) {
        cmd->add_option("--n", n_override,
                        "Override the number of grid intervals");
    };

    CLI::App* synthesize = app.add_subcommand(
        "synthesize", "Reconstruct a curve from a curvature profile");
    synthesize->add_option("--profile", profile_path, "Profile JSON file")
        ->required();
    synthesize->add_option("--out", out_path,
                           "Output file (standard output when omitted)");
    add_format(synthesize);
    add_n(synthesize);
    synthesize->add_flag("--frames", with_frames,
                         "Append the frame fields T, Q, n to the output");

    CLI::App* classify = app.add_subcommand(
        "classify", "Report family flags and helix type for a profile");
    classify->add_option("--profile", profile_path, "Profile JSON file")
        ->required();
    classify->add_option("--tol", classify_tol, "Classification tolerance")
        ->capture_default_str();
    add_n(classify);

    CLI::App* verify = app.add_subcommand(
        "verify", "Run the round-trip and residual checks on a profile");
    verify->add_option("--profile", profile_path, "Profile JSON file")
        ->required();
    verify->add_option("--tol", verify_tol, "Round-trip tolerance")
        ->capture_default_str();
    add_n(verify);

    CLI::App* export_surface = app.add_subcommand(
        "export-surface", "Write the demo surface mesh and its geodesic");
    export_surface
        ->add_option("--out", out_prefix, "Output path prefix")
        ->capture_default_str();
    add_format(export_surface);
    add_n(export_surface);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error[" << kExitSchema << "]: " << e.what() << '\n';
        return kExitSchema;
    }

    try {
        if (*synthesize)
            return cmd_synthesize(profile_path, out_path, format, n_override,
                                  with_frames);
        if (*classify) return cmd_classify(profile_path, classify_tol, n_override);
        if (*verify) return cmd_verify(profile_path, verify_tol, n_override);
        if (*export_surface)
            return cmd_export_surface(out_prefix, format, n_override);
    } catch (const CliError& e) {
        std::cerr << "error[" << e.code << "]: " << e.message << '\n';
        return e.code;
    } catch (const SchemaError& e) {
        std::cerr << "error[" << kExitSchema << "]: " << e.what() << '\n';
        return kExitSchema;
    } catch (const ParseError& e) {
        std::cerr << "error[" << kExitSchema << "]: " << e.what() << '\n';
        return kExitSchema;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error[" << kExitSchema << "]: " << e.what() << '\n';
        return kExitSchema;
    } catch (const std::exception& e) {
        // numerical preconditions: expression domains, degenerate
        // curvature, singular torsion
        std::cerr << "error[" << kExitNumeric << "]: " << e.what() << '\n';
        return kExitNumeric;
    }
    return 0;
}
