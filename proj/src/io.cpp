#include "galcurve/io.hpp"

#include <array>
#include <charconv>

#include <json.hpp>

namespace galcurve {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), end);
}

namespace {

void check_frame_sizes(const SampledCurve& curve, const FrameFieldSet* frames) {
    if (frames && (frames->T.size() != curve.points.size() ||
                   frames->Q.size() != curve.points.size() ||
                   frames->n.size() != curve.points.size()))
        throw std::invalid_argument("frame field length does not match curve");
}

}  // namespace

void write_curve_csv(std::ostream& os, const SampledCurve& curve,
                     const FrameFieldSet* frames) {
    check_frame_sizes(curve, frames);
    os << (frames ? "x,y,z,Tx,Ty,Tz,Qy,Qz,ny,nz\n" : "x,y,z\n");
    for (size_t k = 0; k < curve.points.size(); ++k) {
        const GalVec3& p = curve.points[k];
        os << format_double(p.x) << ',' << format_double(p.y) << ','
           << format_double(p.z);
        if (frames) {
            const GalVec3& T = frames->T[k];
            const GalVec3& Q = frames->Q[k];
            const GalVec3& n = frames->n[k];
            os << ',' << format_double(T.x) << ',' << format_double(T.y) << ','
               << format_double(T.z) << ',' << format_double(Q.y) << ','
               << format_double(Q.z) << ',' << format_double(n.y) << ','
               << format_double(n.z);
        }
        os << '\n';
    }
}

namespace {

template <typename Getter>
ordered_json column(size_t count, Getter&& get) {
    ordered_json arr = ordered_json::array();
    for (size_t k = 0; k < count; ++k) arr.push_back(get(k));
    return arr;
}

}  // namespace

void write_curve_json(std::ostream& os, const SampledCurve& curve,
                      const FrameFieldSet* frames) {
    check_frame_sizes(curve, frames);
    const size_t m = curve.points.size();
    ordered_json j;
    j["x"] = column(m, [&](size_t k) { return curve.points[k].x; });
    j["y"] = column(m, [&](size_t k) { return curve.points[k].y; });
    j["z"] = column(m, [&](size_t k) { return curve.points[k].z; });
    if (frames) {
        j["Tx"] = column(m, [&](size_t k) { return frames->T[k].x; });
        j["Ty"] = column(m, [&](size_t k) { return frames->T[k].y; });
        j["Tz"] = column(m, [&](size_t k) { return frames->T[k].z; });
        j["Qy"] = column(m, [&](size_t k) { return frames->Q[k].y; });
        j["Qz"] = column(m, [&](size_t k) { return frames->Q[k].z; });
        j["ny"] = column(m, [&](size_t k) { return frames->n[k].y; });
        j["nz"] = column(m, [&](size_t k) { return frames->n[k].z; });
    }
    os << j.dump(2) << '\n';
}

void write_report_json(std::ostream& os, const ClassificationReport& report) {
    ordered_json j;
    j["is_geodesic"] = report.is_geodesic;
    j["is_asymptotic"] = report.is_asymptotic;
    j["is_line_of_curvature"] = report.is_line_of_curvature;
    j["helix_type"] = std::string(to_string(report.helix_type));
    j["residuals"] = ordered_json::object();
    for (const auto& [key, value] : report.residuals) j["residuals"][key] = value;
    j["tolerance"] = report.tolerance;
    os << j.dump(2) << '\n';
}

void write_mesh_csv(std::ostream& os, const SurfaceMesh& mesh) {
    os << "u,v,x,y,z\n";
    for (size_t k = 0; k < mesh.points.size(); ++k) {
        const GalVec3& p = mesh.points[k];
        os << format_double(mesh.u[k]) << ',' << format_double(mesh.v[k]) << ','
           << format_double(p.x) << ',' << format_double(p.y) << ','
           << format_double(p.z) << '\n';
    }
}

void write_mesh_json(std::ostream& os, const SurfaceMesh& mesh) {
    const size_t m = mesh.points.size();
    ordered_json j;
    j["u"] = column(m, [&](size_t k) { return mesh.u[k]; });
    j["v"] = column(m, [&](size_t k) { return mesh.v[k]; });
    j["x"] = column(m, [&](size_t k) { return mesh.points[k].x; });
    j["y"] = column(m, [&](size_t k) { return mesh.points[k].y; });
    j["z"] = column(m, [&](size_t k) { return mesh.points[k].z; });
    os << j.dump(2) << '\n';
}

}  // namespace galcurve
