#pragma once

#include <ostream>
#include <string>

#include "galcurve/classify.hpp"
#include "galcurve/frames.hpp"
#include "galcurve/surface.hpp"
#include "galcurve/synthesis.hpp"

namespace galcurve {

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

/// Curve rows "x,y,z", optionally extended with the frame columns
/// "Tx,Ty,Tz,Qy,Qz,ny,nz". Field separator ',', decimal '.', line
/// endings '\n'; identical inputs produce byte-identical output.
void write_curve_csv(std::ostream& os, const SampledCurve& curve,
                     const FrameFieldSet* frames = nullptr);

void write_curve_json(std::ostream& os, const SampledCurve& curve,
                      const FrameFieldSet* frames = nullptr);

void write_report_json(std::ostream& os, const ClassificationReport& report);

void write_mesh_csv(std::ostream& os, const SurfaceMesh& mesh);

void write_mesh_json(std::ostream& os, const SurfaceMesh& mesh);

}  // namespace galcurve
