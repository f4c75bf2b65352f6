#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyknot/curve.hpp"
#include "polyknot/diagram.hpp"

namespace polyknot {

struct RenderOptions {
  int width = 800;
  int height = 800;
  int samples = 2048;         // initial uniform samples, at least 256
  double stroke = 2.0;        // stroke width in px
  double gap = 5.0;           // under-strand break, in stroke widths
  std::optional<std::pair<double, double>> t_range;  // default [min s - 0.5, max t + 0.5]
  bool labels = true;
};

/// One drawn piece of the strand, in pixel coordinates.
struct Stroke {
  std::vector<std::pair<double, double>> points;
  double t_begin = 0.0, t_end = 0.0;  // curve parameters at the two ends
};

/// The strand cut open around each under-crossing. Sampling starts from
/// `samples` uniform parameters and splits a segment while its midpoint is
/// more than 0.25 px off the chord. BadRange if a crossing parameter falls
/// within 5% of either end of t_range, or outside it; BadInput for bad sizes.
std::vector<Stroke> plan_strokes(const SpaceCurve& c, const Diagram& d, const RenderOptions& o);

/// Deterministic SVG 1.1 document for the (x, y) projection.
std::string render_svg(const SpaceCurve& c, const Diagram& d, const RenderOptions& o = {});

}  // namespace polyknot
