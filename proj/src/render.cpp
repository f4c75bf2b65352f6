#include "polyknot/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "polyknot/errors.hpp"

namespace polyknot {

namespace {

constexpr double kPad = 24.0;
constexpr double kFlatness = 0.25;  // px
constexpr int kMaxDepth = 16;

struct Frame {
  double sx = 1.0, sy = 1.0, ox = 0.0, oy = 0.0;
  int width = 0, height = 0;
  std::pair<double, double> map(double x, double y) const { return {ox + sx * x, height - (oy + sy * y)}; }
  bool far_outside(std::pair<double, double> p) const {
    return p.first < -kPad || p.first > width + kPad || p.second < -kPad || p.second > height + kPad;
  }
};

std::pair<double, double> t_range(const Diagram& d, const RenderOptions& o) {
  if (o.t_range) return *o.t_range;
  if (d.crossings.empty()) return {-2.0, 2.0};
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto& c : d.crossings) {
    lo = std::min(lo, c.params.s);
    hi = std::max(hi, c.params.t);
  }
  return {lo - 0.5, hi + 0.5};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

// Fits the sampled curve. If the crossings span less than a tenth of the
// curve along either axis, the frame is the crossings' box instead, each axis
// scaled on its own, and the rest of the curve runs off the canvas.
Frame make_frame(const SpaceCurve& c, const Diagram& d, const std::vector<double>& ts, const RenderOptions& o) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  double x0 = inf, x1 = -inf, y0 = inf, y1 = -inf;
  for (double t : ts) {
    const double x = c.x(t), y = c.y(t);
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  double cx0 = inf, cx1 = -inf, cy0 = inf, cy1 = -inf;
  for (const auto& cr : d.crossings) {
    cx0 = std::min(cx0, cr.px);
    cx1 = std::max(cx1, cr.px);
    cy0 = std::min(cy0, cr.py);
    cy1 = std::max(cy1, cr.py);
  }
  // Zoom both axes to the crossings when they are thin along either one.
  const bool thin = d.crossings.size() >= 2 && (cx1 - cx0 < 0.1 * (x1 - x0) || cy1 - cy0 < 0.1 * (y1 - y0));
  const bool zoomed = thin && cx1 > cx0 && cy1 > cy0;
  if (zoomed) {
    const double px = 0.35 * (cx1 - cx0), py = 0.35 * (cy1 - cy0);
    x0 = cx0 - px;
    x1 = cx1 + px;
    y0 = cy0 - py;
    y1 = cy1 + py;
  }

  const double bw = std::max(x1 - x0, 1e-12), bh = std::max(y1 - y0, 1e-12);
  Frame f;
  f.width = o.width;
  f.height = o.height;
  f.sx = (o.width - 2 * kPad) / bw;
  f.sy = (o.height - 2 * kPad) / bh;
  if (!zoomed) f.sx = f.sy = std::min(f.sx, f.sy);
  f.ox = 0.5 * (o.width - f.sx * (x0 + x1));
  f.oy = 0.5 * (o.height - f.sy * (y0 + y1));
  return f;
}

std::vector<double> under_params(const Diagram& d) {
  std::vector<double> unders;
  for (const auto& cr : d.crossings) unders.push_back(cr.first_pass_over ? cr.params.t : cr.params.s);
  std::sort(unders.begin(), unders.end());
  return unders;
}

// Uniform samples with the under-crossing parameters merged in.
std::vector<double> base_samples(const Diagram& d, const RenderOptions& o) {
  const auto [lo, hi] = t_range(d, o);
  std::vector<double> base(static_cast<std::size_t>(o.samples));
  for (int i = 0; i < o.samples; ++i) base[i] = lo + (hi - lo) * i / (o.samples - 1);
  const auto unders = under_params(d);
  base.insert(base.end(), unders.begin(), unders.end());
  std::sort(base.begin(), base.end());
  return base;
}

}  // namespace

std::vector<Stroke> plan_strokes(const SpaceCurve& c, const Diagram& d, const RenderOptions& o) {
  if (o.samples < 256) fail(ErrorKind::BadInput, "render: samples must be at least 256");
  if (o.width < 64 || o.height < 64) fail(ErrorKind::BadInput, "render: image must be at least 64 px wide and high");
  if (!(o.gap >= 0.0) || !(o.stroke > 0.0)) fail(ErrorKind::BadInput, "render: gap and stroke must be positive");
  const auto [lo, hi] = t_range(d, o);
  if (!(hi > lo)) fail(ErrorKind::BadRange, "render: empty parameter range");
  const double margin = 0.05 * (hi - lo);
  for (const auto& cr : d.crossings)
    for (double p : {cr.params.s, cr.params.t})
      if (p < lo + margin || p > hi - margin)
        fail(ErrorKind::BadRange, "render: crossing " + std::to_string(cr.index) + " lies outside the parameter range");
  const auto unders = under_params(d);
  const auto base = base_samples(d, o);
  const Frame f = make_frame(c, d, base, o);
  auto at = [&](double t) { return f.map(c.x(t), c.y(t)); };

  // Refined parameter list; every under-crossing parameter is a vertex.
  std::vector<double> ts{base.front()};
  auto refine = [&](auto&& self, double a, double b, int depth) -> void {
    const double m = 0.5 * (a + b);
    const auto pa = at(a), pb = at(b), pm = at(m);
    const double dev = std::hypot(pm.first - 0.5 * (pa.first + pb.first), pm.second - 0.5 * (pa.second + pb.second));
    if (dev > kFlatness && depth < kMaxDepth && !(f.far_outside(pa) && f.far_outside(pm) && f.far_outside(pb))) {
      self(self, a, m, depth + 1);
      self(self, m, b, depth + 1);
    } else {
      ts.push_back(b);
    }
  };
  for (std::size_t i = 1; i < base.size(); ++i)
    if (base[i] > base[i - 1]) refine(refine, base[i - 1], base[i], 0);

  std::vector<std::pair<double, double>> pts;
  std::vector<double> arc;
  for (double t : ts) {
    const auto p = at(t);
    arc.push_back(pts.empty() ? 0.0 : arc.back() + std::hypot(p.first - pts.back().first, p.second - pts.back().second));
    pts.push_back(p);
  }

  // Arc-length windows removed around each under-crossing.
  const double half = 0.5 * o.gap * o.stroke;
  std::vector<std::pair<double, double>> cuts;
  for (double u : half > 0.0 ? unders : std::vector<double>{}) {
    const auto i = static_cast<std::size_t>(std::lower_bound(ts.begin(), ts.end(), u) - ts.begin());
    cuts.push_back({arc[i] - half, arc[i] + half});
  }
  std::vector<std::pair<double, double>> merged;
  for (const auto& cut : cuts) {
    if (!merged.empty() && cut.first <= merged.back().second)
      merged.back().second = std::max(merged.back().second, cut.second);
    else
      merged.push_back(cut);
  }

  auto point_at = [&](double len) {
    const auto j = static_cast<std::size_t>(std::upper_bound(arc.begin(), arc.end(), len) - arc.begin());
    if (j == 0) return pts.front();
    if (j >= arc.size()) return pts.back();
    const double w = (len - arc[j - 1]) / std::max(arc[j] - arc[j - 1], 1e-300);
    return std::pair{pts[j - 1].first + w * (pts[j].first - pts[j - 1].first),
                     pts[j - 1].second + w * (pts[j].second - pts[j - 1].second)};
  };
  auto param_at = [&](double len) {
    const auto j = static_cast<std::size_t>(std::upper_bound(arc.begin(), arc.end(), len) - arc.begin());
    if (j == 0) return ts.front();
    if (j >= arc.size()) return ts.back();
    const double w = (len - arc[j - 1]) / std::max(arc[j] - arc[j - 1], 1e-300);
    return ts[j - 1] + w * (ts[j] - ts[j - 1]);
  };

  std::vector<Stroke> out;
  double start = 0.0;
  auto emit = [&](double a, double b) {
    if (b <= a) return;
    Stroke s;
    s.points.push_back(point_at(a));
    for (std::size_t i = 0; i < arc.size(); ++i)
      if (arc[i] > a && arc[i] < b) s.points.push_back(pts[i]);
    s.points.push_back(point_at(b));
    s.t_begin = param_at(a);
    s.t_end = param_at(b);
    out.push_back(std::move(s));
  };
  for (const auto& [a, b] : merged) {
    emit(start, a);
    start = b;
  }
  emit(start, arc.back());
  return out;
}

std::string render_svg(const SpaceCurve& c, const Diagram& d, const RenderOptions& o) {
  const auto strokes = plan_strokes(c, d, o);
  const std::string w = std::to_string(o.width), h = std::to_string(o.height);
  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w + "\" height=\"" + h +
         "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
  svg += "<title>" + xml_escape(c.label.empty() ? "curve" : c.label) + "</title>\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + w + "\" height=\"" + h + "\" fill=\"white\"/>\n";
  svg += "<g fill=\"none\" stroke=\"black\" stroke-width=\"" + num(o.stroke) +
         "\" stroke-linecap=\"round\" stroke-linejoin=\"round\">\n";
  for (const auto& s : strokes) {
    std::string path = "<path d=\"";
    std::string last;
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      const std::string xy = num(s.points[i].first) + " " + num(s.points[i].second);
      if (xy == last && i + 1 < s.points.size()) continue;
      path += (i == 0 ? "M" : " L") + xy;
      last = xy;
    }
    svg += path + "\"/>\n";
  }
  svg += "</g>\n";
  if (o.labels && !d.crossings.empty()) {
    const Frame f = make_frame(c, d, base_samples(d, o), o);
    svg += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#a00000\">\n";
    for (const auto& cr : d.crossings) {
      const auto p = f.map(cr.px, cr.py);
      svg += "<text x=\"" + num(p.first + 6) + "\" y=\"" + num(p.second - 6) + "\">" + std::to_string(cr.index) +
             "</text>\n";
    }
    svg += "</g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace polyknot
