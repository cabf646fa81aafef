#include "gsp/viz.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "gsp/errors.hpp"

namespace gsp {

namespace {

std::string num(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

// viridis-like sequential map: 256 stops interpolated from the standard
// anchor colors, dark purple to yellow.
struct Rgb {
  double r, g, b;
};

const std::array<Rgb, 9> kViridisAnchors = {{
    {68, 1, 84},
    {71, 44, 122},
    {59, 81, 139},
    {44, 113, 142},
    {33, 144, 141},
    {39, 173, 129},
    {92, 200, 99},
    {170, 220, 50},
    {253, 231, 37},
}};

std::array<Rgb, 256> build_viridis() {
  std::array<Rgb, 256> lut{};
  for (int i = 0; i < 256; ++i) {
    const double t = i / 255.0 * (kViridisAnchors.size() - 1);
    const int lo = std::min<int>(static_cast<int>(t), kViridisAnchors.size() - 2);
    const double frac = t - lo;
    const Rgb& a = kViridisAnchors[lo];
    const Rgb& b = kViridisAnchors[lo + 1];
    lut[i] = {a.r + frac * (b.r - a.r), a.g + frac * (b.g - a.g),
              a.b + frac * (b.b - a.b)};
  }
  return lut;
}

std::string color_at(double t, const std::string& map_name) {
  if (map_name != "viridis") {
    throw ValidationError("unknown color map '" + map_name + "'");
  }
  static const std::array<Rgb, 256> lut = build_viridis();
  t = std::clamp(t, 0.0, 1.0);
  const Rgb& c = lut[static_cast<int>(std::lround(t * 255.0))];
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(std::lround(c.r)),
                static_cast<int>(std::lround(c.g)), static_cast<int>(std::lround(c.b)));
  return buf;
}

void check_spec(const PlotSpec& spec) {
  if (spec.width <= 0 || spec.height <= 0) {
    throw ValidationError("plot dimensions must be positive");
  }
  if (!(spec.point_size > 0.0)) {
    throw ValidationError("point_size must be positive");
  }
  if (spec.margin < 0 || 2 * spec.margin >= std::min(spec.width, spec.height)) {
    throw ValidationError("margins leave no plot area");
  }
  color_at(0.0, spec.color_map);  // validates the map name
}

// Affine data->viewport map preserving aspect ratio; collapses to the
// viewport center when the data has no extent.
class Viewport {
 public:
  Viewport(double xmin, double xmax, double ymin, double ymax,
           const PlotSpec& spec)
      : cx_data_((xmin + xmax) / 2), cy_data_((ymin + ymax) / 2) {
    const double plot_w = spec.width - 2.0 * spec.margin;
    const double plot_h = spec.height - 2.0 * spec.margin;
    const double xspan = xmax - xmin;
    const double yspan = ymax - ymin;
    double scale = std::min(xspan > 0 ? plot_w / xspan : std::numeric_limits<double>::infinity(),
                            yspan > 0 ? plot_h / yspan : std::numeric_limits<double>::infinity());
    if (!std::isfinite(scale)) scale = 1.0;
    scale_ = scale;
    cx_view_ = spec.width / 2.0;
    cy_view_ = spec.height / 2.0;
  }

  double x(double v) const { return cx_view_ + (v - cx_data_) * scale_; }
  double y(double v) const { return cy_view_ - (v - cy_data_) * scale_; }

 private:
  double cx_data_, cy_data_;
  double cx_view_ = 0, cy_view_ = 0;
  double scale_ = 1;
};

std::string svg_open(const PlotSpec& spec) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width
     << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width
     << ' ' << spec.height << "\">\n";
  return os.str();
}

const Eigen::MatrixX2d& require_coords(const SparseGraph& g) {
  if (!g.coords) {
    throw ValidationError(
        "graph has no coordinates; a planar layout is required for plotting");
  }
  return *g.coords;
}

void emit_edges(std::ostringstream& os, const SparseGraph& g,
                const Eigen::MatrixX2d& xy, const Viewport& vp,
                const char* stroke) {
  os << "<g stroke=\"" << stroke << "\" stroke-width=\"1\">\n";
  for (int k = 0; k < g.weights.outerSize(); ++k) {
    for (SparseMatrixd::InnerIterator it(g.weights, k); it; ++it) {
      if (it.row() >= it.col()) continue;  // each unordered pair once
      os << "<line x1=\"" << num(vp.x(xy(it.row(), 0))) << "\" y1=\""
         << num(vp.y(xy(it.row(), 1))) << "\" x2=\"" << num(vp.x(xy(it.col(), 0)))
         << "\" y2=\"" << num(vp.y(xy(it.col(), 1))) << "\"/>\n";
    }
  }
  os << "</g>\n";
}

}  // namespace

std::string plot_graph(const SparseGraph& g, const PlotSpec& spec) {
  check_spec(spec);
  validate_graph(g);
  const auto& xy = require_coords(g);

  const double xmin = xy.rows() ? xy.col(0).minCoeff() : 0;
  const double xmax = xy.rows() ? xy.col(0).maxCoeff() : 0;
  const double ymin = xy.rows() ? xy.col(1).minCoeff() : 0;
  const double ymax = xy.rows() ? xy.col(1).maxCoeff() : 0;
  const Viewport vp(xmin, xmax, ymin, ymax, spec);

  std::ostringstream os;
  os << svg_open(spec);
  emit_edges(os, g, xy, vp, "#5b5b5b");
  os << "<g fill=\"#1f4e79\">\n";
  for (Eigen::Index i = 0; i < xy.rows(); ++i) {
    os << "<circle cx=\"" << num(vp.x(xy(i, 0))) << "\" cy=\""
       << num(vp.y(xy(i, 1))) << "\" r=\"" << num(spec.point_size) << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string plot_signal(const SparseGraph& g, const Eigen::VectorXd& f,
                        const PlotSpec& spec) {
  check_spec(spec);
  validate_graph(g);
  const auto& xy = require_coords(g);
  if (f.size() != g.size()) {
    throw ValidationError("signal length " + std::to_string(f.size()) +
                          " does not match graph size " +
                          std::to_string(g.size()));
  }

  const double xmin = xy.rows() ? xy.col(0).minCoeff() : 0;
  const double xmax = xy.rows() ? xy.col(0).maxCoeff() : 0;
  const double ymin = xy.rows() ? xy.col(1).minCoeff() : 0;
  const double ymax = xy.rows() ? xy.col(1).maxCoeff() : 0;
  const Viewport vp(xmin, xmax, ymin, ymax, spec);

  const double fmin = f.size() ? f.minCoeff() : 0;
  const double fmax = f.size() ? f.maxCoeff() : 0;
  const double span = fmax - fmin;
  auto unit = [&](double v) { return span > 0 ? (v - fmin) / span : 0.5; };

  std::ostringstream os;
  os << svg_open(spec);
  emit_edges(os, g, xy, vp, "#c8c8c8");
  os << "<g stroke=\"none\">\n";
  for (Eigen::Index i = 0; i < f.size(); ++i) {
    os << "<circle cx=\"" << num(vp.x(xy(i, 0))) << "\" cy=\""
       << num(vp.y(xy(i, 1))) << "\" r=\"" << num(spec.point_size)
       << "\" fill=\"" << color_at(unit(f[i]), spec.color_map) << "\"/>\n";
  }
  os << "</g>\n";

  // color-scale legend, drawn with rects so element counts stay graph-only
  const int stops = 32;
  const double bar_w = 12;
  const double bar_h = spec.height - 2.0 * spec.margin;
  const double bar_x = spec.width - spec.margin - bar_w + 8;
  os << "<g stroke=\"none\">\n";
  for (int s = 0; s < stops; ++s) {
    const double t0 = static_cast<double>(s) / stops;
    const double y_top = spec.margin + bar_h * (1.0 - (s + 1.0) / stops);
    os << "<rect x=\"" << num(bar_x) << "\" y=\"" << num(y_top) << "\" width=\""
       << num(bar_w) << "\" height=\"" << num(bar_h / stops + 0.5)
       << "\" fill=\"" << color_at((t0 + 0.5 / stops), spec.color_map)
       << "\"/>\n";
  }
  os << "</g>\n";
  os << "<text x=\"" << num(bar_x - 4) << "\" y=\"" << num(spec.margin + 10)
     << "\" font-size=\"11\" text-anchor=\"end\">" << num(fmax) << "</text>\n";
  os << "<text x=\"" << num(bar_x - 4) << "\" y=\""
     << num(spec.margin + bar_h) << "\" font-size=\"11\" text-anchor=\"end\">"
     << num(fmin) << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::string plot_filter(const FilterBank& bank, const PlotSpec& spec,
                        int num_samples) {
  check_spec(spec);
  const FilterCurves curves = filter_curves(bank, num_samples);

  const double y_top = 1.05;  // fixed vertical range [0, 1.05]
  const double plot_w = spec.width - 2.0 * spec.margin;
  const double plot_h = spec.height - 2.0 * spec.margin;
  auto px = [&](double x) { return spec.margin + x / bank.lmax() * plot_w; };
  auto py = [&](double y) { return spec.height - spec.margin - y / y_top * plot_h; };

  static const std::array<const char*, 8> palette = {
      "#4878cf", "#d65f5f", "#59a14f", "#b07aa1",
      "#e8a33d", "#6dccda", "#ed97ca", "#797979"};

  std::ostringstream os;
  os << svg_open(spec);
  os << "<rect x=\"" << spec.margin << "\" y=\"" << spec.margin
     << "\" width=\"" << num(plot_w) << "\" height=\"" << num(plot_h)
     << "\" fill=\"none\" stroke=\"#404040\"/>\n";
  for (int j = 0; j < curves.values.cols(); ++j) {
    os << "<polyline fill=\"none\" stroke=\"" << palette[j % palette.size()]
       << "\" stroke-width=\"1.5\" points=\"";
    for (Eigen::Index s = 0; s < curves.x.size(); ++s) {
      if (s) os << ' ';
      os << num(px(curves.x[s])) << ',' << num(py(curves.values(s, j)));
    }
    os << "\"/>\n";
  }
  os << "<text x=\"" << num(spec.margin - 6) << "\" y=\"" << num(py(1.0) + 4)
     << "\" font-size=\"11\" text-anchor=\"end\">1</text>\n";
  os << "<text x=\"" << num(spec.margin - 6) << "\" y=\"" << num(py(0.0) + 4)
     << "\" font-size=\"11\" text-anchor=\"end\">0</text>\n";
  os << "<text x=\"" << num(px(bank.lmax())) << "\" y=\""
     << num(spec.height - spec.margin + 14)
     << "\" font-size=\"11\" text-anchor=\"middle\">" << num(bank.lmax())
     << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace gsp
