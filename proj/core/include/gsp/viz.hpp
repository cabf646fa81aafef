#pragma once

#include <Eigen/Dense>
#include <string>

#include "gsp/frames.hpp"
#include "gsp/graph.hpp"

namespace gsp {

struct PlotSpec {
  int width = 720;
  int height = 560;
  double point_size = 3.0;        // vertex marker radius
  std::string color_map = "viridis";
  int margin = 36;
};

/// Graph layout as SVG: one <line> per undirected edge (each unordered
/// pair drawn once), one <circle> per vertex, aspect ratio preserved.
/// Requires coordinates.
std::string plot_graph(const SparseGraph& g, const PlotSpec& spec);

/// Vertex signal heat plot: edges in light gray, vertices filled through
/// the color map scaled to [min f, max f] (constant signals map to the
/// midpoint), plus a color-scale legend.
std::string plot_signal(const SparseGraph& g, const Eigen::VectorXd& f,
                        const PlotSpec& spec);

/// Filter bank curves over [0, lmax]: one <polyline> per filter, y axis
/// fixed to [0, 1.05].
std::string plot_filter(const FilterBank& bank, const PlotSpec& spec,
                        int num_samples);

}  // namespace gsp
