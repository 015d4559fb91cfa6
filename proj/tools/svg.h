// Copyright 2026 The holo-ee Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOLOEE_TOOLS_SVG_H
#define HOLOEE_TOOLS_SVG_H

#include <string>
#include <utility>
#include <vector>

#include "holoee/circuits.h"
#include "holoee/mincut.h"
#include "holoee/nmr.h"
#include "holoee/qmath.h"

namespace holoee::cli {

// Minimal standalone SVG figures. Output depends only on the inputs (fixed-precision
// number formatting), so files are byte-stable across runs.

/// Entropy per subsystem size with spread bars, the min{k, 6-k} line and the maximal-entropy line.
std::string entropy_curve_svg(const std::vector<EntropyPoint> &curve, const std::string &title);

/// Side-by-side |rho| heatmaps.
std::string density_heatmaps_svg(const std::vector<std::pair<std::string, const DensityMatrix *>> &panels);

/// Scatter of (min-cut, entropy) per region with the y = x reference.
std::string rt_scatter_svg(const std::vector<std::pair<int, double>> &points, const std::string &title);

/// Network nodes on a circle (the first node in the middle when there are more than two),
/// links drawn as lines with cut links highlighted, and per-node counts of region and cut legs.
std::string network_cut_svg(const TensorNetwork &tn, const BoundaryRegion &region, const MinCutResult &cut,
                            int n_links);

/// Vertices on a circle with graph edges.
std::string graph_svg(const Graph &graph, const std::string &title);

}  // namespace holoee::cli

#endif  // HOLOEE_TOOLS_SVG_H
