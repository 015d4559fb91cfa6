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

#ifndef HOLOEE_MINCUT_H
#define HOLOEE_MINCUT_H

#include <string>
#include <vector>

#include "holoee/tensornet.h"

namespace holoee {

/// Unit-capacity cut graph of a network and boundary region.
///
/// Vertices 0..N-1 are the nodes, N is the source and N+1 the sink. Edge ids
/// 0..L-1 are the internal links (undirected), and L + i is the terminal edge
/// of dangling leg i: source -> node when i is in the region, node -> sink
/// otherwise. Parallel edges are kept.
struct CutProblem {
    struct Edge {
        int from;
        int to;
        bool undirected;
    };

    int n_vertices = 0;
    int source = 0;
    int sink = 0;
    int n_links = 0;
    std::vector<Edge> edges;

    static CutProblem from_network(const TensorNetwork &tn, const BoundaryRegion &region);
    std::string edge_label(int id) const;
};

struct MinCutResult {
    int value = 0;
    /// Edge ids in ascending order; the lexicographically smallest minimum cut.
    std::vector<int> cut_edges;
};

/// Integral max-flow on a cut problem, optionally with some edges removed.
int max_flow(const CutProblem &problem, const std::vector<bool> &removed = {});

/// True when the edges not marked removed still connect source to sink.
bool source_reaches_sink(const CutProblem &problem, const std::vector<bool> &removed);

MinCutResult min_cut(const CutProblem &problem);
MinCutResult min_cut(const TensorNetwork &tn, const BoundaryRegion &region);

inline constexpr int kBruteForceEdgeCap = 24;

/// Smallest number of edges whose removal separates the region's legs from the rest,
/// found by enumerating edge subsets in increasing size. Throws UnsupportedScaleError
/// above kBruteForceEdgeCap edges.
int enumerate_cuts_bruteforce(const TensorNetwork &tn, const BoundaryRegion &region);

}  // namespace holoee

#endif  // HOLOEE_MINCUT_H
