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

#include "holoee/mincut.h"

#include <algorithm>
#include <limits>
#include <queue>

#include "holoee/errors.h"

namespace holoee {

CutProblem CutProblem::from_network(const TensorNetwork &tn, const BoundaryRegion &region) {
    auto violations = validate(tn);
    if (!violations.empty()) {
        throw ArgumentError("min_cut: invalid network: " + violations.front());
    }
    region.check(tn.boundary_size());
    CutProblem p;
    int n_nodes = static_cast<int>(tn.nodes.size());
    p.n_vertices = n_nodes + 2;
    p.source = n_nodes;
    p.sink = n_nodes + 1;
    p.n_links = static_cast<int>(tn.links.size());
    for (const Link &l : tn.links) {
        p.edges.push_back({l.a.node, l.b.node, true});
    }
    std::vector<bool> in_region(static_cast<std::size_t>(tn.boundary_size()), false);
    for (int i : region.indices) {
        in_region[static_cast<std::size_t>(i)] = true;
    }
    for (int i = 0; i < tn.boundary_size(); i++) {
        int node = tn.dangling[static_cast<std::size_t>(i)].node;
        if (in_region[static_cast<std::size_t>(i)]) {
            p.edges.push_back({p.source, node, false});
        } else {
            p.edges.push_back({node, p.sink, false});
        }
    }
    return p;
}

std::string CutProblem::edge_label(int id) const {
    if (id < 0 || id >= static_cast<int>(edges.size())) {
        throw ArgumentError("edge id " + std::to_string(id) + " out of range");
    }
    if (id < n_links) {
        return "link " + std::to_string(id);
    }
    return "leg " + std::to_string(id - n_links);
}

namespace {

// Dinic on unit capacities.
class FlowNetwork {
   public:
    explicit FlowNetwork(int n) : adj_(static_cast<std::size_t>(n)), level_(adj_.size()), next_(adj_.size()) {}

    void add_edge(int from, int to, int cap, int rev_cap) {
        adj_[static_cast<std::size_t>(from)].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({to, cap});
        adj_[static_cast<std::size_t>(to)].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({from, rev_cap});
    }

    int run(int source, int sink) {
        int flow = 0;
        while (bfs(source, sink)) {
            std::fill(next_.begin(), next_.end(), 0);
            while (int pushed = dfs(source, sink, std::numeric_limits<int>::max())) {
                flow += pushed;
            }
        }
        return flow;
    }

   private:
    struct Arc {
        int to;
        int cap;
    };

    bool bfs(int source, int sink) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[static_cast<std::size_t>(source)] = 0;
        q.push(source);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int id : adj_[static_cast<std::size_t>(v)]) {
                const Arc &a = arcs_[static_cast<std::size_t>(id)];
                if (a.cap > 0 && level_[static_cast<std::size_t>(a.to)] < 0) {
                    level_[static_cast<std::size_t>(a.to)] = level_[static_cast<std::size_t>(v)] + 1;
                    q.push(a.to);
                }
            }
        }
        return level_[static_cast<std::size_t>(sink)] >= 0;
    }

    int dfs(int v, int sink, int limit) {
        if (v == sink) {
            return limit;
        }
        auto &edges = adj_[static_cast<std::size_t>(v)];
        for (int &i = next_[static_cast<std::size_t>(v)]; i < static_cast<int>(edges.size()); i++) {
            int id = edges[static_cast<std::size_t>(i)];
            Arc &a = arcs_[static_cast<std::size_t>(id)];
            if (a.cap <= 0 || level_[static_cast<std::size_t>(a.to)] != level_[static_cast<std::size_t>(v)] + 1) {
                continue;
            }
            if (int pushed = dfs(a.to, sink, std::min(limit, a.cap))) {
                a.cap -= pushed;
                arcs_[static_cast<std::size_t>(id ^ 1)].cap += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<std::vector<int>> adj_;
    std::vector<Arc> arcs_;
    std::vector<int> level_;
    std::vector<int> next_;
};

bool is_removed(const std::vector<bool> &removed, std::size_t id) { return id < removed.size() && removed[id]; }

}  // namespace

int max_flow(const CutProblem &problem, const std::vector<bool> &removed) {
    FlowNetwork net(problem.n_vertices);
    for (std::size_t id = 0; id < problem.edges.size(); id++) {
        if (is_removed(removed, id)) {
            continue;
        }
        const auto &e = problem.edges[id];
        net.add_edge(e.from, e.to, 1, e.undirected ? 1 : 0);
    }
    return net.run(problem.source, problem.sink);
}

bool source_reaches_sink(const CutProblem &problem, const std::vector<bool> &removed) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(problem.n_vertices));
    for (std::size_t id = 0; id < problem.edges.size(); id++) {
        if (is_removed(removed, id)) {
            continue;
        }
        const auto &e = problem.edges[id];
        adj[static_cast<std::size_t>(e.from)].push_back(e.to);
        adj[static_cast<std::size_t>(e.to)].push_back(e.from);
    }
    std::vector<bool> seen(adj.size(), false);
    std::vector<int> stack{problem.source};
    seen[static_cast<std::size_t>(problem.source)] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == problem.sink) {
            return true;
        }
        for (int u : adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = true;
                stack.push_back(u);
            }
        }
    }
    return false;
}

MinCutResult min_cut(const CutProblem &problem) {
    MinCutResult result;
    result.value = max_flow(problem);
    // Greedy tie-break: take the smallest edge id whose removal lowers the remaining flow by
    // one; such an edge lies on some minimum cut of what is left.
    std::vector<bool> removed(problem.edges.size(), false);
    int remaining = result.value;
    for (std::size_t id = 0; id < problem.edges.size() && remaining > 0; id++) {
        removed[id] = true;
        if (max_flow(problem, removed) == remaining - 1) {
            result.cut_edges.push_back(static_cast<int>(id));
            remaining--;
        } else {
            removed[id] = false;
        }
    }
    if (remaining != 0 || source_reaches_sink(problem, removed)) {
        throw InternalError("min_cut: extracted edges do not realize the max-flow value");
    }
    return result;
}

MinCutResult min_cut(const TensorNetwork &tn, const BoundaryRegion &region) {
    return min_cut(CutProblem::from_network(tn, region));
}

int enumerate_cuts_bruteforce(const TensorNetwork &tn, const BoundaryRegion &region) {
    CutProblem problem = CutProblem::from_network(tn, region);
    int m = static_cast<int>(problem.edges.size());
    if (m > kBruteForceEdgeCap) {
        throw UnsupportedScaleError("enumerate_cuts_bruteforce: " + std::to_string(m) + " edges exceed the cap of " +
                                    std::to_string(kBruteForceEdgeCap));
    }
    for (int size = 0; size <= m; size++) {
        // Walk all subsets of the given size via a selection mask.
        std::vector<bool> select(static_cast<std::size_t>(m), false);
        std::fill(select.begin(), select.begin() + size, true);
        do {
            if (!source_reaches_sink(problem, select)) {
                return size;
            }
        } while (std::prev_permutation(select.begin(), select.end()));
    }
    throw InternalError("enumerate_cuts_bruteforce: removing every edge must disconnect");
}

}  // namespace holoee
