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

#include "cli.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "holoee/circuits.h"
#include "holoee/errors.h"
#include "holoee/io.h"
#include "holoee/mincut.h"
#include "holoee/nmr.h"
#include "holoee/qmath.h"
#include "holoee/stabilizer.h"
#include "holoee/tensornet.h"
#include "svg.h"

namespace holoee::cli {

using nlohmann::json;

namespace {

constexpr double kIdealTolerance = 1e-9;

struct Options {
    std::string config_path;
    std::uint64_t seed = 0;
    std::string json_path;
    std::string csv_path;
    std::string svg_path;

    std::string graph = "searched";

    std::string mode = "ideal";
    double shot_sigma = 0.0;

    int layers = 0;
    std::string regions = "all-contiguous";
    int count = 200;
    std::string backend = "stabilizer";
    bool quiet = false;

    std::string compensate = "none";
    double factor = 1.25;
    bool noiseless = false;

    std::string network_path;
    std::string region;
};

/// Everything a command produces besides stdout.
struct Outcome {
    json results = json::object();
    json inputs = json::object();
    std::string csv;
    std::string svg;
    bool check_passed = true;
};

std::string fmt_double(double v, int digits = 6) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

std::string fmt_sci(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

std::string utc_timestamp() {
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

NmrSystemConfig load_config(const Options &opt) {
    std::string path = opt.config_path;
    if (path.empty()) {
        if (const char *env = std::getenv("HOLOEE_CONFIG"); env != nullptr && *env != '\0') {
            path = env;
        }
    }
    if (path.empty()) {
        return NmrSystemConfig::defaults();
    }
    return config_from_json(read_json_file(path));
}

Graph resolve_graph(const std::string &spec) {
    if (spec == "searched") {
        return search_perfect_graph();
    }
    if (spec == "ghz-like") {
        Graph star(6);
        for (int v = 1; v < 6; v++) {
            star.add_edge(0, v);
        }
        return star;
    }
    if (spec == "circulant-1-2") {
        return Graph::circulant(6, {1, 2});
    }
    return graph_from_json(read_json_file(spec));
}

std::string join(const std::vector<int> &xs, const char *sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); i++) {
        out += (i ? sep : "") + std::to_string(xs[i]);
    }
    return out;
}

/// "0,1,2", "3-7" and mixtures like "0-2,9"; empty means the empty region.
BoundaryRegion parse_region(const std::string &text) {
    BoundaryRegion region;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            continue;
        }
        try {
            auto dash = item.find('-');
            if (dash == std::string::npos) {
                region.indices.push_back(std::stoi(item));
            } else {
                int lo = std::stoi(item.substr(0, dash));
                int hi = std::stoi(item.substr(dash + 1));
                if (hi < lo) {
                    throw ArgumentError("descending range '" + item + "'");
                }
                for (int i = lo; i <= hi; i++) {
                    region.indices.push_back(i);
                }
            }
        } catch (const std::logic_error &) {
            throw ArgumentError("cannot parse region item '" + item + "'");
        }
    }
    return region;
}

json curve_to_json(const std::vector<EntropyPoint> &curve) {
    json out = json::array();
    for (const auto &p : curve) {
        out.push_back({{"k", p.k},
                       {"mean_bits", p.mean_bits},
                       {"spread_bits", p.spread_bits},
                       {"ideal_bits", p.ideal_bits},
                       {"maxent_bits", p.maxent_bits}});
    }
    return out;
}

std::string curve_to_csv(const std::vector<EntropyPoint> &curve) {
    std::string out = "k,mean_bits,spread_bits,ideal_bits,maxent_bits\n";
    for (const auto &p : curve) {
        out += std::to_string(p.k) + "," + fmt_double(p.mean_bits, 12) + "," + fmt_double(p.spread_bits, 12) + "," +
               fmt_double(p.ideal_bits, 12) + "," + fmt_double(p.maxent_bits, 12) + "\n";
    }
    return out;
}

void print_curve(std::ostream &out, const std::vector<EntropyPoint> &curve) {
    out << "  k   S (bits)   spread     min(k,6-k)  max\n";
    for (const auto &p : curve) {
        out << "  " << p.k << "   " << fmt_double(p.mean_bits, 4) << "     " << fmt_double(p.spread_bits, 4) << "     "
            << fmt_double(p.ideal_bits, 1) << "         " << fmt_double(p.maxent_bits, 1) << "\n";
    }
}

QubitList all_qubits(int n) {
    QubitList q;
    for (int i = 0; i < n; i++) {
        q.push_back(i);
    }
    return q;
}

// ---------------------------------------------------------------------------------------------

Outcome cmd_verify_pt(const Options &opt, std::ostream &out) {
    Outcome o;
    o.inputs = {{"graph", opt.graph}};
    Graph g = resolve_graph(opt.graph);
    if (g.n_vertices() != 6) {
        throw ArgumentError("verify-pt needs a 6-vertex graph, got " + std::to_string(g.n_vertices()));
    }
    StateVector psi = graph_state(g);
    PerfectTensorReport report = is_perfect_tensor(psi);

    o.csv = "q0,q1,q2,max_deviation\n";
    Eigen::MatrixXcd target = Eigen::MatrixXcd::Identity(8, 8) / 8.0;
    for (int a = 0; a < 6; a++) {
        for (int b = a + 1; b < 6; b++) {
            for (int c = b + 1; c < 6; c++) {
                double dev = (partial_trace(psi, {a, b, c}).entries() - target).cwiseAbs().maxCoeff();
                o.csv += std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," + fmt_sci(dev) + "\n";
            }
        }
    }

    o.results = {{"graph", graph_to_json(g)},
                 {"is_perfect", report.is_perfect},
                 {"worst_deviation", report.worst_deviation},
                 {"failing_subset", nullptr}};
    if (report.failing_subset) {
        o.results["failing_subset"] = *report.failing_subset;
    }
    o.svg = graph_svg(g, "graph state: " + opt.graph);

    out << "graph " << opt.graph << ": " << g.edges().size() << " edges";
    for (auto [a, b] : g.edges()) {
        out << " " << a << "-" << b;
    }
    out << "\nworst deviation of a 3-qubit reduced state from I/8: " << fmt_sci(report.worst_deviation) << "\n";
    if (report.is_perfect) {
        out << "perfect tensor: yes (all 20 three-qubit reductions maximally mixed)\n";
    } else {
        const auto &s = *report.failing_subset;
        out << "perfect tensor: no, failing subset {" << s[0] << "," << s[1] << "," << s[2] << "}\n";
        o.check_passed = false;
    }
    return o;
}

// ---------------------------------------------------------------------------------------------

struct NmrPipeline {
    DensityMatrix ideal;
    DensityMatrix simulated;
    PulseSequence sequence;
};

NmrPipeline simulate_nmr(const NmrSystemConfig &cfg, bool noise_on) {
    if (cfg.n_spins != 6) {
        throw ConfigError("the perfect-tensor experiment needs n_spins = 6");
    }
    Graph g = perfect_graph();
    Circuit circuit = graph_state_circuit(g);
    PulseSequence seq = compile_circuit_to_sequence(circuit, cfg, cfg.gate_durations);
    if (std::abs(seq.total_duration() - cfg.total_budget_s) > 1e-9) {
        throw ConfigError("compiled sequence lasts " + fmt_double(seq.total_duration(), 6) +
                          " s but total_budget_s is " + fmt_double(cfg.total_budget_s, 6) + " s");
    }
    return {DensityMatrix::from_state(graph_state(g)), run_noisy_circuit(circuit, cfg, noise_on), std::move(seq)};
}

DensityMatrix compensate_exact(const DensityMatrix &rho, const NmrSystemConfig &cfg, const PulseSequence &seq) {
    return rescale_exact_inverse(rho, cfg.t2star, dephasing_exposure(seq, cfg.n_spins));
}

Outcome cmd_entropy_curve(const Options &opt, const NmrSystemConfig &cfg, std::ostream &out) {
    Outcome o;
    o.inputs = {{"mode", opt.mode}, {"shot_sigma", opt.shot_sigma}};
    if (opt.mode != "ideal" && opt.mode != "noisy" && opt.mode != "compensated") {
        throw ArgumentError("--mode must be ideal, noisy or compensated");
    }
    o.inputs["config"] = config_to_json(cfg);

    std::vector<EntropyPoint> curve;
    if (opt.mode == "ideal") {
        DensityMatrix ideal = DensityMatrix::from_state(graph_state(perfect_graph()));
        DensityMatrix measured = tomography_emulate(ideal, all_qubits(6), opt.shot_sigma, opt.seed);
        curve = entropy_curve(measured);
        if (opt.shot_sigma == 0.0) {
            for (const auto &p : curve) {
                if (std::abs(p.mean_bits - p.ideal_bits) > kIdealTolerance || p.spread_bits > kIdealTolerance) {
                    o.check_passed = false;
                }
            }
        }
    } else {
        NmrPipeline run = simulate_nmr(cfg, true);
        DensityMatrix measured = tomography_emulate(run.simulated, all_qubits(6), opt.shot_sigma, opt.seed);
        curve = entropy_curve(measured);
        if (opt.mode == "compensated") {
            auto noisy = curve;
            curve = entropy_curve(compensate_exact(measured, cfg, run.sequence));
            for (std::size_t i = 3; i < 5; i++) {
                if (std::abs(curve[i].mean_bits - curve[i].ideal_bits) >=
                    std::abs(noisy[i].mean_bits - noisy[i].ideal_bits)) {
                    o.check_passed = false;
                }
            }
        }
    }

    o.results = {{"mode", opt.mode}, {"curve", curve_to_json(curve)}};
    o.csv = curve_to_csv(curve);
    o.svg = entropy_curve_svg(curve, "entanglement entropy (" + opt.mode + ")");
    out << "entropy curve, mode " << opt.mode << "\n";
    print_curve(out, curve);
    if (!o.check_passed) {
        out << "check failed: curve does not meet the " << opt.mode << " expectation\n";
    }
    return o;
}

// ---------------------------------------------------------------------------------------------

Outcome cmd_rt_check(const Options &opt, std::ostream &out) {
    Outcome o;
    Backend backend = parse_backend(opt.backend);
    o.inputs = {{"layers", opt.layers}, {"regions", opt.regions}, {"backend", opt.backend}};
    if (opt.regions == "random") {
        o.inputs["count"] = opt.count;
    } else if (opt.regions != "all-contiguous") {
        throw ArgumentError("--regions must be all-contiguous or random");
    }
    if (opt.count < 0) {
        throw ArgumentError("--count must be non-negative");
    }

    TensorNetwork tn = build_hexagonal_tn(opt.layers);
    int boundary = tn.boundary_size();

    std::vector<BoundaryRegion> regions;
    if (opt.regions == "all-contiguous") {
        for (int start = 0; start < boundary; start++) {
            for (int len = 1; len <= boundary; len++) {
                regions.push_back(BoundaryRegion::contiguous(start, len, boundary));
            }
        }
    } else {
        std::mt19937_64 rng(opt.seed);
        std::bernoulli_distribution coin(0.5);
        for (int i = 0; i < opt.count; i++) {
            BoundaryRegion r;
            for (int q = 0; q < boundary; q++) {
                if (coin(rng)) {
                    r.indices.push_back(q);
                }
            }
            regions.push_back(std::move(r));
        }
    }

    // Contract once, then evaluate every region against the same boundary state.
    std::function<double(const BoundaryRegion &)> entropy;
    std::optional<StabilizerTableau> tableau;
    std::optional<StateVector> dense;
    if (backend == Backend::Stabilizer) {
        tableau = contract_stabilizer(tn);
        entropy = [&](const BoundaryRegion &r) { return static_cast<double>(entanglement_entropy(*tableau, r.indices)); };
    } else {
        dense = contract_dense(tn).state;
        entropy = [&](const BoundaryRegion &r) {
            return r.indices.empty() ? 0.0 : von_neumann_entropy(partial_trace(*dense, r.indices));
        };
    }

    json rows = json::array();
    std::vector<std::pair<int, double>> points;
    int mismatches = 0;
    o.csv = "region,entropy_bits,min_cut,match\n";
    if (!opt.quiet) {
        out << "region | entropy | min-cut | match\n";
    }
    for (const auto &r : regions) {
        double s = entropy(r);
        int cut = min_cut(tn, r).value;
        bool match = std::abs(s - cut) <= kIdealTolerance;
        if (!match) {
            mismatches++;
        }
        points.emplace_back(cut, s);
        rows.push_back({{"region", r.indices}, {"entropy_bits", s}, {"min_cut", cut}, {"match", match}});
        std::string label = join(r.indices, " ");
        o.csv += label + "," + fmt_double(s, 9) + "," + std::to_string(cut) + "," + (match ? "1" : "0") + "\n";
        if (!opt.quiet || !match) {
            out << "{" << join(r.indices, ",") << "} | " << fmt_double(s, 6) << " | " << cut << " | "
                << (match ? "yes" : "NO") << "\n";
        }
    }
    o.results = {{"layers", opt.layers},
                 {"backend", backend_name(backend)},
                 {"boundary_size", boundary},
                 {"n_regions", regions.size()},
                 {"n_mismatches", mismatches},
                 {"regions", rows}};
    o.svg = rt_scatter_svg(points, "entropy vs min cut, layers=" + std::to_string(opt.layers));
    out << regions.size() << " regions, " << mismatches << " mismatches (layers=" << opt.layers
        << ", backend=" << backend_name(backend) << ")\n";
    o.check_passed = mismatches == 0;
    return o;
}

// ---------------------------------------------------------------------------------------------

Outcome cmd_nmr_run(const Options &opt, const NmrSystemConfig &cfg, std::ostream &out) {
    Outcome o;
    if (opt.compensate != "none" && opt.compensate != "exact-inverse" && opt.compensate != "factor") {
        throw ArgumentError("--compensate must be none, exact-inverse or factor");
    }
    o.inputs = {{"compensate", opt.compensate},
                {"shot_sigma", opt.shot_sigma},
                {"noiseless", opt.noiseless},
                {"config", config_to_json(cfg)}};
    if (opt.compensate == "factor") {
        o.inputs["factor"] = opt.factor;
    }

    NmrPipeline run = simulate_nmr(cfg, !opt.noiseless);
    DensityMatrix measured = tomography_emulate(run.simulated, all_qubits(6), opt.shot_sigma, opt.seed);
    double f = fidelity(measured, run.ideal);
    auto curve = entropy_curve(measured);

    o.results = {{"noiseless", opt.noiseless},
                 {"total_duration_s", run.sequence.total_duration()},
                 {"fidelity", f},
                 {"purity", purity(measured)},
                 {"curve", curve_to_json(curve)},
                 {"rho", density_to_json(measured)}};
    o.csv = curve_to_csv(curve);

    out << "pulse sequence: " << fmt_double(run.sequence.total_duration() * 1e3, 3) << " ms, "
        << (opt.noiseless ? "noise off" : "T2* dephasing on") << "\n";
    out << "fidelity to ideal perfect tensor: " << fmt_double(f, 6) << "\n";
    print_curve(out, curve);

    std::vector<std::pair<std::string, const DensityMatrix *>> panels = {{"ideal", &run.ideal},
                                                                         {"simulated", &measured}};
    std::optional<DensityMatrix> compensated;
    if (opt.compensate != "none") {
        compensated = opt.compensate == "exact-inverse" ? compensate_exact(measured, cfg, run.sequence)
                                                        : rescale_compensation(measured, opt.factor);
        double fc = fidelity(*compensated, run.ideal);
        auto curve_c = entropy_curve(*compensated);
        o.results["compensation"] = {{"mode", opt.compensate}, {"fidelity", fc}, {"curve", curve_to_json(curve_c)}};
        if (opt.compensate == "factor") {
            o.results["compensation"]["factor"] = opt.factor;
        }
        out << "compensated (" << opt.compensate << ") fidelity: " << fmt_double(fc, 6) << "\n";
        print_curve(out, curve_c);
        panels.emplace_back("compensated", &*compensated);
        if (opt.compensate == "exact-inverse" && !opt.noiseless && !(fc > f)) {
            out << "check failed: exact-inverse compensation did not raise the fidelity\n";
            o.check_passed = false;
        }
    }
    o.svg = density_heatmaps_svg(panels);
    return o;
}

// ---------------------------------------------------------------------------------------------

Outcome cmd_mincut(const Options &opt, std::ostream &out) {
    Outcome o;
    TensorNetwork tn;
    if (!opt.network_path.empty()) {
        tn = network_from_json(read_json_file(opt.network_path));
        o.inputs["network"] = network_to_json(tn);
    } else {
        tn = build_hexagonal_tn(opt.layers);
        o.inputs["layers"] = opt.layers;
    }
    BoundaryRegion region = parse_region(opt.region);
    region.check(tn.boundary_size());
    o.inputs["region"] = region.indices;

    CutProblem problem = CutProblem::from_network(tn, region);
    MinCutResult cut = min_cut(problem);
    o.results = mincut_to_json(cut, problem);
    o.results["region"] = region.indices;
    o.results["boundary_size"] = tn.boundary_size();
    o.svg = network_cut_svg(tn, region, cut, problem.n_links);

    o.csv = "edge_id,label\n";
    out << "min cut: " << cut.value << "\n";
    for (int id : cut.cut_edges) {
        o.csv += std::to_string(id) + "," + problem.edge_label(id) + "\n";
        out << "  " << problem.edge_label(id);
        if (id < problem.n_links) {
            const Link &l = tn.links[static_cast<std::size_t>(id)];
            out << " (" << tn.nodes[static_cast<std::size_t>(l.a.node)].id << " leg " << l.a.leg << " -- "
                << tn.nodes[static_cast<std::size_t>(l.b.node)].id << " leg " << l.b.leg << ")";
        } else {
            LegRef leg = tn.dangling[static_cast<std::size_t>(id - problem.n_links)];
            out << " (" << tn.nodes[static_cast<std::size_t>(leg.node)].id << " leg " << leg.leg << ")";
        }
        out << "\n";
    }
    return o;
}

void write_outputs(const Options &opt, const std::string &command, const Outcome &o) {
    if (!opt.json_path.empty()) {
        json report = {{"command", command},
                       {"config_hash", fnv1a_hex(o.inputs.dump())},
                       {"seed", opt.seed},
                       {"check_passed", o.check_passed},
                       {"results", o.results},
                       {"timestamp", utc_timestamp()}};
        write_text_file(opt.json_path, report.dump(2) + "\n");
    }
    if (!opt.csv_path.empty()) {
        write_text_file(opt.csv_path, o.csv);
    }
    if (!opt.svg_path.empty()) {
        write_text_file(opt.svg_path, o.svg);
    }
}

}  // namespace

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json report_payload(const json &report) {
    json copy = report;
    copy.erase("timestamp");
    return copy;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options opt;
    CLI::App app{"Perfect-tensor networks, discrete RT checks and NMR dephasing simulation", "holo-ee"};
    app.fallthrough();
    app.require_subcommand(1, 1);
    app.add_option("--config", opt.config_path, "NMR config JSON (falls back to $HOLOEE_CONFIG, then built-in defaults)");
    app.add_option("--seed", opt.seed, "Seed for every random choice");
    app.add_option("--json", opt.json_path, "Write the run report here");
    app.add_option("--csv", opt.csv_path, "Write the result table here");
    app.add_option("--svg", opt.svg_path, "Write a figure here");

    auto *verify = app.add_subcommand("verify-pt", "Certify that a 6-qubit graph state is a perfect tensor");
    verify->add_option("--graph", opt.graph, "searched, ghz-like, circulant-1-2, or a graph JSON file");

    auto *curve = app.add_subcommand("entropy-curve", "Entropy of k-qubit cyclic windows, k = 1..5");
    curve->add_option("--mode", opt.mode, "ideal | noisy | compensated");
    curve->add_option("--shot-sigma", opt.shot_sigma, "Gaussian noise on emulated Pauli expectations")->check(CLI::NonNegativeNumber);

    auto *rt = app.add_subcommand("rt-check", "Compare boundary entropies with min cuts");
    rt->add_option("--layers", opt.layers, "0 (one tensor) or 1 (seven tensors)");
    rt->add_option("--regions", opt.regions, "all-contiguous | random");
    rt->add_option("--count", opt.count, "Number of random regions");
    rt->add_option("--backend", opt.backend, "stabilizer | dense");
    rt->add_flag("--quiet", opt.quiet, "Print only mismatches and the summary");

    auto *nmr = app.add_subcommand("nmr-run", "Simulate the NMR preparation with T2* dephasing and tomography");
    nmr->add_option("--compensate", opt.compensate, "none | exact-inverse | factor");
    nmr->add_option("--factor", opt.factor, "Off-diagonal rescaling for --compensate factor")->check(CLI::Range(1.0, 1e6));
    nmr->add_option("--shot-sigma", opt.shot_sigma, "Gaussian noise on emulated Pauli expectations")->check(CLI::NonNegativeNumber);
    nmr->add_flag("--noiseless", opt.noiseless, "Turn dephasing off");

    auto *cut = app.add_subcommand("mincut", "Minimal cut separating a boundary region");
    cut->add_option("--network", opt.network_path, "Network JSON file (default: built-in hexagonal network)");
    cut->add_option("--layers", opt.layers, "Layers of the built-in network when --network is absent");
    cut->add_option("--region", opt.region, "Boundary indices, e.g. 0,1,2 or 0-4; empty for none");

    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "holo-ee: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        Outcome o;
        std::string command;
        if (verify->parsed()) {
            command = "verify-pt";
            o = cmd_verify_pt(opt, out);
        } else if (curve->parsed()) {
            command = "entropy-curve";
            o = cmd_entropy_curve(opt, load_config(opt), out);
        } else if (rt->parsed()) {
            command = "rt-check";
            o = cmd_rt_check(opt, out);
        } else if (nmr->parsed()) {
            command = "nmr-run";
            o = cmd_nmr_run(opt, load_config(opt), out);
        } else {
            command = "mincut";
            o = cmd_mincut(opt, out);
        }
        write_outputs(opt, command, o);
        return o.check_passed ? kExitOk : kExitCheckFailed;
    } catch (const CompensationError &e) {
        err << "holo-ee: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const InternalError &e) {
        err << "holo-ee: internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception &e) {
        // Argument, validation, configuration, scale and contraction errors are input problems.
        err << "holo-ee: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace holoee::cli
