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

#include "svg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

namespace holoee::cli {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string escape(const std::string &text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

class Canvas {
   public:
    Canvas(double width, double height) : width_(width), height_(height) {}

    void line(double x1, double y1, double x2, double y2, const std::string &stroke, double w = 1.0,
              const std::string &dash = "") {
        body_ << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2) << "\" y2=\"" << num(y2)
              << "\" stroke=\"" << stroke << "\" stroke-width=\"" << num(w) << "\"";
        if (!dash.empty()) {
            body_ << " stroke-dasharray=\"" << dash << "\"";
        }
        body_ << "/>\n";
    }

    void polyline(const std::vector<std::pair<double, double>> &pts, const std::string &stroke,
                  const std::string &dash = "") {
        body_ << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"2\"";
        if (!dash.empty()) {
            body_ << " stroke-dasharray=\"" << dash << "\"";
        }
        body_ << " points=\"";
        for (std::size_t i = 0; i < pts.size(); i++) {
            body_ << (i ? " " : "") << num(pts[i].first) << "," << num(pts[i].second);
        }
        body_ << "\"/>\n";
    }

    void circle(double x, double y, double r, const std::string &fill) {
        body_ << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"" << num(r) << "\" fill=\"" << fill
              << "\"/>\n";
    }

    void rect(double x, double y, double w, double h, const std::string &fill) {
        body_ << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(w) << "\" height=\"" << num(h)
              << "\" fill=\"" << fill << "\"/>\n";
    }

    void text(double x, double y, const std::string &s, int size = 12, const std::string &anchor = "middle") {
        body_ << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-family=\"sans-serif\" font-size=\"" << size
              << "\" text-anchor=\"" << anchor << "\">" << escape(s) << "</text>\n";
    }

    std::string str() const {
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width_) << "\" height=\"" << num(height_)
            << "\" viewBox=\"0 0 " << num(width_) << " " << num(height_) << "\">\n"
            << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
            << body_.str() << "</svg>\n";
        return out.str();
    }

   private:
    double width_, height_;
    std::ostringstream body_;
};

struct Axes {
    double left = 60, top = 40, width = 420, height = 300;
    double x_min = 0, x_max = 1, y_min = 0, y_max = 1;

    double x(double v) const { return left + (v - x_min) / (x_max - x_min) * width; }
    double y(double v) const { return top + height - (v - y_min) / (y_max - y_min) * height; }

    void draw(Canvas &c, const std::string &x_label, const std::string &y_label, int x_ticks_step = 1,
              int y_ticks_step = 1) const {
        c.line(left, top + height, left + width, top + height, "black");
        c.line(left, top, left, top + height, "black");
        for (int t = static_cast<int>(std::ceil(x_min)); t <= static_cast<int>(x_max); t += x_ticks_step) {
            c.line(x(t), top + height, x(t), top + height + 5, "black");
            c.text(x(t), top + height + 18, std::to_string(t));
        }
        for (int t = static_cast<int>(std::ceil(y_min)); t <= static_cast<int>(y_max); t += y_ticks_step) {
            c.line(left - 5, y(t), left, y(t), "black");
            c.text(left - 8, y(t) + 4, std::to_string(t), 12, "end");
        }
        c.text(left + width / 2, top + height + 36, x_label);
        c.text(16, top + height / 2, y_label, 12, "start");
    }
};

}  // namespace

std::string entropy_curve_svg(const std::vector<EntropyPoint> &curve, const std::string &title) {
    Canvas c(560, 400);
    Axes ax;
    ax.x_min = 0.5;
    ax.x_max = 5.5;
    ax.y_min = 0;
    ax.y_max = 5.5;
    ax.draw(c, "subsystem size k", "S (bits)");
    c.text(ax.left + ax.width / 2, 24, title, 14);

    std::vector<std::pair<double, double>> ideal, maxent, measured;
    for (const auto &p : curve) {
        ideal.emplace_back(ax.x(p.k), ax.y(p.ideal_bits));
        maxent.emplace_back(ax.x(p.k), ax.y(p.maxent_bits));
        measured.emplace_back(ax.x(p.k), ax.y(p.mean_bits));
    }
    c.polyline(maxent, "seagreen", "2,4");
    c.polyline(ideal, "darkorange", "6,4");
    c.polyline(measured, "firebrick");
    for (const auto &p : curve) {
        double px = ax.x(p.k);
        c.line(px, ax.y(p.mean_bits - p.spread_bits), px, ax.y(p.mean_bits + p.spread_bits), "firebrick", 1.5);
        c.circle(px, ax.y(p.mean_bits), 4, "firebrick");
    }
    double lx = ax.left + ax.width + 8;
    c.line(lx - 4, 60, lx + 10, 60, "firebrick", 2);
    c.text(lx + 14, 64, "simulated", 11, "start");
    c.line(lx - 4, 80, lx + 10, 80, "darkorange", 2, "6,4");
    c.text(lx + 14, 84, "min(k,6-k)", 11, "start");
    c.line(lx - 4, 100, lx + 10, 100, "seagreen", 2, "2,4");
    c.text(lx + 14, 104, "max entropy", 11, "start");
    return c.str();
}

std::string density_heatmaps_svg(const std::vector<std::pair<std::string, const DensityMatrix *>> &panels) {
    constexpr double kPanel = 320, kGap = 40, kTop = 40;
    Canvas c(kGap + static_cast<double>(panels.size()) * (kPanel + kGap), kPanel + kTop + 30);
    double vmax = 0;
    for (const auto &[name, rho] : panels) {
        vmax = std::max(vmax, rho->entries().cwiseAbs().maxCoeff());
    }
    if (vmax <= 0) {
        vmax = 1;
    }
    double x0 = kGap;
    for (const auto &[name, rho] : panels) {
        auto d = static_cast<double>(rho->dim());
        double cell = kPanel / d;
        c.text(x0 + kPanel / 2, kTop - 12, name, 14);
        for (std::size_t r = 0; r < rho->dim(); r++) {
            for (std::size_t col = 0; col < rho->dim(); col++) {
                double v = std::abs((*rho)(r, col)) / vmax;
                int shade = 255 - static_cast<int>(std::lround(v * 255.0));
                char fill[16];
                std::snprintf(fill, sizeof(fill), "#%02x%02xff", shade, shade);
                c.rect(x0 + static_cast<double>(col) * cell, kTop + static_cast<double>(r) * cell, cell, cell, fill);
            }
        }
        x0 += kPanel + kGap;
    }
    c.text(kGap, kTop + kPanel + 20, "color: |rho_ab| scaled to max " + num(vmax), 11, "start");
    return c.str();
}

std::string rt_scatter_svg(const std::vector<std::pair<int, double>> &points, const std::string &title) {
    int top = 1;
    for (auto [m, s] : points) {
        top = std::max({top, m, static_cast<int>(std::ceil(s))});
    }
    Canvas c(520, 400);
    Axes ax;
    ax.x_min = -0.5;
    ax.x_max = top + 0.5;
    ax.y_min = -0.5;
    ax.y_max = top + 0.5;
    ax.draw(c, "min cut (links)", "entropy (bits)");
    c.text(ax.left + ax.width / 2, 24, title, 14);
    c.line(ax.x(0), ax.y(0), ax.x(top), ax.y(top), "gray", 1, "4,4");
    std::map<std::pair<int, double>, int> counts;
    for (const auto &p : points) {
        counts[p]++;
    }
    for (const auto &[p, n] : counts) {
        bool match = std::abs(p.second - p.first) < 1e-9;
        c.circle(ax.x(p.first), ax.y(p.second), 3 + std::log2(1.0 + n), match ? "steelblue" : "crimson");
    }
    return c.str();
}

std::string network_cut_svg(const TensorNetwork &tn, const BoundaryRegion &region, const MinCutResult &cut,
                            int n_links) {
    Canvas c(420, 440);
    constexpr double cx = 210, cy = 230, radius = 150;
    int n = static_cast<int>(tn.nodes.size());
    bool hub = n > 2;
    auto pos = [&](int v) {
        if (hub && v == 0) {
            return std::pair{cx, cy};
        }
        int ring = hub ? n - 1 : n;
        int slot = hub ? v - 1 : v;
        double a = 2 * std::numbers::pi * slot / std::max(ring, 1) - std::numbers::pi / 2;
        return n == 1 ? std::pair{cx, cy} : std::pair{cx + radius * std::cos(a), cy + radius * std::sin(a)};
    };
    std::vector<bool> is_cut(static_cast<std::size_t>(n_links) + tn.dangling.size(), false);
    for (int id : cut.cut_edges) {
        is_cut[static_cast<std::size_t>(id)] = true;
    }
    c.text(cx, 24, "min cut = " + std::to_string(cut.value), 14);
    for (int i = 0; i < n_links; i++) {
        const Link &l = tn.links[static_cast<std::size_t>(i)];
        auto [x1, y1] = pos(l.a.node);
        auto [x2, y2] = pos(l.b.node);
        bool hit = is_cut[static_cast<std::size_t>(i)];
        c.line(x1, y1, x2, y2, hit ? "crimson" : "black", hit ? 3 : 1.5, hit ? "6,3" : "");
    }
    std::vector<int> in_region(static_cast<std::size_t>(n), 0), legs_cut(static_cast<std::size_t>(n), 0);
    for (int idx : region.indices) {
        in_region[static_cast<std::size_t>(tn.dangling[static_cast<std::size_t>(idx)].node)]++;
    }
    for (std::size_t i = 0; i < tn.dangling.size(); i++) {
        if (is_cut[static_cast<std::size_t>(n_links) + i]) {
            legs_cut[static_cast<std::size_t>(tn.dangling[i].node)]++;
        }
    }
    for (int v = 0; v < n; v++) {
        auto [x, y] = pos(v);
        bool any = in_region[static_cast<std::size_t>(v)] > 0;
        c.circle(x, y, 18, any ? "goldenrod" : "steelblue");
        c.text(x, y + 4, tn.nodes[static_cast<std::size_t>(v)].id, 10);
        c.text(x, y + 32,
               std::to_string(in_region[static_cast<std::size_t>(v)]) + " in A, " +
                   std::to_string(legs_cut[static_cast<std::size_t>(v)]) + " legs cut",
               10);
    }
    return c.str();
}

std::string graph_svg(const Graph &graph, const std::string &title) {
    Canvas c(320, 340);
    constexpr double cx = 160, cy = 180, radius = 110;
    int n = graph.n_vertices();
    auto pos = [&](int v) {
        double a = 2 * std::numbers::pi * v / n - std::numbers::pi / 2;
        return std::pair{cx + radius * std::cos(a), cy + radius * std::sin(a)};
    };
    c.text(cx, 24, title, 14);
    for (auto [a, b] : graph.edges()) {
        auto [x1, y1] = pos(a);
        auto [x2, y2] = pos(b);
        c.line(x1, y1, x2, y2, "black", 1.5);
    }
    for (int v = 0; v < n; v++) {
        auto [x, y] = pos(v);
        c.circle(x, y, 13, "steelblue");
        c.text(x, y + 4, std::to_string(v));
    }
    return c.str();
}

}  // namespace holoee::cli
