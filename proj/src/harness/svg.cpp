// Copyright 2026 The QUAV Planner Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "quav/harness/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "quav/qaoa/io.hpp"

namespace quav::harness {

using geo::Point2;

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string points_attr(const std::vector<Point2> &pts) {
    std::string out;
    for (const auto &p : pts) {
        out += (out.empty() ? "" : " ") + num(p.x) + "," + num(p.y);
    }
    return out;
}

std::string escape(const std::string &text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

} // namespace

std::string path_svg(const PlanResult &r, const Scenario &s) {
    std::vector<Point2> all{s.start, s.end};
    all.insert(all.end(), r.path.begin(), r.path.end());
    for (const auto &o : s.obstacles) {
        all.insert(all.end(), o.vertices.begin(), o.vertices.end());
    }
    const auto box = geo::bounds_of(all);
    const double span = std::max({box.max.x - box.min.x, box.max.y - box.min.y, 1.0});
    const double pad = 0.05 * span;
    const double w = box.max.x - box.min.x + 2 * pad;
    const double h = box.max.y - box.min.y + 2 * pad;
    // Local frame: origin at the top-left corner, y pointing down.
    auto local = [&](const Point2 &p) {
        return Point2{p.x - box.min.x + pad, box.max.y + pad - p.y};
    };
    auto local_all = [&](const std::vector<Point2> &pts) {
        std::vector<Point2> out;
        for (const auto &p : pts) {
            out.push_back(local(p));
        }
        return out;
    };
    const double stroke = span / 300.0;

    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + num(w) + " " + num(h) +
           "\" width=\"800\" height=\"" + num(800.0 * h / w) + "\">\n";
    svg += "  <title>" + escape(s.name) + " (" + std::string(to_string(r.planner)) +
           ", seed " + std::to_string(r.seed) + ")</title>\n";
    svg += "  <rect x=\"0\" y=\"0\" width=\"" + num(w) + "\" height=\"" + num(h) +
           "\" fill=\"white\"/>\n";
    for (const auto &o : s.obstacles) {
        svg += "  <polygon class=\"obstacle\" points=\"" + points_attr(local_all(o.vertices)) +
               "\" fill=\"#c0504d\" fill-opacity=\"0.6\" stroke=\"#7f2a28\" stroke-width=\"" +
               num(stroke) + "\"/>\n";
    }
    if (r.path.size() >= 2) {
        svg += "  <polyline class=\"path\" points=\"" + points_attr(local_all(r.path)) +
               "\" fill=\"none\" stroke=\"#1f4e99\" stroke-width=\"" + num(2 * stroke) +
               "\" stroke-dasharray=\"" + num(6 * stroke) + " " + num(3 * stroke) + "\"/>\n";
    }
    const auto a = local(s.start);
    const auto b = local(s.end);
    svg += "  <circle class=\"start\" cx=\"" + num(a.x) + "\" cy=\"" + num(a.y) + "\" r=\"" +
           num(4 * stroke) + "\" fill=\"#2e8b57\"/>\n";
    svg += "  <circle class=\"end\" cx=\"" + num(b.x) + "\" cy=\"" + num(b.y) + "\" r=\"" +
           num(4 * stroke) + "\" fill=\"#d4a017\"/>\n";
    svg += "</svg>\n";
    return svg;
}

std::string loss_svg(const qaoa::LossTrace &trace, double ground_energy) {
    constexpr double kW = 640.0;
    constexpr double kH = 400.0;
    constexpr double kMargin = 50.0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (double v : trace.loss) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (std::isfinite(ground_energy)) {
        lo = std::min(lo, ground_energy);
        hi = std::max(hi, ground_energy);
    }
    if (!(hi > lo)) {
        lo -= 1.0;
        hi += 1.0;
    }
    const double steps = std::max<double>(1.0, static_cast<double>(trace.size()) - 1.0);
    auto at = [&](double step, double v) {
        return Point2{kMargin + (kW - 2 * kMargin) * step / steps,
                      kH - kMargin - (kH - 2 * kMargin) * (v - lo) / (hi - lo)};
    };
    auto curve = [&](const std::vector<double> &values) {
        std::vector<Point2> pts;
        for (std::size_t i = 0; i < values.size(); ++i) {
            pts.push_back(at(static_cast<double>(i), values[i]));
        }
        return points_attr(pts);
    };

    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + num(kW) + " " + num(kH) +
           "\" width=\"" + num(kW) + "\" height=\"" + num(kH) + "\">\n";
    svg += "  <rect x=\"0\" y=\"0\" width=\"" + num(kW) + "\" height=\"" + num(kH) +
           "\" fill=\"white\"/>\n";
    svg += "  <g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
    svg += "    <line x1=\"" + num(kMargin) + "\" y1=\"" + num(kH - kMargin) + "\" x2=\"" +
           num(kW - kMargin) + "\" y2=\"" + num(kH - kMargin) + "\"/>\n";
    svg += "    <line x1=\"" + num(kMargin) + "\" y1=\"" + num(kMargin) + "\" x2=\"" + num(kMargin) +
           "\" y2=\"" + num(kH - kMargin) + "\"/>\n";
    svg += "  </g>\n";
    svg += "  <g font-family=\"sans-serif\" font-size=\"12\">\n";
    svg += "    <text x=\"" + num(kW / 2) + "\" y=\"" + num(kH - 15) +
           "\" text-anchor=\"middle\">optimization step</text>\n";
    svg += "    <text x=\"" + num(kMargin - 5) + "\" y=\"" + num(kMargin) +
           "\" text-anchor=\"end\">" + num(hi) + "</text>\n";
    svg += "    <text x=\"" + num(kMargin - 5) + "\" y=\"" + num(kH - kMargin) +
           "\" text-anchor=\"end\">" + num(lo) + "</text>\n";
    svg += "    <text x=\"" + num(kW - kMargin) + "\" y=\"" + num(kH - kMargin + 15) +
           "\" text-anchor=\"end\">" + std::to_string(trace.size() > 0 ? trace.size() - 1 : 0) +
           "</text>\n";
    svg += "  </g>\n";
    if (std::isfinite(ground_energy)) {
        const auto y = at(0, ground_energy).y;
        svg += "  <line class=\"ground\" x1=\"" + num(kMargin) + "\" y1=\"" + num(y) + "\" x2=\"" +
               num(kW - kMargin) + "\" y2=\"" + num(y) +
               "\" stroke=\"gray\" stroke-dasharray=\"2 3\"/>\n";
    }
    if (trace.size() > 0) {
        svg += "  <polyline class=\"loss\" points=\"" + curve(trace.loss) +
               "\" fill=\"none\" stroke=\"#1f4e99\" stroke-width=\"1.5\"/>\n";
        svg += "  <polyline class=\"best\" points=\"" + curve(trace.best_loss) +
               "\" fill=\"none\" stroke=\"#c0504d\" stroke-width=\"1.5\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

std::vector<std::filesystem::path> emit_plot_svg(const PlanResult &r, const Scenario &s,
                                                 const std::filesystem::path &file) {
    std::vector<std::filesystem::path> written{file};
    qaoa::write_text_file(file, path_svg(r, s));
    if (r.trace) {
        auto loss_file = file;
        loss_file.replace_filename(file.stem().string() + "_loss.svg");
        qaoa::write_text_file(loss_file, loss_svg(*r.trace, r.ground_energy));
        written.push_back(loss_file);
    }
    return written;
}

} // namespace quav::harness
