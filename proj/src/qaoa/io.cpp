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
#include "quav/qaoa/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "quav/error.hpp"

namespace quav::qaoa {

namespace {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string loss_trace_csv(const LossTrace &trace) {
    std::string out = "step,loss,best_loss\n";
    for (std::size_t s = 0; s < trace.size(); ++s) {
        out += std::to_string(s) + "," + format_double(trace.loss[s]) + "," +
               format_double(trace.best_loss[s]) + "\n";
    }
    return out;
}

std::string params_to_text(const QaoaParams &params) {
    params.validate();
    std::string out = "layers=" + std::to_string(params.layers()) + "\n";
    for (int i = 0; i < params.layers(); ++i) {
        out += "gamma." + std::to_string(i) + "=" +
               format_double(params.gammas[static_cast<std::size_t>(i)]) + "\n";
    }
    for (int i = 0; i < params.layers(); ++i) {
        out += "beta." + std::to_string(i) + "=" +
               format_double(params.betas[static_cast<std::size_t>(i)]) + "\n";
    }
    return out;
}

QaoaParams params_from_text(const std::string &text) {
    std::map<std::string, double> values;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": missing '='");
        }
        const std::string key = line.substr(0, eq);
        const std::string val = line.substr(eq + 1);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(val, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != val.size()) {
            throw Error(ErrorCode::ParseError,
                        "line " + std::to_string(lineno) + ": bad number '" + val + "'");
        }
        if (!values.emplace(key, v).second) {
            throw Error(ErrorCode::ParseError,
                        "line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        }
    }
    const auto layers_it = values.find("layers");
    if (layers_it == values.end() || layers_it->second < 1 ||
        layers_it->second != static_cast<int>(layers_it->second)) {
        throw Error(ErrorCode::ParseError, "missing or invalid 'layers'");
    }
    const int k = static_cast<int>(layers_it->second);
    QaoaParams p = QaoaParams::zeros(k);
    for (int i = 0; i < k; ++i) {
        for (auto [prefix, dest] : {std::pair{"gamma.", &p.gammas}, std::pair{"beta.", &p.betas}}) {
            const std::string key = prefix + std::to_string(i);
            const auto it = values.find(key);
            if (it == values.end()) {
                throw Error(ErrorCode::ParseError, "missing '" + key + "'");
            }
            (*dest)[static_cast<std::size_t>(i)] = it->second;
        }
    }
    if (values.size() != static_cast<std::size_t>(1 + 2 * k)) {
        throw Error(ErrorCode::ParseError, "unexpected keys in parameter snapshot");
    }
    return p;
}

void write_text_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        throw Error(ErrorCode::IoError, "cannot write " + path.string());
    }
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace quav::qaoa
