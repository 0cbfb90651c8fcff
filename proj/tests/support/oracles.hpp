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
// Independent reference implementations used as test oracles. Nothing here
// calls into the library code it is meant to check.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <limits>
#include <random>
#include <tuple>
#include <vector>

#include "quav/geo/polygon.hpp"
#include "quav/qsim/state_vector.hpp"

namespace quav::testing {

using Cplx = std::complex<double>;
using geo::Point2;

// ---------------------------------------------------------------- geometry

/// Winding number of a closed ring around p (nonzero = inside).
inline int winding_number(const Point2 &p, const std::vector<Point2> &ring) {
    int wn = 0;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 &a = ring[i];
        const Point2 &b = ring[(i + 1) % n];
        const double side = (b.x - a.x) * (p.y - a.y) - (p.x - a.x) * (b.y - a.y);
        if (a.y <= p.y) {
            if (b.y > p.y && side > 0) {
                ++wn;
            }
        } else if (b.y <= p.y && side < 0) {
            --wn;
        }
    }
    return wn;
}

inline bool inside_by_winding(const Point2 &p, const std::vector<Point2> &ring) {
    return winding_number(p, ring) != 0;
}

/// Exact point-to-segment distance by clamped projection.
inline double point_to_segment(const Point2 &p, const Point2 &a, const Point2 &b) {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double t = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

inline Point2 lerp(const Point2 &a, const Point2 &b, double t) {
    return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
}

/// True when any of `samples` evenly spaced points of [a, b] is inside the ring.
inline bool sampled_segment_hits(const Point2 &a, const Point2 &b,
                                 const std::vector<Point2> &ring, int samples) {
    for (int k = 0; k <= samples; ++k) {
        if (inside_by_winding(lerp(a, b, static_cast<double>(k) / samples), ring)) {
            return true;
        }
    }
    return false;
}

/// Minimum distance between [a, b] and the ring boundary from dense samples
/// on both sets, each measured exactly to the other set.
inline double sampled_segment_ring_distance(const Point2 &a, const Point2 &b,
                                            const std::vector<Point2> &ring, int samples) {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = ring.size();
    for (int k = 0; k <= samples; ++k) {
        const Point2 p = lerp(a, b, static_cast<double>(k) / samples);
        for (std::size_t i = 0; i < n; ++i) {
            best = std::min(best, point_to_segment(p, ring[i], ring[(i + 1) % n]));
        }
    }
    const int per_edge = std::max(1, samples / static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (int k = 0; k <= per_edge; ++k) {
            const Point2 q = lerp(ring[i], ring[(i + 1) % n], static_cast<double>(k) / per_edge);
            best = std::min(best, point_to_segment(q, a, b));
        }
    }
    return best;
}

/// Star-shaped simple polygon with `k` vertices around `center`.
inline geo::ObstaclePolygon random_star_polygon(std::mt19937_64 &rng, const Point2 &center,
                                                double r_min, double r_max, int k) {
    std::uniform_real_distribution<double> radius(r_min, r_max);
    std::uniform_real_distribution<double> jitter(-0.3, 0.3);
    geo::ObstaclePolygon poly;
    for (int i = 0; i < k; ++i) {
        const double ang = 2.0 * std::numbers::pi * (i + 0.5 + jitter(rng)) / k;
        const double r = radius(rng);
        poly.vertices.push_back({center.x + r * std::cos(ang), center.y + r * std::sin(ang)});
    }
    return poly;
}

/// Convex polygon: vertices on an ellipse at sorted random angles.
inline geo::ObstaclePolygon random_convex_polygon(std::mt19937_64 &rng, const Point2 &center,
                                                  double rx, double ry, int k) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::vector<double> angles(static_cast<std::size_t>(k));
    for (auto &a : angles) {
        a = angle(rng);
    }
    std::sort(angles.begin(), angles.end());
    geo::ObstaclePolygon poly;
    for (double a : angles) {
        poly.vertices.push_back({center.x + rx * std::cos(a), center.y + ry * std::sin(a)});
    }
    return poly;
}

// ---------------------------------------------------------------- quantum

/// Dense square matrix in row-major order.
struct Matrix {
    std::size_t dim{0};
    std::vector<Cplx> a;

    explicit Matrix(std::size_t d) : dim(d), a(d * d) {}
    static Matrix identity(std::size_t d) {
        Matrix m(d);
        for (std::size_t i = 0; i < d; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }
    Cplx &operator()(std::size_t r, std::size_t c) { return a[r * dim + c]; }
    const Cplx &operator()(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
};

inline Matrix kron(const Matrix &x, const Matrix &y) {
    Matrix out(x.dim * y.dim);
    for (std::size_t i = 0; i < x.dim; ++i) {
        for (std::size_t j = 0; j < x.dim; ++j) {
            for (std::size_t k = 0; k < y.dim; ++k) {
                for (std::size_t l = 0; l < y.dim; ++l) {
                    out(i * y.dim + k, j * y.dim + l) = x(i, j) * y(k, l);
                }
            }
        }
    }
    return out;
}

inline Matrix add(const Matrix &x, const Matrix &y) {
    Matrix out(x.dim);
    for (std::size_t i = 0; i < x.a.size(); ++i) {
        out.a[i] = x.a[i] + y.a[i];
    }
    return out;
}

inline Matrix multiply(const Matrix &x, const Matrix &y) {
    Matrix out(x.dim);
    for (std::size_t i = 0; i < x.dim; ++i) {
        for (std::size_t k = 0; k < x.dim; ++k) {
            const Cplx v = x(i, k);
            if (v == Cplx{}) {
                continue;
            }
            for (std::size_t j = 0; j < x.dim; ++j) {
                out(i, j) += v * y(k, j);
            }
        }
    }
    return out;
}

inline Matrix mat2(Cplx a, Cplx b, Cplx c, Cplx d) {
    Matrix m(2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

/// Kronecker product over all qubits, factor q taken from `ops[q]`, with
/// qubit 0 the least significant index bit (rightmost factor).
inline Matrix kron_all(const std::vector<Matrix> &ops) {
    Matrix out = ops.back();
    for (std::size_t q = ops.size() - 1; q-- > 0;) {
        out = kron(out, ops[q]);
    }
    return out;
}

/// Full 2^n x 2^n matrix of one gate, built from 2x2 factors.
inline Matrix gate_matrix(const qsim::Gate &g, int n) {
    using qsim::GateKind;
    const auto dim2 = Matrix::identity(2);
    std::vector<Matrix> ops(static_cast<std::size_t>(n), dim2);
    const double h = 1.0 / std::sqrt(2.0);
    const double c = std::cos(g.angle / 2);
    const double s = std::sin(g.angle / 2);
    const Cplx i1{0.0, 1.0};
    const auto t = static_cast<std::size_t>(g.target);
    switch (g.kind) {
    case GateKind::H:
        ops[t] = mat2(h, h, h, -h);
        return kron_all(ops);
    case GateKind::Rx:
        ops[t] = mat2(c, -i1 * s, -i1 * s, c);
        return kron_all(ops);
    case GateKind::Rz:
        ops[t] = mat2(std::exp(-i1 * (g.angle / 2)), 0.0, 0.0, std::exp(i1 * (g.angle / 2)));
        return kron_all(ops);
    case GateKind::CNOT: {
        // |0><0|_c (x) I + |1><1|_c (x) X_t
        auto p0 = ops;
        auto p1 = ops;
        p0[static_cast<std::size_t>(g.control)] = mat2(1.0, 0.0, 0.0, 0.0);
        p1[static_cast<std::size_t>(g.control)] = mat2(0.0, 0.0, 0.0, 1.0);
        p1[t] = mat2(0.0, 1.0, 1.0, 0.0);
        return add(kron_all(p0), kron_all(p1));
    }
    }
    return Matrix::identity(std::size_t{1} << n);
}

/// Product of all gate matrices (last gate leftmost).
inline Matrix circuit_unitary(const std::vector<qsim::Gate> &gates, int n) {
    Matrix u = Matrix::identity(std::size_t{1} << n);
    for (const auto &g : gates) {
        u = multiply(gate_matrix(g, n), u);
    }
    return u;
}

/// First column of U: U|0...0>.
inline std::vector<Cplx> apply_to_zero(const Matrix &u) {
    std::vector<Cplx> out(u.dim);
    for (std::size_t r = 0; r < u.dim; ++r) {
        out[r] = u(r, 0);
    }
    return out;
}

/// Eigenvalue of sum_i w_i Z_i + sum J_ij Z_i Z_j on basis state b.
inline double ising_energy(std::uint64_t b, const std::vector<double> &w,
                           const std::vector<std::tuple<int, int, double>> &zz) {
    auto z = [b](int q) { return ((b >> q) & 1U) ? -1.0 : 1.0; };
    double e = 0.0;
    for (std::size_t q = 0; q < w.size(); ++q) {
        e += w[q] * z(static_cast<int>(q));
    }
    for (const auto &[i, j, s] : zz) {
        e += s * z(i) * z(j);
    }
    return e;
}

} // namespace quav::testing
