#pragma once

// Shared instances, random samplers and brute-force oracles for the test suites. The
// oracles deliberately avoid the library's own algorithms.

#include "cubecover/complex.hpp"
#include "cubecover/cube_space.hpp"
#include "cubecover/generators.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <string>
#include <vector>

namespace testing {

using namespace cubecover;

inline ComplexPtr complex_of(const RawGraph& raw) { return make_complex(validate_median(raw)); }

/// Tripod: leaf a = 0, center c = 1, leaves b = 2, d = 3; base a.
inline RawGraph tripod() {
    RawGraph g;
    g.vertex_count = 4;
    g.edges = {{0, 1}, {1, 2}, {1, 3}};
    return g;
}

inline RawGraph disjoint_union(const RawGraph& a, const RawGraph& b) {
    RawGraph g = a;
    const auto shift = static_cast<Vertex>(a.vertex_count);
    g.vertex_count += b.vertex_count;
    for (auto [u, v] : b.edges) g.edges.emplace_back(u + shift, v + shift);
    return g;
}

struct Named {
    std::string name;
    RawGraph raw;
};

/// Small instances covering trees, grids, cubes, gluings and random duals.
inline std::vector<Named> small_instances() {
    std::vector<Named> out{
        {"single vertex", path_graph(1)},
        {"P5", path_graph(5)},
        {"tripod", tripod()},
        {"square", grid_graph(2, 2)},
        {"grid 3x3", grid_graph(3, 3)},
        {"grid 4x5", grid_graph(4, 5)},
        {"3-cube", hypercube_grid_graph(2, 3)},
        {"3x3x3 grid", hypercube_grid_graph(3, 3)},
        {"tree 3,2", tree_graph(3, 2)},
        {"tree 2,3", tree_graph(2, 3)},
        {"staircase 3", staircase_graph(3)},
        {"strip_gluing 4,2", strip_gluing_graph(4, 2)},
        {"tree + grid", disjoint_union(tree_graph(2, 2), grid_graph(3, 3))},
    };
    for (std::uint64_t seed = 1; seed <= 6; ++seed)
        out.push_back({"random pocset " + std::to_string(seed), random_pocset_graph(seed)});
    return out;
}

/// All-pairs BFS on the raw edge list; UINT32_MAX across components.
inline std::vector<std::vector<std::uint32_t>> bfs_oracle(const RawGraph& raw) {
    const std::size_t n = raw.vertex_count;
    std::vector<std::vector<Vertex>> adj(n);
    for (auto [u, v] : raw.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, UINT32_MAX));
    for (Vertex s = 0; s < n; ++s) {
        std::deque<Vertex> q{s};
        d[s][s] = 0;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop_front();
            for (Vertex w : adj[u])
                if (d[s][w] == UINT32_MAX) {
                    d[s][w] = d[s][u] + 1;
                    q.push_back(w);
                }
        }
    }
    return d;
}

/// Djoković–Winkler classes: edges xy, uv related iff d(x,u) + d(y,v) ≠ d(x,v) + d(y,u).
/// On median graphs these are exactly the hyperplanes. Returns a class label per edge of g.
inline std::vector<std::size_t> theta_classes(const MedianGraph& g) {
    const auto& es = g.edges();
    std::vector<std::size_t> label(es.size(), SIZE_MAX);
    std::size_t next = 0;
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (label[i] != SIZE_MAX) continue;
        label[i] = next;
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const Edge &a = es[i], &b = es[j];
            if (!g.same_component(a.u, b.u)) continue;
            if (g.dist(a.u, b.u) + g.dist(a.v, b.v) != g.dist(a.u, b.v) + g.dist(a.v, b.u)) label[j] = next;
        }
        ++next;
    }
    return label;
}

/// Minus side of the hyperplane through edge e: vertices closer to the base-side endpoint.
inline std::vector<char> minus_side_oracle(const MedianGraph& g, EdgeId e) {
    Edge edge = g.edge(e);
    const Vertex base = g.base_of(edge.u);
    Vertex near = edge.u, far = edge.v;
    if (g.dist(base, far) < g.dist(base, near)) std::swap(near, far);
    std::vector<char> minus(g.vertex_count(), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.same_component(v, near) && g.dist(v, near) < g.dist(v, far)) minus[v] = 1;
    return minus;
}

inline Rational random_fraction(std::mt19937_64& rng, bool allow_zero_one) {
    for (;;) {
        const unsigned long den = 1 + rng() % 64;
        const unsigned long num = rng() % (den + 1);
        Rational q(num, den);
        q.canonicalize();
        if (allow_zero_one || (sgn(q) > 0 && q < 1)) return q;
    }
}

/// A random point of the cube realization: a vertex and a random crossing set of
/// hyperplanes leaving it away from the base, with coordinates of denominator ≤ 64.
inline CubePoint random_cube_point(const CubeComplex& cx, std::mt19937_64& rng) {
    const Vertex v = static_cast<Vertex>(rng() % cx.vertex_count());
    std::vector<HyperplaneId> up;
    for (HyperplaneId h : cx.incident(v))
        if (!cx.hyperplanes().on_plus_side(h, v)) up.push_back(h);
    std::shuffle(up.begin(), up.end(), rng);
    CubePoint p{v, {}};
    std::vector<HyperplaneId> chosen;
    for (HyperplaneId h : up) {
        if (rng() % 3 == 0) continue;
        if (std::all_of(chosen.begin(), chosen.end(), [&](HyperplaneId k) { return cx.relations().cross(h, k); })) {
            chosen.push_back(h);
            p.frac.emplace(h, random_fraction(rng, false));
        }
    }
    return p;
}

/// A random finitely supported point of one component, values in [0,1].
inline FinSupportPoint random_point(const CubeComplex& cx, std::mt19937_64& rng, ComponentId c, std::size_t max_support = 6) {
    FinSupportPoint p;
    p.component = c;
    const auto ids = cx.hyperplanes().in_component(c);
    if (ids.empty()) return p;
    const std::size_t k = rng() % (std::min(max_support, ids.size()) + 1);
    for (std::size_t i = 0; i < k; ++i) p.set(ids[rng() % ids.size()], random_fraction(rng, true));
    return p;
}

}  // namespace testing
