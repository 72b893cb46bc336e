#include "cubecover/median_graph.hpp"

#include "cubecover/error.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace cubecover {


ExtendedDistance MedianGraph::distance(Vertex x, Vertex y) const {
    if (x >= vertex_count() || y >= vertex_count()) throw InvalidInput("vertex id out of range");
    const auto d = dist(x, y);
    return d == kInfinity ? ExtendedDistance::infinity() : ExtendedDistance(d);
}

Vertex MedianGraph::median(Vertex x, Vertex y, Vertex z) const {
    if (!same_component(x, y) || !same_component(y, z))
        throw PreconditionError("median of vertices in different components");
    for (Vertex v : component_vertices(component(x)))
        if (between(x, v, y) && between(y, v, z) && between(x, v, z)) return v;
    throw InternalError("validated graph has a triple without median");
}

std::vector<Vertex> MedianGraph::interval(Vertex x, Vertex y) const {
    std::vector<Vertex> out;
    if (!same_component(x, y)) return out;
    for (Vertex v : component_vertices(component(x)))
        if (between(x, v, y)) out.push_back(v);
    return out;
}

std::optional<EdgeId> MedianGraph::edge_between(Vertex u, Vertex v) const {
    const auto& nb = adjacency_[u];
    auto it = std::lower_bound(nb.begin(), nb.end(), std::pair<Vertex, EdgeId>{v, 0},
                               [](const auto& a, const auto& b) { return a.first < b.first; });
    if (it != nb.end() && it->first == v) return it->second;
    return std::nullopt;
}

RawGraph MedianGraph::to_raw() const {
    RawGraph raw;
    raw.vertex_count = vertex_count();
    for (const auto& e : edges_) raw.edges.emplace_back(e.u, e.v);
    for (ComponentId c = 0; c < component_count(); ++c) raw.base[c] = bases_[c];
    return raw;
}

MedianGraph make_trusted_median_graph(const RawGraph& raw) {
    const std::size_t n = raw.vertex_count;
    if (n >= MedianGraph::kInfinity) throw InvalidInput("too many vertices");

    std::set<Edge> edge_set;
    for (auto [a, b] : raw.edges) {
        if (a >= n || b >= n)
            throw InvalidInput("edge (" + std::to_string(a) + ", " + std::to_string(b) + ") out of range");
        if (a == b) throw InvalidInput("self-loop at vertex " + std::to_string(a));
        edge_set.insert(Edge{std::min(a, b), std::max(a, b)});
    }

    MedianGraph g;
    g.edges_.assign(edge_set.begin(), edge_set.end());
    g.adjacency_.assign(n, {});
    for (EdgeId e = 0; e < g.edges_.size(); ++e) {
        g.adjacency_[g.edges_[e].u].emplace_back(g.edges_[e].v, e);
        g.adjacency_[g.edges_[e].v].emplace_back(g.edges_[e].u, e);
    }
    for (auto& nb : g.adjacency_) std::sort(nb.begin(), nb.end());

    // Components in order of smallest vertex.
    g.component_of_.assign(n, MedianGraph::kInfinity);
    for (Vertex s = 0; s < n; ++s) {
        if (g.component_of_[s] != MedianGraph::kInfinity) continue;
        const auto c = static_cast<ComponentId>(g.component_vertices_.size());
        std::vector<Vertex> members{s};
        g.component_of_[s] = c;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (auto [w, e] : g.adjacency_[members[i]])
                if (g.component_of_[w] == MedianGraph::kInfinity) {
                    g.component_of_[w] = c;
                    members.push_back(w);
                }
        std::sort(members.begin(), members.end());
        g.component_vertices_.push_back(std::move(members));
        g.bases_.push_back(s);
    }
    for (auto [c, v] : raw.base) {
        if (c >= g.component_count())
            throw InvalidInput("base given for nonexistent component " + std::to_string(c));
        if (v >= n || g.component_of_[v] != c)
            throw InvalidInput("base vertex " + std::to_string(v) + " is not in component " + std::to_string(c));
        g.bases_[c] = v;
    }

    g.dist_.assign(n * n, MedianGraph::kInfinity);
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        auto* row = g.dist_.data() + static_cast<std::size_t>(s) * n;
        row[s] = 0;
        queue.assign(1, s);
        for (std::size_t i = 0; i < queue.size(); ++i) {
            const Vertex u = queue[i];
            for (auto [w, e] : g.adjacency_[u])
                if (row[w] == MedianGraph::kInfinity) {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
        }
    }
    return g;
}

MedianGraph validate_median(const RawGraph& raw) {
    MedianGraph g = make_trusted_median_graph(raw);
    std::vector<Vertex> ixy;
    for (ComponentId c = 0; c < g.component_count(); ++c) {
        const auto members = g.component_vertices(c);
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                const Vertex x = members[i], y = members[j];
                ixy.clear();
                for (Vertex v : members)
                    if (g.dist(x, v) + g.dist(v, y) == g.dist(x, y)) ixy.push_back(v);
                for (std::size_t k = j + 1; k < members.size(); ++k) {
                    const Vertex z = members[k];
                    std::size_t count = 0;
                    for (Vertex v : ixy)
                        if (g.dist(x, v) + g.dist(v, z) == g.dist(x, z) &&
                            g.dist(y, v) + g.dist(v, z) == g.dist(y, z) && ++count > 1)
                            break;
                    if (count != 1) throw NotMedianError({x, y, z}, count);
                }
            }
        }
    }
    return g;
}

bool is_convex(const MedianGraph& g, std::span<const Vertex> set) {
    if (set.empty()) throw PreconditionError("convexity of an empty set");
    std::vector<char> member(g.vertex_count(), 0);
    for (Vertex v : set) {
        if (v >= g.vertex_count()) throw InvalidInput("vertex id out of range");
        if (!g.same_component(v, set.front())) throw PreconditionError("set spans several components");
        member[v] = 1;
    }
    const auto comp = g.component_vertices(g.component(set.front()));
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            for (Vertex v : comp)
                if (!member[v] && g.between(set[i], v, set[j])) return false;
    return true;
}

}  // namespace cubecover
