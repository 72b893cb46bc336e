#pragma once

#include "cubecover/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cubecover {

using Vertex = std::uint32_t;
using ComponentId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
    Vertex u;  // u < v
    Vertex v;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Unvalidated input graph. Components are indexed in order of their smallest vertex id;
/// `base` optionally overrides the base vertex of a component.
struct RawGraph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::map<ComponentId, Vertex> base;
};

/// A finite graph each of whose components satisfies the median axiom, with one base
/// vertex per component. Immutable after validation.
class MedianGraph {
public:
    static constexpr std::uint32_t kInfinity = UINT32_MAX;

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }

    /// Neighbors of v as (neighbor, edge id) pairs, sorted by neighbor.
    std::span<const std::pair<Vertex, EdgeId>> neighbors(Vertex v) const { return adjacency_[v]; }
    std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

    std::size_t component_count() const { return component_vertices_.size(); }
    ComponentId component(Vertex v) const { return component_of_[v]; }
    std::span<const Vertex> component_vertices(ComponentId c) const { return component_vertices_[c]; }
    Vertex base(ComponentId c) const { return bases_[c]; }
    Vertex base_of(Vertex v) const { return bases_[component_of_[v]]; }

    ExtendedDistance distance(Vertex x, Vertex y) const;
    /// Raw distance; kInfinity across components.
    std::uint32_t dist(Vertex x, Vertex y) const { return dist_[static_cast<std::size_t>(x) * vertex_count() + y]; }
    bool same_component(Vertex x, Vertex y) const { return component_of_[x] == component_of_[y]; }

    /// v lies on some geodesic from x to y.
    bool between(Vertex x, Vertex v, Vertex y) const {
        return same_component(x, v) && same_component(v, y) && dist(x, v) + dist(v, y) == dist(x, y);
    }

    /// The unique median of x, y, z. Throws PreconditionError across components.
    Vertex median(Vertex x, Vertex y, Vertex z) const;

    /// Interval I(x, y), sorted.
    std::vector<Vertex> interval(Vertex x, Vertex y) const;

    /// Edge id joining u and v, if adjacent.
    std::optional<EdgeId> edge_between(Vertex u, Vertex v) const;

    RawGraph to_raw() const;

    friend MedianGraph validate_median(const RawGraph& raw);
    friend MedianGraph make_trusted_median_graph(const RawGraph& raw);

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<Vertex, EdgeId>>> adjacency_;
    std::vector<ComponentId> component_of_;
    std::vector<std::vector<Vertex>> component_vertices_;
    std::vector<Vertex> bases_;
    std::vector<std::uint32_t> dist_;
};

/// Checks simplicity and the median axiom on every component (exhaustively over triples).
/// Throws InvalidInput for malformed graphs and NotMedianError with a counterexample triple.
MedianGraph validate_median(const RawGraph& raw);

/// Builds the structure without the cubic median check. Only for graphs already known to
/// be median (e.g. ones rebuilt from validated data); still rejects malformed input.
MedianGraph make_trusted_median_graph(const RawGraph& raw);

/// B is convex iff I(x, y) ⊆ B for all x, y in B. Throws PreconditionError when B is empty
/// or spans several components.
bool is_convex(const MedianGraph& g, std::span<const Vertex> set);

}  // namespace cubecover
