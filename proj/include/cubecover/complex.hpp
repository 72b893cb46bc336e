#pragma once

#include "cubecover/hyperplanes.hpp"
#include "cubecover/median_graph.hpp"

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace cubecover {

/// A validated median graph with its hyperplanes, relation table, per-component
/// dimensions and carrier distances. Immutable; share via shared_ptr.
class CubeComplex {
public:
    explicit CubeComplex(MedianGraph graph);

    CubeComplex(const CubeComplex&) = delete;
    CubeComplex& operator=(const CubeComplex&) = delete;

    const MedianGraph& graph() const { return graph_; }
    const HyperplaneSet& hyperplanes() const { return hs_; }
    const RelationTable& relations() const { return rel_; }

    std::size_t vertex_count() const { return graph_.vertex_count(); }
    std::size_t hyperplane_count() const { return hs_.size(); }
    std::size_t component_count() const { return graph_.component_count(); }

    std::uint32_t dimension() const { return dimension_; }
    std::uint32_t dimension(ComponentId c) const { return component_dims_[c]; }

    /// d(h^(0), k^(0)); kInfinity across components.
    std::uint32_t carrier_distance(HyperplaneId h, HyperplaneId k) const {
        return carrier_dist_[static_cast<std::size_t>(h) * hs_.size() + k];
    }
    /// d(x, h^(0)) for any vertex x.
    std::uint32_t vertex_carrier_distance(Vertex x, HyperplaneId h) const {
        return vertex_carrier_dist_[static_cast<std::size_t>(h) * graph_.vertex_count() + x];
    }
    /// d(base, h^(0)) for the base of h's component.
    std::uint32_t base_distance(HyperplaneId h) const {
        return vertex_carrier_distance(graph_.base(hs_[h].component), h);
    }

    /// The neighbor of v across h, if v ∈ h^(0).
    std::optional<Vertex> across(Vertex v, HyperplaneId h) const;

    /// Hyperplanes of the edges at v, ascending.
    std::vector<HyperplaneId> incident(Vertex v) const;

    /// The vertex of component c whose separating set from the base is exactly `ones`.
    std::optional<Vertex> vertex_with_separators(ComponentId c, std::span<const HyperplaneId> ones) const;

    /// H(base, x), ascending.
    std::vector<HyperplaneId> base_separators(Vertex x) const;

private:
    MedianGraph graph_;
    HyperplaneSet hs_;
    RelationTable rel_;
    std::uint32_t dimension_ = 0;
    std::vector<std::uint32_t> component_dims_;
    std::vector<std::uint32_t> carrier_dist_;
    std::vector<std::uint32_t> vertex_carrier_dist_;
    std::map<VertexSet, Vertex> by_signature_;
};

using ComplexPtr = std::shared_ptr<const CubeComplex>;

inline ComplexPtr make_complex(MedianGraph g) { return std::make_shared<const CubeComplex>(std::move(g)); }

}  // namespace cubecover
