#pragma once

#include "cubecover/median_graph.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace cubecover {

using HyperplaneId = std::uint32_t;
using VertexSet = boost::dynamic_bitset<>;

/// One hyperplane: an equivalence class of edges under the square-opposite relation,
/// with halfspaces oriented so the component's base vertex lies in `minus`.
struct Hyperplane {
    std::vector<EdgeId> edges;  // sorted
    ComponentId component = 0;
    VertexSet minus;    // h^-
    VertexSet plus;     // h^+
    VertexSet carrier;  // h^(0): endpoints of the edges of h
};

/// Hyperplanes of a median graph, ordered by smallest edge id.
class HyperplaneSet {
public:
    std::size_t size() const { return hyperplanes_.size(); }
    const Hyperplane& operator[](HyperplaneId h) const { return hyperplanes_[h]; }
    std::span<const Hyperplane> all() const { return hyperplanes_; }

    HyperplaneId of_edge(EdgeId e) const { return edge_class_[e]; }
    bool on_plus_side(HyperplaneId h, Vertex v) const { return hyperplanes_[h].plus.test(v); }

    /// Hyperplanes of component c, ascending.
    std::span<const HyperplaneId> in_component(ComponentId c) const { return by_component_[c]; }
    std::size_t component_count() const { return by_component_.size(); }

    friend HyperplaneSet compute_hyperplanes(const MedianGraph& g);

private:
    std::vector<Hyperplane> hyperplanes_;
    std::vector<HyperplaneId> edge_class_;
    std::vector<std::vector<HyperplaneId>> by_component_;
};

/// Union-find closure of the square-opposite relation; halfspaces by deleting each class.
/// Throws InternalError if deleting a class does not leave exactly two components.
HyperplaneSet compute_hyperplanes(const MedianGraph& g);

enum class Relation : std::uint8_t { equal, less, greater, opposite, cross, different_component };

const char* to_string(Relation r);

/// Classification of hyperplane pairs. `relation(h, k) == less` means h < k, i.e. h^- ⊊ k^-.
/// Dense storage up to kDenseLimit hyperplanes; above that pairs are classified on demand
/// from the halfspace bitsets.
class RelationTable {
public:
    static constexpr std::size_t kDenseLimit = std::size_t{1} << 14;

    RelationTable() = default;
    explicit RelationTable(const HyperplaneSet& hs);

    std::size_t size() const { return size_; }
    Relation operator()(HyperplaneId h, HyperplaneId k) const {
        return dense_.empty() ? classify(h, k) : dense_[static_cast<std::size_t>(h) * size_ + k];
    }
    bool less(HyperplaneId h, HyperplaneId k) const { return (*this)(h, k) == Relation::less; }
    bool cross(HyperplaneId h, HyperplaneId k) const { return (*this)(h, k) == Relation::cross; }
    bool opposite(HyperplaneId h, HyperplaneId k) const { return (*this)(h, k) == Relation::opposite; }

    /// {k : k < h}, ascending.
    std::span<const HyperplaneId> below(HyperplaneId h) const { return below_[h]; }
    /// {k : h < k}, ascending.
    std::span<const HyperplaneId> above(HyperplaneId h) const { return above_[h]; }

private:
    Relation classify(HyperplaneId h, HyperplaneId k) const;

    std::size_t size_ = 0;
    std::vector<Hyperplane> sparse_;  // halfspaces kept for on-demand classification
    std::vector<Relation> dense_;
    std::vector<std::vector<HyperplaneId>> below_;
    std::vector<std::vector<HyperplaneId>> above_;
};

/// Classifies a pair directly from halfspaces: exactly one of less/greater/opposite/cross
/// holds for distinct hyperplanes of one component.
Relation classify_pair(const Hyperplane& h, const Hyperplane& k, bool same);

/// H(x, y): hyperplanes with x and y on different sides, ascending.
/// Throws PreconditionError across components.
std::vector<HyperplaneId> separating(const MedianGraph& g, const HyperplaneSet& hs, Vertex x, Vertex y);

/// Largest number of pairwise-crossing hyperplanes incident to a common vertex of
/// component c (the top cube dimension); 0 for an edgeless component.
std::uint32_t component_dimension(const MedianGraph& g, const HyperplaneSet& hs, const RelationTable& rel,
                                  ComponentId c);

/// Maximum over components.
std::uint32_t dimension(const MedianGraph& g, const HyperplaneSet& hs, const RelationTable& rel);

}  // namespace cubecover
