#pragma once

#include "cubecover/complex.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cubecover {

/// The quotient X_K of a complex by a hyperplane subset K: vertices are classes of equal
/// sides over K, adjacent when exactly one K-hyperplane separates them.
struct QuotientResult {
    ComplexPtr complex;
    std::vector<Vertex> vertex_map;                            // original vertex -> class
    std::vector<HyperplaneId> kept;                            // K, ascending
    std::vector<std::optional<HyperplaneId>> hyperplane_map;   // original -> quotient (K only)
    std::vector<HyperplaneId> preimage;                        // quotient -> original
};

/// Quotient by K. Classes are numbered by their smallest original vertex, so component c of
/// the quotient is the image of component c, and its base is the image of the original base.
QuotientResult quotient(const CubeComplex& cx, std::span<const HyperplaneId> kept);

/// A finite system of hyperplanes given by its pairwise relation table, local ids 0..n-1.
/// Every hyperplane is oriented so that the all-minus choice is its base orientation.
class Pocset {
public:
    Pocset(std::size_t n, std::vector<Relation> table);

    /// The hyperplanes of component c, in ascending global id; `priority` holds
    /// d(base, carrier) for the backtracking order.
    static Pocset of_component(const CubeComplex& cx, ComponentId c);

    std::size_t size() const { return n_; }
    Relation relation(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }
    std::span<const std::uint32_t> priority() const { return priority_; }

    /// Whether choosing `plus_i` for i and `plus_j` for j gives intersecting halfspaces.
    bool compatible(std::size_t i, bool plus_i, std::size_t j, bool plus_j) const;

private:
    std::size_t n_;
    std::vector<Relation> table_;
    std::vector<std::uint32_t> priority_;
};

/// A choice of side per hyperplane (1 = plus).
using Ultrafilter = std::vector<std::uint8_t>;

/// All pairwise-consistent orientations, by forward-checking backtracking in ascending
/// priority; returned in lexicographic order.
std::vector<Ultrafilter> enumerate_ultrafilters(const Pocset& p);

/// Graph on ultrafilters differing in exactly one hyperplane. The base is the all-minus
/// ultrafilter when present.
RawGraph dual_graph(std::span<const Ultrafilter> ultrafilters);

/// α_v restricted to the hyperplanes of v's component, in ascending id.
Ultrafilter vertex_orientation(const CubeComplex& cx, Vertex v);

/// Gate of o in a convex set C via the side formula: h is crossed iff C lies entirely
/// on the side of h not containing o. Throws PreconditionError for an empty, non-convex
/// or other-component C.
Vertex gate(const CubeComplex& cx, Vertex o, std::span<const Vertex> set);

/// The same gate as the unique nearest point of C to o.
Vertex gate_by_distance(const CubeComplex& cx, Vertex o, std::span<const Vertex> set);

}  // namespace cubecover
