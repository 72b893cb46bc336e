#pragma once

#include "cubecover/complex.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace cubecover {

using RankVector = std::vector<std::uint32_t>;

/// Rank vectors, predecessors and the 2-coloring of every hyperplane, computed per component.
struct ColoringAssignment {
    std::vector<RankVector> rank;
    std::vector<std::uint8_t> color;
    std::vector<std::vector<HyperplaneId>> predecessors;
    std::vector<HyperplaneId> kc;  // color-0 hyperplanes, ascending
};

/// Level n(h) of each h in K for the descending partition with parameter d ≥ 2:
/// K_{≥n+1} keeps the h in K_{≥n} lying above d pairwise-crossing members of K_{≥n}.
std::map<HyperplaneId, std::uint32_t> descend_partition(const RelationTable& rel, std::span<const HyperplaneId> set,
                                                        std::uint32_t d);

/// Iterated partition over the parameter sequence `ds`; each class of one round is
/// partitioned again by the next parameter.
std::map<HyperplaneId, RankVector> iterated_partition(const RelationTable& rel, std::span<const HyperplaneId> set,
                                                      std::span<const std::uint32_t> ds);

/// Rank vectors over (D, D-1, ..., 2) for each component, with D its dimension; (0) when D ≤ 1.
std::vector<RankVector> rank_vectors(const CubeComplex& cx);

/// Maximal elements of {k : k < h}.
std::vector<HyperplaneId> predecessors(const RelationTable& rel, HyperplaneId h);

/// c(h) = 1 iff every rank-maximal predecessor of h has color 0.
ColoringAssignment compute_coloring(const CubeComplex& cx);

}  // namespace cubecover
