#pragma once

#include "cubecover/median_graph.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace cubecover {

/// n×m grid; vertex (i,j) has id i·m + j.
RawGraph grid_graph(std::uint32_t n, std::uint32_t m);

/// Product of `dim` paths with `side` vertices each; coordinates in mixed radix, first
/// coordinate least significant.
RawGraph hypercube_grid_graph(std::uint32_t side, std::uint32_t dim);

/// Path on n vertices 0..n-1.
RawGraph path_graph(std::uint32_t n);

/// Cycle on n vertices (median only for n = 4; useful as a negative example).
RawGraph cycle_graph(std::uint32_t n);

/// Balanced tree of the given depth and arity, vertices in BFS order.
RawGraph tree_graph(std::uint32_t depth, std::uint32_t arity);

/// Lattice points (i,j) with i + j ≤ n, adjacent at ℓ¹ distance 1.
RawGraph staircase_graph(std::uint32_t n);

/// A strip of squares of the given length with `strips` further strips glued along
/// its bottom line, strip k starting at column k: a finite truncation of a complex whose
/// Roller boundary is locally infinite.
RawGraph strip_gluing_graph(std::uint32_t length, std::uint32_t strips);

struct RandomPocsetParams {
    std::uint32_t hyperplanes = 6;
    double p_less = 0.3;
    double p_opposite = 0.3;
    std::size_t max_vertices = 40;
    std::size_t max_attempts = 10000;
};

/// Dual graph of a random pocset: a random order, opposite pairs closed upward, all
/// consistent orientations as vertices. Rejects samples whose dual does not realize the
/// sampled relations exactly or exceeds max_vertices. Deterministic in `seed`.
RawGraph random_pocset_graph(std::uint64_t seed, const RandomPocsetParams& params = {});

struct InstanceSpec {
    std::string kind;  // grid, hypercube_grid, path, cycle, tree, staircase, strip_gluing, random_pocset, file
    std::optional<std::uint32_t> n, m;
    std::uint64_t seed = 0;
    std::string file;
};

/// Builds and validates the instance. Throws InvalidInput on unknown kinds or bad parameters.
MedianGraph generate(const InstanceSpec& spec);

/// The raw graph before validation.
RawGraph generate_raw(const InstanceSpec& spec);

}  // namespace cubecover
