#pragma once

#include "cubecover/rational.hpp"

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace cubecover {

using RationalVector = std::vector<Rational>;

/// A top-dimensional simplex of the second subdivision T₂ of the cube grid [0,side]^dim,
/// with the T₁-vertex whose closed star contains it.
struct ModelSimplex {
    std::vector<RationalVector> vertices;
    std::string star;      // coordinates of the T₁-vertex
    std::uint32_t level;   // its level
};

/// Explicit T₂ of the grid [0,side]^dim, built by three rounds of barycentric subdivision
/// (T itself being the barycentric subdivision of each unit cube).
struct ModelTriangulation {
    std::uint32_t dim = 0;
    std::uint32_t side = 1;
    std::vector<ModelSimplex> simplices;
};

ModelTriangulation build_model(std::uint32_t dim, std::uint32_t side);

/// Barycentric coordinates of `point` in the simplex, or empty when it lies outside.
std::vector<Rational> barycentric_coordinates(std::span<const RationalVector> simplex, std::span<const Rational> point);

/// Levels of the stars containing `point`, by testing every simplex.
std::set<std::uint32_t> model_star_levels(const ModelTriangulation& model, std::span<const Rational> point);

/// Exact ℓ¹ distance between two simplices.
Rational l1_simplex_distance(std::span<const RationalVector> a, std::span<const RationalVector> b);

/// Solves A μ = rhs for a square or tall system; returns empty unless the solution is unique.
std::vector<Rational> solve_unique(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs);

}  // namespace cubecover
