#pragma once

#include "cubecover/cube_space.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace cubecover {

/// A face of a cube of the complex: its corner nearest the base and the hyperplanes along
/// which it extends. Its barycenter is a vertex of the cube triangulation T.
struct Face {
    Vertex anchor = 0;
    std::vector<HyperplaneId> free;  // ascending

    std::string id() const;
    friend auto operator<=>(const Face&, const Face&) = default;
};

/// A vertex of the first subdivision T₁: the barycenter of a T-simplex, given as its chain
/// of faces from largest to smallest. Its level is the dimension of that T-simplex.
struct T1Vertex {
    std::vector<Face> chain;

    std::uint32_t level() const { return static_cast<std::uint32_t>(chain.size()) - 1; }
    std::string id() const;
    friend auto operator<=>(const T1Vertex&, const T1Vertex&) = default;
};

struct SimplexLocation {
    Face cube;                           // the carrying cube
    std::vector<int> orthant;            // sign of 2t-1 per cube coordinate (0 on the midplane)
    std::vector<std::uint32_t> order;    // coordinates by decreasing |2t-1|, ties by position
    std::vector<Face> t_simplex;         // vertices of the smallest containing T-simplex
    std::vector<Rational> t_bary;        // their (positive) barycentric weights
    std::vector<T1Vertex> t1_simplex;    // vertices of the smallest containing T₁-simplex
    std::vector<Rational> bary;          // their (positive) barycentric weights
};

/// Locates p in T and T₁.
SimplexLocation locate(const CubeComplex& cx, const CubePoint& p);

/// T₁-vertices whose closed T₂-star contains p: the argmax of the T₁-barycentric weights.
std::vector<T1Vertex> star_witnesses(const CubeComplex& cx, const CubePoint& p);

/// Levels ℓ with p ∈ S_ℓ.
std::set<std::uint32_t> star_levels(const CubeComplex& cx, const CubePoint& p);

}  // namespace cubecover
