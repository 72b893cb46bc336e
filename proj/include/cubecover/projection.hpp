#pragma once

#include "cubecover/cube_space.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace cubecover {

using HyperplanePair = std::pair<HyperplaneId, HyperplaneId>;

/// Pairs on which the elementary moves act nontrivially.
struct PairSupport {
    std::vector<HyperplanePair> op_pairs;    // opposite, both values nonzero; first < second
    std::vector<HyperplanePair> less_pairs;  // first < second in the order, ξ(first) ≠ 1, ξ(second) ≠ 0
};

PairSupport pair_support(const CubeComplex& cx, const FinSupportPoint& xi);

/// Strict "applied earlier" order on pairs. An empty function means lexicographic by id.
using PairOrder = std::function<bool(const HyperplanePair&, const HyperplanePair&)>;

/// (x,y) -> (x-y,0) if x ≥ y, else (0,y-x). Throws PreconditionError unless h, k are opposite.
FinSupportPoint p_op_pair(const CubeComplex& cx, FinSupportPoint xi, HyperplaneId h, HyperplaneId k);

/// (x,y) -> (x+y,0) if x+y ≤ 1, else (1,x+y-1). Throws PreconditionError unless h < k.
FinSupportPoint p_less_pair(const CubeComplex& cx, FinSupportPoint xi, HyperplaneId h, HyperplaneId k);

/// Applies p_op over the op-support in the given order; the result has empty op-support.
FinSupportPoint project_op(const CubeComplex& cx, FinSupportPoint xi, const PairOrder& order = {});

/// Repeatedly applies p_less at the pair of largest carrier distance in the current
/// <-support, ties resolved by `tie`. Throws PreconditionError when the op-support is nonempty.
FinSupportPoint project_less(const CubeComplex& cx, FinSupportPoint xi, const PairOrder& tie = {});

/// project_less ∘ project_op.
FinSupportPoint project_point(const CubeComplex& cx, const FinSupportPoint& xi);

/// The projection followed by decoding. A decode failure here is an InternalError.
CubePoint project(const CubeComplex& cx, const FinSupportPoint& xi);

}  // namespace cubecover
