#pragma once

#include "cubecover/error.hpp"
#include "cubecover/rational.hpp"

#include <cstdint>

namespace cubecover {

class DimensionTooLarge : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Least ℓ¹ distance between closed T₂-stars of distinct T₁-vertices of one level, over the
/// model grid [0,2]^D. Exact; cached per dimension. Infinite for D = 0 (no two stars
/// share a component). Throws DimensionTooLarge for D > 3.
ExtendedRational compute_delta(std::uint32_t dimension);

/// min over 1 ≤ D' ≤ D of compute_delta(D'); the constant used for complexes whose
/// components have dimension at most D.
ExtendedRational compute_delta_upto(std::uint32_t dimension);

}  // namespace cubecover
