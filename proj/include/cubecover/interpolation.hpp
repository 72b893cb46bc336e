#pragma once

#include "cubecover/coloring.hpp"
#include "cubecover/cube_space.hpp"
#include "cubecover/pocset.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace cubecover {

/// 3^(D-1)·D, or 1 when D ≤ 1.
std::uint64_t default_ell(std::uint32_t dimension);

/// The weights w(k,h): ℓ/(ℓ+1) on the diagonal, 1/(ℓ+1) when k < h, c(h) = 1 and every j
/// strictly between has color 0, and 0 otherwise. ℓ is chosen per component.
class WeightFn {
public:
    WeightFn(ComplexPtr cx, ColoringAssignment coloring, std::vector<std::uint64_t> ell);

    std::uint64_t ell(ComponentId c) const { return ell_[c]; }
    const std::vector<std::uint64_t>& ells() const { return ell_; }
    const ColoringAssignment& coloring() const { return coloring_; }
    const CubeComplex& complex() const { return *cx_; }

    Rational weight(HyperplaneId k, HyperplaneId h) const;

    /// Nonzero weights w(k, ·) for k in K_c, ascending in h.
    const std::vector<std::pair<HyperplaneId, Rational>>& row(HyperplaneId k) const { return rows_[k]; }

private:
    bool only_zero_between(HyperplaneId k, HyperplaneId h) const;

    ComplexPtr cx_;
    ColoringAssignment coloring_;
    std::vector<std::uint64_t> ell_;
    std::vector<std::vector<std::pair<HyperplaneId, Rational>>> rows_;
};

/// (Ψ_w ξ)(k) = min(1, Σ_h w(k,h) ξ(h)) for k in K_c, re-indexed onto the quotient.
/// Throws PreconditionError when ξ's component or support does not belong to the source.
FinSupportPoint psi_w(const WeightFn& wf, const QuotientResult& q, const FinSupportPoint& xi);

}  // namespace cubecover
