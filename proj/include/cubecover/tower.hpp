#pragma once

#include "cubecover/interpolation.hpp"
#include "cubecover/pocset.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cubecover {

/// One quotient step: color the source, quotient by K_c, interpolate with w.
struct TowerStage {
    ComplexPtr source;
    std::shared_ptr<const WeightFn> wf;
    QuotientResult quotient;

    const ColoringAssignment& coloring() const { return wf->coloring(); }
};

struct TowerOptions {
    /// Overrides ℓ in every component; otherwise 3^(D-1)·D with D the component's dimension.
    std::optional<std::uint64_t> ell;
    unsigned threads = 1;
};

struct TowerMap {
    ComplexPtr source;
    std::vector<TowerStage> stages;
    Rational epsilon;
    std::uint32_t N = 0;
    std::vector<std::uint64_t> ell;            // per source component
    std::vector<Rational> stage_constant;      // ℓ/(ℓ+1) per component
    std::vector<Rational> lipschitz_bound;     // stage_constant^N per component
    std::vector<std::string> notes;

    const CubeComplex& target() const { return stages.empty() ? *source : *stages.back().quotient.complex; }
};

/// The least N ≥ 1 with constant^N < epsilon.
std::uint32_t choose_stage_count(const Rational& constant, const Rational& epsilon);

/// Builds stages until N is reached or every component has collapsed to a point.
/// Throws PreconditionError unless 0 < epsilon ≤ 1.
TowerMap build_tower(ComplexPtr source, const Rational& epsilon, const TowerOptions& options = {});

/// f(x): ι(x) pushed through Ψ then P at every stage. Each intermediate value is decoded
/// as a check; a failure is an InternalError.
FinSupportPoint apply(const TowerMap& tm, Vertex x);

/// f on every vertex, in parallel over `threads`.
std::vector<FinSupportPoint> apply_all(const TowerMap& tm, unsigned threads = 1);

class BudgetExceeded : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

struct LipschitzReport {
    std::vector<Rational> observed;  // per component: max l1(f(x),f(y)) / d(x,y)
    std::vector<Rational> bound;     // per component
    Rational observed_max;
    Rational bound_max;
    bool ok = true;
};

/// Exhaustive over same-component pairs. Throws BudgetExceeded above `vertex_budget` vertices.
LipschitzReport verify_lipschitz(const TowerMap& tm, std::span<const FinSupportPoint> images,
                                 std::size_t vertex_budget = 4096);

/// control(t) = min l1(f(x), f(y)) over same-component pairs with d(x,y) ≥ t, for t = 1..diameter.
std::vector<std::pair<std::uint32_t, Rational>> verify_cobornologous(const TowerMap& tm,
                                                                     std::span<const FinSupportPoint> images);

}  // namespace cubecover
