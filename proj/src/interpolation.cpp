#include "cubecover/interpolation.hpp"

#include "cubecover/error.hpp"

#include <algorithm>

namespace cubecover {

std::uint64_t default_ell(std::uint32_t dimension) {
    if (dimension <= 1) return 1;
    std::uint64_t ell = dimension;
    for (std::uint32_t i = 1; i < dimension; ++i) ell *= 3;
    return ell;
}

WeightFn::WeightFn(ComplexPtr cx, ColoringAssignment coloring, std::vector<std::uint64_t> ell)
    : cx_(std::move(cx)), coloring_(std::move(coloring)), ell_(std::move(ell)) {
    if (ell_.size() != cx_->component_count()) throw InvalidInput("need one ell per component");
    for (std::uint64_t l : ell_)
        if (l == 0) throw InvalidInput("ell must be at least 1");
    if (coloring_.color.size() != cx_->hyperplane_count()) throw InvalidInput("coloring does not match the complex");

    rows_.resize(cx_->hyperplane_count());
    for (HyperplaneId k : coloring_.kc) {
        auto& row = rows_[k];
        row.emplace_back(k, weight(k, k));
        for (HyperplaneId h : cx_->relations().above(k))
            if (coloring_.color[h] == 1 && only_zero_between(k, h)) row.emplace_back(h, weight(k, h));
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
}

bool WeightFn::only_zero_between(HyperplaneId k, HyperplaneId h) const {
    const auto& rel = cx_->relations();
    for (HyperplaneId j : rel.above(k))
        if (j != h && rel.less(j, h) && coloring_.color[j] == 1) return false;
    return true;
}

Rational WeightFn::weight(HyperplaneId k, HyperplaneId h) const {
    const std::size_t m = cx_->hyperplane_count();
    if (k >= m || h >= m) throw InvalidInput("hyperplane id out of range");
    const Rational ell(static_cast<unsigned long>(ell_[cx_->hyperplanes()[k].component]));
    if (k == h) return Rational(ell / (ell + 1));
    if (cx_->relations().less(k, h) && coloring_.color[h] == 1 && only_zero_between(k, h))
        return Rational(1 / (ell + 1));
    return 0;
}

FinSupportPoint psi_w(const WeightFn& wf, const QuotientResult& q, const FinSupportPoint& xi) {
    const CubeComplex& cx = wf.complex();
    if (xi.component >= cx.component_count()) throw PreconditionError("point names a missing component");
    for (const auto& [h, t] : xi.entries)
        if (h >= cx.hyperplane_count() || cx.hyperplanes()[h].component != xi.component)
            throw PreconditionError("point support leaves its component");

    FinSupportPoint out;
    out.component = xi.component;
    for (HyperplaneId k : wf.coloring().kc) {
        if (cx.hyperplanes()[k].component != xi.component) continue;
        Rational sum = 0;
        for (const auto& [h, w] : wf.row(k)) {
            auto it = xi.entries.find(h);
            if (it != xi.entries.end()) sum += w * it->second;
        }
        if (sgn(sum) == 0) continue;
        const auto image = q.hyperplane_map[k];
        if (!image) throw InternalError("K_c hyperplane missing from the quotient");
        out.set(*image, sum > 1 ? Rational(1) : sum);
    }
    return out;
}

}  // namespace cubecover
