#include "cubecover/triangulation.hpp"

#include "cubecover/error.hpp"

#include <algorithm>
#include <numeric>

namespace cubecover {

std::string Face::id() const {
    std::string s = std::to_string(anchor) + ":[";
    for (std::size_t i = 0; i < free.size(); ++i) s += (i ? "," : "") + std::to_string(free[i]);
    return s + "]";
}

std::string T1Vertex::id() const {
    std::string s;
    for (std::size_t i = 0; i < chain.size(); ++i) s += (i ? "|" : "") + chain[i].id();
    return s;
}

SimplexLocation locate(const CubeComplex& cx, const CubePoint& p) {
    const ComponentId comp = cx.graph().component(p.vertex);
    std::vector<HyperplaneId> coords;
    std::vector<Rational> x;  // 2t - 1
    for (const auto& [h, t] : p.frac) {
        if (sgn(t) <= 0 || t >= 1) throw InvalidInput("cube point coordinates must lie in (0,1)");
        coords.push_back(h);
        x.push_back(2 * t - 1);
    }
    const std::size_t m = coords.size();

    SimplexLocation loc;
    loc.cube = Face{p.vertex, coords};
    loc.orthant.resize(m);
    for (std::size_t i = 0; i < m; ++i) loc.orthant[i] = sgn(x[i]);
    loc.order.resize(m);
    std::iota(loc.order.begin(), loc.order.end(), 0u);
    std::stable_sort(loc.order.begin(), loc.order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return abs(x[a]) > abs(x[b]); });

    const std::vector<HyperplaneId> base_seps = cx.base_separators(p.vertex);

    // x = (1 - y₁)·center + Σ_j (y_j - y_{j+1})·u_j, where u_j fixes the j largest
    // coordinates at their signs.
    auto face_fixing = [&](std::size_t j) {
        std::vector<HyperplaneId> ones = base_seps;
        std::vector<HyperplaneId> free;
        std::vector<char> fixed(m, 0);
        for (std::size_t i = 0; i < j; ++i) fixed[loc.order[i]] = 1;
        for (std::size_t i = 0; i < m; ++i) {
            if (!fixed[i])
                free.push_back(coords[i]);
            else if (loc.orthant[i] > 0)
                ones.push_back(coords[i]);
        }
        const auto anchor = cx.vertex_with_separators(comp, ones);
        if (!anchor) throw InternalError("cube face corner is not a vertex");
        return Face{*anchor, free};
    };
    auto y = [&](std::size_t j) -> Rational {  // j-th largest |x|, 1-based; y₀ = 1, y_{m+1} = 0
        if (j == 0) return 1;
        if (j > m) return 0;
        return abs(x[loc.order[j - 1]]);
    };
    for (std::size_t j = 0; j <= m; ++j) {
        const Rational w = y(j) - y(j + 1);
        if (sgn(w) > 0) {
            loc.t_simplex.push_back(face_fixing(j));
            loc.t_bary.push_back(w);
        }
    }

    // First barycentric subdivision: sort the T-weights descending; b_j is the barycenter
    // of the j+1 heaviest vertices with weight (j+1)(λ_j - λ_{j+1}).
    const std::size_t k = loc.t_simplex.size();
    std::vector<std::size_t> by_weight(k);
    std::iota(by_weight.begin(), by_weight.end(), 0u);
    std::stable_sort(by_weight.begin(), by_weight.end(),
                     [&](std::size_t a, std::size_t b) { return loc.t_bary[a] > loc.t_bary[b]; });
    for (std::size_t j = 0; j < k; ++j) {
        const Rational next = j + 1 < k ? loc.t_bary[by_weight[j + 1]] : Rational(0);
        const Rational mu = Rational(static_cast<unsigned long>(j + 1)) * (loc.t_bary[by_weight[j]] - next);
        if (sgn(mu) == 0) continue;
        std::vector<std::size_t> members(by_weight.begin(), by_weight.begin() + static_cast<std::ptrdiff_t>(j + 1));
        std::sort(members.begin(), members.end());  // chain order: largest face first
        T1Vertex v;
        for (std::size_t i : members) v.chain.push_back(loc.t_simplex[i]);
        loc.t1_simplex.push_back(std::move(v));
        loc.bary.push_back(mu);
    }
    return loc;
}

std::vector<T1Vertex> star_witnesses(const CubeComplex& cx, const CubePoint& p) {
    const SimplexLocation loc = locate(cx, p);
    const Rational best = *std::max_element(loc.bary.begin(), loc.bary.end());
    std::vector<T1Vertex> out;
    for (std::size_t i = 0; i < loc.bary.size(); ++i)
        if (loc.bary[i] == best) out.push_back(loc.t1_simplex[i]);
    std::sort(out.begin(), out.end());
    return out;
}

std::set<std::uint32_t> star_levels(const CubeComplex& cx, const CubePoint& p) {
    std::set<std::uint32_t> out;
    for (const T1Vertex& v : star_witnesses(cx, p)) out.insert(v.level());
    return out;
}

}  // namespace cubecover
