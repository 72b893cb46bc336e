#include "cubecover/delta.hpp"

#include "cubecover/model_triangulation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>

namespace cubecover {

namespace {

struct Box {
    RationalVector lo, hi;
};

Box bounding_box(const ModelSimplex& s) {
    Box b{s.vertices.front(), s.vertices.front()};
    for (const auto& v : s.vertices)
        for (std::size_t i = 0; i < v.size(); ++i) {
            b.lo[i] = std::min(b.lo[i], v[i]);
            b.hi[i] = std::max(b.hi[i], v[i]);
        }
    return b;
}

// ℓ¹ gap between boxes: a lower bound for the distance between their contents.
Rational box_gap(const Box& a, const Box& b) {
    Rational gap = 0;
    for (std::size_t i = 0; i < a.lo.size(); ++i) {
        if (b.lo[i] > a.hi[i]) gap += b.lo[i] - a.hi[i];
        if (a.lo[i] > b.hi[i]) gap += a.lo[i] - b.hi[i];
    }
    return gap;
}

Rational delta_exact(std::uint32_t dim) {
    const ModelTriangulation model = build_model(dim, 2);
    const auto& s = model.simplices;
    std::vector<Box> boxes;
    boxes.reserve(s.size());
    for (const auto& simplex : s) boxes.push_back(bounding_box(simplex));

    std::vector<std::size_t> order(s.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return boxes[a].lo[0] < boxes[b].lo[0]; });

    std::optional<Rational> best;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const std::size_t a = order[i];
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            const std::size_t b = order[j];
            // Sorted by lower x: once the x gap alone reaches the best, later ones do too.
            if (best && boxes[b].lo[0] - boxes[a].hi[0] >= *best) break;
            if (s[a].level != s[b].level || s[a].star == s[b].star) continue;
            if (best && box_gap(boxes[a], boxes[b]) >= *best) continue;
            const Rational d = l1_simplex_distance(s[a].vertices, s[b].vertices);
            if (!best || d < *best) best = d;
        }
    }
    if (!best) throw InternalError("model triangulation has no two stars of one level");
    return *best;
}

}  // namespace

ExtendedRational compute_delta(std::uint32_t dimension) {
    if (dimension == 0) return ExtendedRational::infinity();
    if (dimension > 3) throw DimensionTooLarge("star separation is only computed for dimension at most 3");
    static std::mutex mutex;
    static std::map<std::uint32_t, Rational> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(dimension); it != cache.end()) return it->second;
    }
    const Rational d = delta_exact(dimension);
    std::lock_guard lock(mutex);
    cache.emplace(dimension, d);
    return d;
}

ExtendedRational compute_delta_upto(std::uint32_t dimension) {
    ExtendedRational best = ExtendedRational::infinity();
    for (std::uint32_t d = 1; d <= dimension; ++d) best = std::min(best, compute_delta(d));
    return best;
}

}  // namespace cubecover
