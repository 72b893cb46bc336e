#include "cubecover/coloring.hpp"

#include "cubecover/error.hpp"

#include <algorithm>
#include <numeric>

namespace cubecover {

namespace {

// Is there a set of `need` pairwise-crossing hyperplanes among candidates[from..]
// that all cross every member of `chosen`?
bool crossing_clique(const RelationTable& rel, std::span<const HyperplaneId> candidates, std::size_t from,
                     std::vector<HyperplaneId>& chosen, std::uint32_t need) {
    if (need == 0) return true;
    for (std::size_t i = from; i + need <= candidates.size(); ++i) {
        const HyperplaneId h = candidates[i];
        if (!std::all_of(chosen.begin(), chosen.end(), [&](HyperplaneId k) { return rel.cross(h, k); })) continue;
        chosen.push_back(h);
        const bool found = crossing_clique(rel, candidates, i + 1, chosen, need - 1);
        chosen.pop_back();
        if (found) return true;
    }
    return false;
}

}  // namespace

std::map<HyperplaneId, std::uint32_t> descend_partition(const RelationTable& rel, std::span<const HyperplaneId> set,
                                                        std::uint32_t d) {
    if (d < 2) throw PreconditionError("descend_partition needs d >= 2");
    std::map<HyperplaneId, std::uint32_t> level;
    std::vector<HyperplaneId> current(set.begin(), set.end());
    std::sort(current.begin(), current.end());
    current.erase(std::unique(current.begin(), current.end()), current.end());

    for (std::uint32_t n = 0; !current.empty(); ++n) {
        std::vector<HyperplaneId> next;
        for (HyperplaneId h : current) {
            std::vector<HyperplaneId> below;
            for (HyperplaneId k : rel.below(h))
                if (std::binary_search(current.begin(), current.end(), k)) below.push_back(k);
            std::vector<HyperplaneId> chosen;
            if (below.size() >= d && crossing_clique(rel, below, 0, chosen, d))
                next.push_back(h);
            else
                level[h] = n;
        }
        if (next.size() == current.size()) throw InternalError("descending partition did not shrink");
        current = std::move(next);
    }
    return level;
}

std::map<HyperplaneId, RankVector> iterated_partition(const RelationTable& rel, std::span<const HyperplaneId> set,
                                                      std::span<const std::uint32_t> ds) {
    std::map<RankVector, std::vector<HyperplaneId>> classes;
    classes[{}] = std::vector<HyperplaneId>(set.begin(), set.end());
    for (std::uint32_t d : ds) {
        std::map<RankVector, std::vector<HyperplaneId>> refined;
        for (const auto& [prefix, members] : classes) {
            for (const auto& [h, n] : descend_partition(rel, members, d)) {
                RankVector key = prefix;
                key.push_back(n);
                refined[std::move(key)].push_back(h);
            }
        }
        classes = std::move(refined);
    }
    std::map<HyperplaneId, RankVector> out;
    for (const auto& [key, members] : classes)
        for (HyperplaneId h : members) out[h] = key;
    return out;
}

std::vector<RankVector> rank_vectors(const CubeComplex& cx) {
    std::vector<RankVector> rank(cx.hyperplane_count());
    for (ComponentId c = 0; c < cx.component_count(); ++c) {
        const auto ids = cx.hyperplanes().in_component(c);
        const std::uint32_t dim = cx.dimension(c);
        if (dim <= 1) {
            for (HyperplaneId h : ids) rank[h] = {0};
            continue;
        }
        std::vector<std::uint32_t> ds(dim - 1);
        std::iota(ds.rbegin(), ds.rend(), 2u);  // D, D-1, ..., 2
        for (auto& [h, r] : iterated_partition(cx.relations(), ids, ds)) rank[h] = std::move(r);
    }
    return rank;
}

std::vector<HyperplaneId> predecessors(const RelationTable& rel, HyperplaneId h) {
    const auto below = rel.below(h);
    std::vector<HyperplaneId> out;
    for (HyperplaneId k : below) {
        const bool maximal =
            std::none_of(below.begin(), below.end(), [&](HyperplaneId j) { return rel.less(k, j); });
        if (maximal) out.push_back(k);
    }
    return out;
}

ColoringAssignment compute_coloring(const CubeComplex& cx) {
    const std::size_t m = cx.hyperplane_count();
    ColoringAssignment out;
    out.rank = rank_vectors(cx);
    out.color.assign(m, 0);
    out.predecessors.resize(m);

    std::vector<HyperplaneId> order(m);
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](HyperplaneId a, HyperplaneId b) { return cx.base_distance(a) < cx.base_distance(b); });

    std::vector<char> done(m, 0);
    for (HyperplaneId h : order) {
        out.predecessors[h] = predecessors(cx.relations(), h);
        const auto& preds = out.predecessors[h];
        RankVector best;
        for (HyperplaneId k : preds) best = std::max(best, out.rank[k]);
        bool all_zero = true;
        for (HyperplaneId k : preds) {
            if (!done[k]) throw InternalError("predecessor colored after its successor");
            if (out.rank[k] == best && out.color[k] != 0) all_zero = false;
        }
        out.color[h] = all_zero ? 1 : 0;
        done[h] = 1;
    }
    for (HyperplaneId h = 0; h < m; ++h)
        if (out.color[h] == 0) out.kc.push_back(h);
    return out;
}

}  // namespace cubecover
