#include "cubecover/complex.hpp"

#include "cubecover/error.hpp"

#include <algorithm>

namespace cubecover {

CubeComplex::CubeComplex(MedianGraph graph)
    : graph_(std::move(graph)), hs_(compute_hyperplanes(graph_)), rel_(hs_) {
    const std::size_t n = graph_.vertex_count();
    const std::size_t m = hs_.size();

    component_dims_.resize(graph_.component_count());
    for (ComponentId c = 0; c < graph_.component_count(); ++c) {
        component_dims_[c] = component_dimension(graph_, hs_, rel_, c);
        dimension_ = std::max(dimension_, component_dims_[c]);
    }

    // Multi-source BFS from each carrier.
    vertex_carrier_dist_.assign(m * n, MedianGraph::kInfinity);
    std::vector<Vertex> queue;
    for (HyperplaneId h = 0; h < m; ++h) {
        auto* row = vertex_carrier_dist_.data() + static_cast<std::size_t>(h) * n;
        queue.clear();
        for (auto v = hs_[h].carrier.find_first(); v != VertexSet::npos; v = hs_[h].carrier.find_next(v)) {
            row[v] = 0;
            queue.push_back(static_cast<Vertex>(v));
        }
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (auto [w, e] : graph_.neighbors(queue[i]))
                if (row[w] == MedianGraph::kInfinity) {
                    row[w] = row[queue[i]] + 1;
                    queue.push_back(w);
                }
    }
    carrier_dist_.assign(m * m, MedianGraph::kInfinity);
    for (HyperplaneId h = 0; h < m; ++h)
        for (HyperplaneId k = 0; k < m; ++k) {
            std::uint32_t best = MedianGraph::kInfinity;
            const auto& ck = hs_[k].carrier;
            for (auto v = ck.find_first(); v != VertexSet::npos; v = ck.find_next(v))
                best = std::min(best, vertex_carrier_distance(static_cast<Vertex>(v), h));
            carrier_dist_[h * m + k] = best;
        }

    // Signatures only distinguish vertices within a component; the key carries the
    // component id in 32 extra bits.
    for (Vertex v = 0; v < n; ++v) {
        const ComponentId c = graph_.component(v);
        VertexSet key(m + 32);
        for (HyperplaneId h : hs_.in_component(c))
            if (hs_.on_plus_side(h, v)) key.set(h);
        for (unsigned bit = 0; bit < 32; ++bit)
            if ((c >> bit) & 1u) key.set(m + bit);
        if (!by_signature_.emplace(std::move(key), v).second)
            throw InternalError("two vertices share a halfspace signature");
    }
}

std::optional<Vertex> CubeComplex::across(Vertex v, HyperplaneId h) const {
    for (auto [w, e] : graph_.neighbors(v))
        if (hs_.of_edge(e) == h) return w;
    return std::nullopt;
}

std::vector<HyperplaneId> CubeComplex::incident(Vertex v) const {
    std::vector<HyperplaneId> out;
    for (auto [w, e] : graph_.neighbors(v)) out.push_back(hs_.of_edge(e));
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Vertex> CubeComplex::vertex_with_separators(ComponentId c, std::span<const HyperplaneId> ones) const {
    const std::size_t m = hs_.size();
    VertexSet key(m + 32);
    for (HyperplaneId h : ones) {
        if (h >= m || hs_[h].component != c) return std::nullopt;
        key.set(h);
    }
    for (unsigned bit = 0; bit < 32; ++bit)
        if ((c >> bit) & 1u) key.set(m + bit);
    auto it = by_signature_.find(key);
    if (it == by_signature_.end()) return std::nullopt;
    return it->second;
}

std::vector<HyperplaneId> CubeComplex::base_separators(Vertex x) const {
    std::vector<HyperplaneId> out;
    for (HyperplaneId h : hs_.in_component(graph_.component(x)))
        if (hs_.on_plus_side(h, x)) out.push_back(h);
    return out;
}

}  // namespace cubecover
