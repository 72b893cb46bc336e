#include "cubecover/hyperplanes.hpp"

#include "cubecover/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cubecover {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

HyperplaneSet compute_hyperplanes(const MedianGraph& g) {
    const std::size_t n = g.vertex_count();
    UnionFind uf(g.edge_count());

    // Squares a-b-c-d through every pair of neighbors b, d of a.
    for (Vertex a = 0; a < n; ++a) {
        const auto nb = g.neighbors(a);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                const auto [b, ab] = nb[i];
                const auto [d, ad] = nb[j];
                for (auto [c, bc] : g.neighbors(b)) {
                    if (c == a) continue;
                    if (auto dc = g.edge_between(d, c)) {
                        uf.unite(ab, *dc);
                        uf.unite(ad, bc);
                    }
                }
            }
    }

    HyperplaneSet hs;
    hs.edge_class_.assign(g.edge_count(), 0);
    std::vector<std::size_t> root_to_id(g.edge_count(), SIZE_MAX);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto r = uf.find(e);
        if (root_to_id[r] == SIZE_MAX) {
            root_to_id[r] = hs.hyperplanes_.size();
            hs.hyperplanes_.emplace_back();
        }
        hs.edge_class_[e] = static_cast<HyperplaneId>(root_to_id[r]);
        hs.hyperplanes_[root_to_id[r]].edges.push_back(e);
    }

    hs.by_component_.assign(g.component_count(), {});
    std::vector<char> cut(g.edge_count(), 0);
    std::vector<Vertex> queue;
    for (HyperplaneId id = 0; id < hs.hyperplanes_.size(); ++id) {
        Hyperplane& h = hs.hyperplanes_[id];
        const Edge& first = g.edge(h.edges.front());
        h.component = g.component(first.u);
        hs.by_component_[h.component].push_back(id);
        h.carrier.resize(n);
        h.minus.resize(n);
        h.plus.resize(n);
        for (EdgeId e : h.edges) {
            cut[e] = 1;
            h.carrier.set(g.edge(e).u);
            h.carrier.set(g.edge(e).v);
        }
        // Flood fill from the base without crossing h.
        auto flood = [&](Vertex start, VertexSet& side) {
            side.set(start);
            queue.assign(1, start);
            for (std::size_t i = 0; i < queue.size(); ++i)
                for (auto [w, e] : g.neighbors(queue[i]))
                    if (!cut[e] && !side.test(w)) {
                        side.set(w);
                        queue.push_back(w);
                    }
        };
        flood(g.base(h.component), h.minus);
        const Vertex across = h.minus.test(first.u) ? first.v : first.u;
        if (h.minus.test(across))
            throw InternalError("hyperplane " + std::to_string(id) + " does not separate its component");
        flood(across, h.plus);
        const auto comp_size = g.component_vertices(h.component).size();
        if (h.minus.count() + h.plus.count() != comp_size)
            throw InternalError("hyperplane " + std::to_string(id) + " leaves more than two components");
        for (EdgeId e : h.edges) {
            cut[e] = 0;
            if (h.minus.test(g.edge(e).u) == h.minus.test(g.edge(e).v))
                throw InternalError("hyperplane edge does not cross between halfspaces");
        }
    }
    return hs;
}

const char* to_string(Relation r) {
    switch (r) {
        case Relation::equal: return "equal";
        case Relation::less: return "less";
        case Relation::greater: return "greater";
        case Relation::opposite: return "opposite";
        case Relation::cross: return "cross";
        case Relation::different_component: return "different_component";
    }
    return "?";
}

Relation classify_pair(const Hyperplane& h, const Hyperplane& k, bool same) {
    if (same) return Relation::equal;
    if (h.component != k.component) return Relation::different_component;
    // The base lies in h^- ∩ k^-, so at most one of the other three quadrants is empty.
    if (!h.minus.intersects(k.plus)) return Relation::less;     // h^- ⊂ k^-
    if (!h.plus.intersects(k.minus)) return Relation::greater;  // k^- ⊂ h^-
    if (!h.plus.intersects(k.plus)) return Relation::opposite;
    return Relation::cross;
}

RelationTable::RelationTable(const HyperplaneSet& hs) : size_(hs.size()), below_(hs.size()), above_(hs.size()) {
    if (size_ <= kDenseLimit) {
        dense_.resize(size_ * size_);
        for (HyperplaneId h = 0; h < size_; ++h)
            for (HyperplaneId k = 0; k < size_; ++k) dense_[h * size_ + k] = classify_pair(hs[h], hs[k], h == k);
    } else {
        sparse_.assign(hs.all().begin(), hs.all().end());
    }
    for (ComponentId c = 0; c < hs.component_count(); ++c) {
        const auto ids = hs.in_component(c);
        for (HyperplaneId h : ids)
            for (HyperplaneId k : ids)
                if (less(h, k)) {
                    above_[h].push_back(k);
                    below_[k].push_back(h);
                }
    }
}

Relation RelationTable::classify(HyperplaneId h, HyperplaneId k) const {
    return classify_pair(sparse_[h], sparse_[k], h == k);
}

std::vector<HyperplaneId> separating(const MedianGraph& g, const HyperplaneSet& hs, Vertex x, Vertex y) {
    if (x >= g.vertex_count() || y >= g.vertex_count()) throw InvalidInput("vertex id out of range");
    if (!g.same_component(x, y)) throw PreconditionError("separating set across components");
    std::vector<HyperplaneId> out;
    for (HyperplaneId h : hs.in_component(g.component(x)))
        if (hs.on_plus_side(h, x) != hs.on_plus_side(h, y)) out.push_back(h);
    return out;
}

namespace {

// Largest clique in the crossing graph restricted to `cand`.
std::uint32_t max_crossing_clique(const RelationTable& rel, std::vector<HyperplaneId>& current,
                                  std::span<const HyperplaneId> cand) {
    std::uint32_t best = static_cast<std::uint32_t>(current.size());
    for (std::size_t i = 0; i < cand.size(); ++i) {
        if (current.size() + (cand.size() - i) <= best) break;
        std::vector<HyperplaneId> next;
        for (std::size_t j = i + 1; j < cand.size(); ++j)
            if (rel.cross(cand[i], cand[j])) next.push_back(cand[j]);
        current.push_back(cand[i]);
        best = std::max(best, max_crossing_clique(rel, current, next));
        current.pop_back();
    }
    return best;
}

}  // namespace

std::uint32_t component_dimension(const MedianGraph& g, const HyperplaneSet& hs, const RelationTable& rel,
                                  ComponentId c) {
    std::uint32_t best = 0;
    std::vector<HyperplaneId> incident, current;
    for (Vertex v : g.component_vertices(c)) {
        incident.clear();
        for (auto [w, e] : g.neighbors(v)) incident.push_back(hs.of_edge(e));
        if (incident.size() <= best) continue;
        best = std::max(best, max_crossing_clique(rel, current, incident));
    }
    return best;
}

std::uint32_t dimension(const MedianGraph& g, const HyperplaneSet& hs, const RelationTable& rel) {
    std::uint32_t best = 0;
    for (ComponentId c = 0; c < g.component_count(); ++c) best = std::max(best, component_dimension(g, hs, rel, c));
    return best;
}

}  // namespace cubecover
