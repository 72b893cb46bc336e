#include "cubecover/pocset.hpp"

#include "cubecover/error.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <string>

namespace cubecover {

QuotientResult quotient(const CubeComplex& cx, std::span<const HyperplaneId> kept_in) {
    const auto& g = cx.graph();
    const auto& hs = cx.hyperplanes();
    QuotientResult q;
    q.kept.assign(kept_in.begin(), kept_in.end());
    std::sort(q.kept.begin(), q.kept.end());
    q.kept.erase(std::unique(q.kept.begin(), q.kept.end()), q.kept.end());
    for (HyperplaneId h : q.kept)
        if (h >= hs.size()) throw InvalidInput("hyperplane id " + std::to_string(h) + " out of range");

    std::vector<char> in_k(hs.size(), 0);
    for (HyperplaneId h : q.kept) in_k[h] = 1;

    // Class key: component followed by the sides over K-hyperplanes of that component.
    std::map<std::vector<std::uint32_t>, Vertex> classes;
    q.vertex_map.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const ComponentId c = g.component(v);
        std::vector<std::uint32_t> key{c};
        for (HyperplaneId h : hs.in_component(c))
            if (in_k[h]) key.push_back(hs.on_plus_side(h, v) ? 1u : 0u);
        auto [it, fresh] = classes.emplace(std::move(key), static_cast<Vertex>(classes.size()));
        q.vertex_map[v] = it->second;
    }

    RawGraph raw;
    raw.vertex_count = classes.size();
    for (const Edge& e : g.edges())
        if (in_k[hs.of_edge(static_cast<EdgeId>(&e - g.edges().data()))])
            raw.edges.emplace_back(q.vertex_map[e.u], q.vertex_map[e.v]);
    for (ComponentId c = 0; c < g.component_count(); ++c) raw.base[c] = q.vertex_map[g.base(c)];

    q.complex = make_complex(validate_median(raw));
    const auto& qg = q.complex->graph();
    if (qg.component_count() != g.component_count()) throw InternalError("quotient changed the component count");

    q.hyperplane_map.assign(hs.size(), std::nullopt);
    q.preimage.assign(q.complex->hyperplane_count(), 0);
    std::vector<char> hit(q.complex->hyperplane_count(), 0);
    for (HyperplaneId h : q.kept) {
        const Edge& e = g.edge(hs[h].edges.front());
        const auto qe = qg.edge_between(q.vertex_map[e.u], q.vertex_map[e.v]);
        if (!qe) throw InternalError("quotient lost the edge of a kept hyperplane");
        const HyperplaneId image = q.complex->hyperplanes().of_edge(*qe);
        if (hit[image]) throw InternalError("hyperplane map is not injective");
        hit[image] = 1;
        q.hyperplane_map[h] = image;
        q.preimage[image] = h;
    }
    if (std::find(hit.begin(), hit.end(), 0) != hit.end()) throw InternalError("hyperplane map is not surjective");
    return q;
}

Pocset::Pocset(std::size_t n, std::vector<Relation> table) : n_(n), table_(std::move(table)), priority_(n, 0) {
    if (table_.size() != n * n) throw InvalidInput("relation table has the wrong size");
    for (std::size_t i = 0; i < n; ++i) {
        if (relation(i, i) != Relation::equal) throw InvalidInput("relation table diagonal must be 'equal'");
        for (std::size_t j = 0; j < n; ++j) {
            const Relation a = relation(i, j), b = relation(j, i);
            const bool symmetric =
                a == Relation::cross || a == Relation::opposite || a == Relation::different_component;
            const bool ok = (a == Relation::less && b == Relation::greater) ||
                            (a == Relation::greater && b == Relation::less) || (a == b && symmetric);
            if (i != j && !ok) throw InvalidInput("relation table is not consistently symmetric");
        }
    }
}

Pocset Pocset::of_component(const CubeComplex& cx, ComponentId c) {
    const auto ids = cx.hyperplanes().in_component(c);
    const std::size_t n = ids.size();
    std::vector<Relation> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = cx.relations()(ids[i], ids[j]);
    Pocset p(n, std::move(table));
    for (std::size_t i = 0; i < n; ++i) p.priority_[i] = cx.base_distance(ids[i]);
    return p;
}

bool Pocset::compatible(std::size_t i, bool plus_i, std::size_t j, bool plus_j) const {
    switch (relation(i, j)) {
        case Relation::opposite: return !(plus_i && plus_j);
        case Relation::less: return !(!plus_i && plus_j);     // i^- ∩ j^+ = ∅
        case Relation::greater: return !(plus_i && !plus_j);  // i^+ ∩ j^- = ∅
        default: return true;
    }
}

namespace {

struct Enumerator {
    const Pocset& p;
    std::vector<std::size_t> order;
    std::vector<Ultrafilter>& out;
    Ultrafilter current;

    // domains[i]: bit 0 = minus allowed, bit 1 = plus allowed
    void run(std::size_t depth, std::vector<std::uint8_t> domains) {
        if (depth == order.size()) {
            out.push_back(current);
            return;
        }
        const std::size_t i = order[depth];
        for (int side = 0; side < 2; ++side) {
            if (!(domains[i] & (1u << side))) continue;
            std::vector<std::uint8_t> next = domains;
            next[i] = static_cast<std::uint8_t>(1u << side);
            bool dead = false;
            for (std::size_t d = depth + 1; d < order.size() && !dead; ++d) {
                const std::size_t j = order[d];
                for (int s = 0; s < 2; ++s)
                    if ((next[j] & (1u << s)) && !p.compatible(i, side == 1, j, s == 1))
                        next[j] = static_cast<std::uint8_t>(next[j] & ~(1u << s));
                dead = next[j] == 0;
            }
            if (dead) continue;
            current[i] = static_cast<std::uint8_t>(side);
            run(depth + 1, std::move(next));
        }
    }
};

}  // namespace

std::vector<Ultrafilter> enumerate_ultrafilters(const Pocset& p) {
    std::vector<Ultrafilter> out;
    Enumerator e{p, std::vector<std::size_t>(p.size()), out, Ultrafilter(p.size(), 0)};
    std::iota(e.order.begin(), e.order.end(), 0);
    std::stable_sort(e.order.begin(), e.order.end(),
                     [&](std::size_t a, std::size_t b) { return p.priority()[a] < p.priority()[b]; });
    e.run(0, std::vector<std::uint8_t>(p.size(), 3));
    std::sort(out.begin(), out.end());
    return out;
}

RawGraph dual_graph(std::span<const Ultrafilter> ufs) {
    RawGraph raw;
    raw.vertex_count = ufs.size();
    std::map<Ultrafilter, Vertex> index;
    for (Vertex v = 0; v < ufs.size(); ++v) index.emplace(ufs[v], v);
    for (Vertex v = 0; v < ufs.size(); ++v) {
        Ultrafilter flipped = ufs[v];
        for (std::size_t h = 0; h < flipped.size(); ++h) {
            flipped[h] ^= 1u;
            if (auto it = index.find(flipped); it != index.end() && it->second > v) raw.edges.emplace_back(v, it->second);
            flipped[h] ^= 1u;
        }
    }
    if (!ufs.empty()) {
        auto it = index.find(Ultrafilter(ufs.front().size(), 0));
        if (it != index.end()) {
            // The base override only applies to the component containing it; rebuilding
            // resolves its component index.
            const MedianGraph probe = make_trusted_median_graph(raw);
            raw.base[probe.component(it->second)] = it->second;
        }
    }
    return raw;
}

Ultrafilter vertex_orientation(const CubeComplex& cx, Vertex v) {
    const auto& hs = cx.hyperplanes();
    const auto ids = hs.in_component(cx.graph().component(v));
    Ultrafilter out(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) out[i] = hs.on_plus_side(ids[i], v) ? 1 : 0;
    return out;
}

namespace {

void check_gate_args(const CubeComplex& cx, Vertex o, std::span<const Vertex> set) {
    const auto& g = cx.graph();
    if (o >= g.vertex_count()) throw InvalidInput("vertex id out of range");
    if (set.empty()) throw PreconditionError("gate target set is empty");
    for (Vertex v : set) {
        if (v >= g.vertex_count()) throw InvalidInput("vertex id out of range");
        if (!g.same_component(o, v)) throw PreconditionError("gate target set leaves the component of o");
    }
    if (!is_convex(g, set)) throw PreconditionError("gate target set is not convex");
}

}  // namespace

Vertex gate_by_distance(const CubeComplex& cx, Vertex o, std::span<const Vertex> set) {
    check_gate_args(cx, o, set);
    const auto& g = cx.graph();
    Vertex best = set.front();
    for (Vertex v : set)
        if (g.dist(o, v) < g.dist(o, best) || (g.dist(o, v) == g.dist(o, best) && v < best)) best = v;
    return best;
}

Vertex gate(const CubeComplex& cx, Vertex o, std::span<const Vertex> set) {
    check_gate_args(cx, o, set);
    const auto& hs = cx.hyperplanes();
    const ComponentId c = cx.graph().component(o);
    std::vector<HyperplaneId> ones;
    for (HyperplaneId h : hs.in_component(c)) {
        const bool o_plus = hs.on_plus_side(h, o);
        const bool all_across =
            std::all_of(set.begin(), set.end(), [&](Vertex v) { return hs.on_plus_side(h, v) != o_plus; });
        const bool side_plus = all_across ? !o_plus : o_plus;
        if (side_plus) ones.push_back(h);
    }
    const auto xi = cx.vertex_with_separators(c, ones);
    if (!xi) throw InternalError("gate orientation is not a vertex");
    assert(*xi == gate_by_distance(cx, o, set));
    return *xi;
}

}  // namespace cubecover
