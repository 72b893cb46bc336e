#include "cubecover/error.hpp"
#include "cubecover/pocset.hpp"
#include "support.hpp"

#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

using namespace testing;

namespace {

// Side vector of v over the hyperplanes of its component, from the oracle halfspaces.
std::vector<std::uint8_t> sides(const CubeComplex& cx, Vertex v) { return vertex_orientation(cx, v); }

// Brute-force ultrafilters: all 2^n side choices whose chosen halfspaces pairwise meet,
// tested on the actual vertex sets.
std::set<Ultrafilter> brute_ultrafilters(const CubeComplex& cx, ComponentId c) {
    const auto ids = cx.hyperplanes().in_component(c);
    const std::size_t n = ids.size();
    std::set<Ultrafilter> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = i + 1; j < n && ok; ++j) {
                const auto& a = cx.hyperplanes()[ids[i]];
                const auto& b = cx.hyperplanes()[ids[j]];
                ok = ((mask >> i & 1) ? a.plus : a.minus).intersects((mask >> j & 1) ? b.plus : b.minus);
            }
        if (!ok) continue;
        Ultrafilter u(n);
        for (std::size_t i = 0; i < n; ++i) u[i] = mask >> i & 1;
        out.insert(u);
    }
    return out;
}

}  // namespace

TEST_CASE("quotient examples") {
    const auto p5 = complex_of(path_graph(5));
    const std::vector<HyperplaneId> k{1, 3};
    const QuotientResult q = quotient(*p5, k);
    CHECK(q.complex->vertex_count() == 3);
    CHECK(q.vertex_map == std::vector<Vertex>{0, 0, 1, 1, 2});
    CHECK(q.complex->graph().edge_count() == 2);
    CHECK(*q.hyperplane_map[1] == 0);
    CHECK(*q.hyperplane_map[3] == 1);
    CHECK_FALSE(q.hyperplane_map[0].has_value());

    const QuotientResult none = quotient(*p5, std::vector<HyperplaneId>{});
    CHECK(none.complex->vertex_count() == 1);
    CHECK(none.complex->graph().edge_count() == 0);

    const auto g = complex_of(grid_graph(3, 4));
    std::vector<HyperplaneId> all(g->hyperplane_count());
    std::iota(all.begin(), all.end(), 0u);
    const QuotientResult full = quotient(*g, all);
    CHECK(full.complex->vertex_count() == g->vertex_count());
    CHECK(full.complex->graph().edge_count() == g->graph().edge_count());

    CHECK_THROWS_AS(quotient(*p5, std::vector<HyperplaneId>{9}), InvalidInput);
}

TEST_CASE("quotient keeps components and bases") {
    RawGraph raw = disjoint_union(path_graph(4), grid_graph(2, 3));
    raw.base[1] = 9;
    const auto cx = complex_of(raw);
    const QuotientResult q = quotient(*cx, std::vector<HyperplaneId>{0, 4});
    CHECK(q.complex->component_count() == 2);
    for (ComponentId c = 0; c < 2; ++c) CHECK(q.complex->graph().base(c) == q.vertex_map[cx->graph().base(c)]);
}

TEST_CASE("ultrafilter examples") {
    const auto sq = complex_of(grid_graph(2, 2));
    CHECK(enumerate_ultrafilters(Pocset::of_component(*sq, 0)).size() == 4);
    const auto p3 = complex_of(path_graph(3));
    const auto u3 = enumerate_ultrafilters(Pocset::of_component(*p3, 0));
    CHECK(u3.size() == 3);
    const std::set<Ultrafilter> s3(u3.begin(), u3.end());
    CHECK(s3.count(Ultrafilter{1, 0}) == 1);
    CHECK(s3.count(Ultrafilter{0, 1}) == 0);  // minus at e1, plus at e2
    const auto t = complex_of(tripod());
    CHECK(enumerate_ultrafilters(Pocset::of_component(*t, 0)).size() == 4);
}

TEST_CASE("abstract pocsets") {
    // Two opposite hyperplanes: three orientations (not both plus).
    const Pocset p(2, {Relation::equal, Relation::opposite, Relation::opposite, Relation::equal});
    CHECK(enumerate_ultrafilters(p).size() == 3);
    CHECK_THROWS_AS(Pocset(2, {Relation::equal, Relation::less, Relation::less, Relation::equal}), InvalidInput);
    const Pocset empty(0, {});
    CHECK(enumerate_ultrafilters(empty).size() == 1);
}

TEST_CASE("gate examples") {
    const auto sq = complex_of(grid_graph(2, 2));  // 0=00, 1=01, 2=10, 3=11
    const std::vector<Vertex> whole{0, 1, 2, 3}, corner{3}, edge{1, 3};
    CHECK(gate(*sq, 0, whole) == 0);
    CHECK(gate(*sq, 0, corner) == 3);
    CHECK(gate(*sq, 0, edge) == 1);
    CHECK_THROWS_AS(gate(*sq, 0, std::vector<Vertex>{}), PreconditionError);
    CHECK_THROWS_AS(gate(*sq, 0, std::vector<Vertex>{0, 3}), PreconditionError);
}

TEST_CASE("duality round trip on every instance") {
    for (const auto& inst : small_instances()) {
        CAPTURE(inst.name);
        const auto cx = complex_of(inst.raw);
        const auto& g = cx->graph();
        for (ComponentId c = 0; c < g.component_count(); ++c) {
            const auto ufs = enumerate_ultrafilters(Pocset::of_component(*cx, c));
            const auto vs = g.component_vertices(c);
            REQUIRE(ufs.size() == vs.size());
            if (cx->hyperplanes().in_component(c).size() <= 16)
                CHECK(std::set<Ultrafilter>(ufs.begin(), ufs.end()) == brute_ultrafilters(*cx, c));
            // v ↦ α_v is a bijection onto the ultrafilters preserving adjacency both ways.
            std::map<Ultrafilter, Vertex> index;
            for (Vertex i = 0; i < ufs.size(); ++i) index.emplace(ufs[i], i);
            const MedianGraph dual = validate_median(dual_graph(ufs));
            std::vector<Vertex> image(g.vertex_count());
            std::set<Vertex> hit;
            for (Vertex v : vs) {
                REQUIRE(index.count(sides(*cx, v)));
                image[v] = index.at(sides(*cx, v));
                hit.insert(image[v]);
            }
            CHECK(hit.size() == vs.size());
            for (Vertex a : vs)
                for (Vertex b : vs) CHECK(dual.dist(image[a], image[b]) == g.dist(a, b));
            CHECK(dual.base(0) == image[g.base(c)]);
        }
    }
}

TEST_CASE("quotient properties on every instance") {
    std::mt19937_64 rng(7);
    for (const auto& inst : small_instances()) {
        CAPTURE(inst.name);
        const auto cx = complex_of(inst.raw);
        const auto& g = cx->graph();
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<HyperplaneId> k;
            for (HyperplaneId h = 0; h < cx->hyperplane_count(); ++h)
                if (rng() % 2) k.push_back(h);
            const QuotientResult q = quotient(*cx, k);
            const auto& qg = q.complex->graph();
            // classes are equal sides over K
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                for (Vertex w = 0; w < g.vertex_count(); ++w) {
                    if (!g.same_component(v, w)) {
                        CHECK(q.vertex_map[v] != q.vertex_map[w]);
                        continue;
                    }
                    std::size_t differ = 0;
                    for (HyperplaneId h : k)
                        if (cx->hyperplanes()[h].component == g.component(v))
                            differ += cx->hyperplanes().on_plus_side(h, v) != cx->hyperplanes().on_plus_side(h, w);
                    CHECK((q.vertex_map[v] == q.vertex_map[w]) == (differ == 0));
                    CHECK(qg.dist(q.vertex_map[v], q.vertex_map[w]) == differ);
                    CHECK(qg.edge_between(q.vertex_map[v], q.vertex_map[w]).has_value() == (differ == 1));
                }
            // relations preserved by the hyperplane map
            for (HyperplaneId h : k)
                for (HyperplaneId j : k)
                    CHECK(q.complex->relations()(*q.hyperplane_map[h], *q.hyperplane_map[j]) == cx->relations()(h, j));
        }
    }
}

TEST_CASE("gates agree with distance minimisation") {
    std::mt19937_64 rng(11);
    for (const auto& inst : small_instances()) {
        CAPTURE(inst.name);
        const auto cx = complex_of(inst.raw);
        const auto& g = cx->graph();
        const auto& hs = cx->hyperplanes();
        for (int trial = 0; trial < 20; ++trial) {
            // Convex sets as intersections of random halfspaces around a random vertex.
            const Vertex centre = static_cast<Vertex>(rng() % g.vertex_count());
            const ComponentId c = g.component(centre);
            std::vector<Vertex> set;
            std::vector<std::pair<HyperplaneId, bool>> cuts;
            for (HyperplaneId h : hs.in_component(c))
                if (rng() % 3 == 0) cuts.emplace_back(h, hs.on_plus_side(h, centre));
            for (Vertex v : g.component_vertices(c)) {
                bool in = true;
                for (auto [h, side] : cuts) in = in && hs.on_plus_side(h, v) == side;
                if (in) set.push_back(v);
            }
            REQUIRE(is_convex(g, set));
            const auto vs = g.component_vertices(c);
            const Vertex o = vs[rng() % vs.size()];
            const Vertex x = gate(*cx, o, set);
            CHECK(x == gate_by_distance(*cx, o, set));
            CHECK(std::find(set.begin(), set.end(), x) != set.end());
            // nearest point is unique
            for (Vertex v : set)
                if (v != x) CHECK(g.dist(o, v) > g.dist(o, x));
            // idempotent: the gate of a member is itself
            CHECK(gate(*cx, x, set) == x);
        }
    }
}
