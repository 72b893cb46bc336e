#include "cubecover/projection.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace testing;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

FinSupportPoint point(std::initializer_list<std::pair<HyperplaneId, Rational>> entries) {
    FinSupportPoint p;
    for (const auto& [h, v] : entries) p.set(h, v);
    return p;
}

// A random strict order on pairs: compare salted hashes, then the pairs themselves.
PairOrder random_order(std::uint64_t salt) {
    return [salt](const HyperplanePair& a, const HyperplanePair& b) {
        auto key = [salt](const HyperplanePair& p) {
            std::uint64_t x = salt ^ (static_cast<std::uint64_t>(p.first) << 32 | p.second);
            x ^= x >> 33;
            x *= 0xff51afd7ed558ccdULL;
            x ^= x >> 33;
            return x;
        };
        const auto ka = key(a), kb = key(b);
        return ka != kb ? ka < kb : a < b;
    };
}

// p_F for F the initial op-support plus random inactive opposite pairs, swept once in order.
FinSupportPoint sweep_op(const CubeComplex& cx, FinSupportPoint xi, const PairOrder& order, std::mt19937_64& rng) {
    std::vector<HyperplanePair> f = pair_support(cx, xi).op_pairs;
    for (HyperplaneId h = 0; h < cx.hyperplane_count(); ++h)
        for (HyperplaneId k = h + 1; k < cx.hyperplane_count(); ++k)
            if (cx.relations().opposite(h, k) && rng() % 4 == 0 && std::find(f.begin(), f.end(), HyperplanePair{h, k}) == f.end())
                f.emplace_back(h, k);
    std::sort(f.begin(), f.end(), order);
    for (auto [h, k] : f) xi = p_op_pair(cx, xi, h, k);
    return xi;
}

// p_F for F the initial <-support plus random extra pairs, swept once by decreasing carrier
// distance with ties in `tie` order.
FinSupportPoint sweep_less(const CubeComplex& cx, FinSupportPoint xi, const PairOrder& tie, std::mt19937_64& rng) {
    std::vector<HyperplanePair> f = pair_support(cx, xi).less_pairs;
    for (HyperplaneId h = 0; h < cx.hyperplane_count(); ++h)
        for (HyperplaneId k : cx.relations().above(h))
            if (rng() % 4 == 0 && std::find(f.begin(), f.end(), HyperplanePair{h, k}) == f.end()) f.emplace_back(h, k);
    std::sort(f.begin(), f.end(), [&](const HyperplanePair& a, const HyperplanePair& b) {
        const auto da = cx.carrier_distance(a.first, a.second), db = cx.carrier_distance(b.first, b.second);
        return da != db ? da > db : tie(a, b);
    });
    for (auto [h, k] : f) xi = p_less_pair(cx, xi, h, k);
    return xi;
}

std::set<HyperplanePair> as_set(const std::vector<HyperplanePair>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("elementary moves") {
    const auto t = complex_of(tripod());  // h_a = 0 < h_b = 1, h_d = 2; h_b, h_d opposite
    auto op = [&](Rational x, Rational y) { return p_op_pair(*t, point({{1, x}, {2, y}}), 1, 2); };
    CHECK(op(q(3, 5), q(3, 10)) == point({{1, q(3, 10)}}));
    CHECK(op(q(0), q(1, 3)) == point({{2, q(1, 3)}}));
    CHECK(op(q(1, 3), q(1, 3)) == point({}));
    CHECK(op(q(1, 5), q(1, 2)) == point({{2, q(3, 10)}}));
    CHECK_THROWS_AS(p_op_pair(*t, point({}), 0, 1), PreconditionError);

    auto less = [&](Rational x, Rational y) { return p_less_pair(*t, point({{0, x}, {1, y}}), 0, 1); };
    CHECK(less(q(1, 4), q(1, 4)) == point({{0, q(1, 2)}}));
    CHECK(less(q(3, 4), q(1, 2)) == point({{0, q(1)}, {1, q(1, 4)}}));
    CHECK(less(q(1), q(2, 7)) == point({{0, q(1)}, {1, q(2, 7)}}));
    CHECK_THROWS_AS(p_less_pair(*t, point({}), 1, 0), PreconditionError);
    CHECK_THROWS_AS(p_less_pair(*t, point({}), 1, 2), PreconditionError);
}

TEST_CASE("projection examples") {
    const auto t = complex_of(tripod());
    const FinSupportPoint xi = point({{1, q(3, 5)}, {2, q(3, 10)}});
    const FinSupportPoint after_op = project_op(*t, xi);
    CHECK(after_op == point({{1, q(3, 10)}}));
    CHECK(project_less(*t, after_op) == point({{0, q(3, 10)}}));
    CHECK_THROWS_AS(project_less(*t, xi), PreconditionError);
    const CubePoint p = project(*t, xi);
    CHECK(p.vertex == 0);
    CHECK(p.frac == std::map<HyperplaneId, Rational>{{0, q(3, 10)}});
    CHECK(project(*t, point({})) == CubePoint{0, {}});

    const auto sq = complex_of(grid_graph(2, 2));
    const FinSupportPoint crossing = point({{0, q(1, 3)}, {1, q(2, 3)}});
    CHECK(project_op(*sq, crossing) == crossing);

    const auto p5 = complex_of(path_graph(5));
    for (Vertex v = 0; v < 5; ++v) {
        CHECK(pair_support(*p5, iota(*p5, v)).less_pairs.empty());
        CHECK(project_less(*p5, iota(*p5, v)) == iota(*p5, v));
    }
}

TEST_CASE("the result depends on the pair order") {
    // Root 0 with children 1, 2; vertex 1 with children 3, 4. The edges 1-3, 1-4 and 0-2
    // are pairwise opposite.
    const auto tree = complex_of(tree_graph(2, 2));
    const auto& g = tree->graph();
    const HyperplaneId a = tree->hyperplanes().of_edge(*g.edge_between(1, 3));
    const HyperplaneId b = tree->hyperplanes().of_edge(*g.edge_between(1, 4));
    const HyperplaneId c = tree->hyperplanes().of_edge(*g.edge_between(0, 2));
    REQUIRE(tree->relations().opposite(a, b));
    REQUIRE(tree->relations().opposite(a, c));
    REQUIRE(tree->relations().opposite(b, c));
    const FinSupportPoint xi = point({{a, q(1, 2)}, {b, q(3, 10)}, {c, q(2, 5)}});
    auto first = [](HyperplanePair p) {
        return [p](const HyperplanePair& x, const HyperplanePair& y) { return x == p ? y != p : (y == p ? false : x < y); };
    };
    const FinSupportPoint ab = project_op(*tree, xi, first({std::min(a, b), std::max(a, b)}));
    const FinSupportPoint ac = project_op(*tree, xi, first({std::min(a, c), std::max(a, c)}));
    CHECK(ab == point({{c, q(1, 5)}}));
    CHECK(ac == point({{b, q(1, 5)}}));

    // Square with a pendant edge above both square hyperplanes, at equal carrier distance.
    RawGraph raw = grid_graph(2, 2);
    raw.vertex_count = 5;
    raw.edges.emplace_back(3, 4);
    const auto tail = complex_of(raw);
    const HyperplaneId top = tail->hyperplanes().of_edge(*tail->graph().edge_between(3, 4));
    const FinSupportPoint up = point({{top, q(1, 2)}});
    const FinSupportPoint x0 = project_less(*tail, up, first({0, top}));
    const FinSupportPoint x1 = project_less(*tail, up, first({1, top}));
    CHECK(x0 == point({{0, q(1, 2)}}));
    CHECK(x1 == point({{1, q(1, 2)}}));
    CHECK(l1_distance(x0, x1).value() == 1);
}

TEST_CASE("pair supports") {
    const auto t = complex_of(tripod());
    const PairSupport s = pair_support(*t, point({{1, q(1, 2)}, {2, q(1, 4)}}));
    CHECK(s.op_pairs == std::vector<HyperplanePair>{{1, 2}});
    CHECK(as_set(s.less_pairs) == std::set<HyperplanePair>{{0, 1}, {0, 2}});
    CHECK(pair_support(*t, point({{0, q(1)}, {1, q(1, 2)}})).less_pairs.empty());
}

TEST_CASE("projection properties on every instance") {
    std::mt19937_64 rng(23);
    for (const auto& inst : small_instances()) {
        CAPTURE(inst.name);
        const auto cx = complex_of(inst.raw);
        for (Vertex v = 0; v < cx->vertex_count(); ++v) CHECK(project(*cx, iota(*cx, v)) == CubePoint{v, {}});

        const int samples = 60;
        std::vector<FinSupportPoint> pts;
        std::vector<FinSupportPoint> images;
        for (int i = 0; i < samples; ++i) {
            const ComponentId c = static_cast<ComponentId>(rng() % cx->component_count());
            FinSupportPoint xi = random_point(*cx, rng, c);
            const FinSupportPoint p = project_point(*cx, xi);
            const PairSupport s = pair_support(*cx, p);
            CHECK(s.op_pairs.empty());
            CHECK(s.less_pairs.empty());
            CHECK(project_point(*cx, p) == p);
            CHECK(encode(*cx, project(*cx, xi)) == p);

            // For each fixed order, sweeping any superset of the support in that order gives
            // the same result as the library's schedule, and the result is a cube point.
            const FinSupportPoint op = project_op(*cx, xi);
            for (int k = 0; k < 20; ++k) {
                const PairOrder order = random_order(rng());
                const FinSupportPoint a = project_op(*cx, xi, order);
                CHECK(a == sweep_op(*cx, xi, order, rng));
                CHECK(pair_support(*cx, a).op_pairs.empty());
                const FinSupportPoint b = project_less(*cx, a, order);
                CHECK(b == sweep_less(*cx, a, order, rng));
                CHECK_NOTHROW(decode(*cx, b));
            }
            for (int k = 0; k < 5; ++k) {
                const PairOrder tie = random_order(rng());
                CHECK(project_less(*cx, op, tie) == sweep_less(*cx, op, tie, rng));
            }
            pts.push_back(std::move(xi));
            images.push_back(p);
        }
        for (int i = 0; i < samples; ++i)
            for (int j = 0; j < samples; ++j) {
                const auto before = l1_distance(pts[i], pts[j]);
                if (before.is_infinite()) continue;
                CHECK(l1_distance(images[i], images[j]).value() <= before.value());
            }
    }
}

TEST_CASE("supports shrink under the scheduled moves") {
    std::mt19937_64 rng(29);
    for (const auto& inst : small_instances()) {
        CAPTURE(inst.name);
        const auto cx = complex_of(inst.raw);
        for (int trial = 0; trial < 40; ++trial) {
            const ComponentId c = static_cast<ComponentId>(rng() % cx->component_count());
            FinSupportPoint xi = random_point(*cx, rng, c);
            for (;;) {
                const auto ops = pair_support(*cx, xi).op_pairs;
                if (ops.empty()) break;
                const HyperplanePair least = *std::min_element(ops.begin(), ops.end());
                const FinSupportPoint next = p_op_pair(*cx, xi, least.first, least.second);
                auto shrunk = as_set(ops);
                shrunk.erase(least);
                const auto after = as_set(pair_support(*cx, next).op_pairs);
                CHECK(std::includes(shrunk.begin(), shrunk.end(), after.begin(), after.end()));
                xi = next;
            }
            for (;;) {
                const auto lesses = pair_support(*cx, xi).less_pairs;
                if (lesses.empty()) break;
                HyperplanePair far = lesses.front();
                for (const auto& pr : lesses)
                    if (cx->carrier_distance(pr.first, pr.second) > cx->carrier_distance(far.first, far.second)) far = pr;
                const FinSupportPoint next = p_less_pair(*cx, xi, far.first, far.second);
                auto shrunk = as_set(lesses);
                shrunk.erase(far);
                const auto after = as_set(pair_support(*cx, next).less_pairs);
                CHECK(std::includes(shrunk.begin(), shrunk.end(), after.begin(), after.end()));
                xi = next;
            }
        }
    }
}
