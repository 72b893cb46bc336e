#include "cubecover/cube_space.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace testing;

namespace {

FinSupportPoint point(ComponentId c, std::initializer_list<std::pair<HyperplaneId, Rational>> entries) {
    FinSupportPoint p;
    p.component = c;
    for (const auto& [h, v] : entries) p.set(h, v);
    return p;
}

Rational q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST_CASE("iota examples") {
    const auto p5 = complex_of(path_graph(5));
    CHECK(iota(*p5, 0).entries.empty());
    CHECK(iota(*p5, 2) == point(0, {{0, q(1)}, {1, q(1)}}));
    const auto g = complex_of(grid_graph(3, 3));
    const auto x = iota(*g, 7);
    CHECK(x.entries.size() == 3);
    for (const auto& [h, v] : x.entries) CHECK(v == 1);
}

TEST_CASE("l1 distance examples") {
    const auto p5 = complex_of(path_graph(5));
    CHECK(l1_distance(iota(*p5, 3), iota(*p5, 3)).value() == 0);
    CHECK(l1_distance(iota(*p5, 1), iota(*p5, 4)).value() == 3);
    CHECK(l1_distance(point(0, {{0, q(1, 2)}}), point(0, {{0, q(1, 3)}, {1, q(1, 4)}})).value() == q(5, 12));
    CHECK(l1_distance(point(0, {}), point(1, {})).is_infinite());
}

TEST_CASE("decode examples") {
    const auto p5 = complex_of(path_graph(5));
    for (Vertex v = 0; v < 5; ++v) CHECK(decode(*p5, iota(*p5, v)) == CubePoint{v, {}});
    const CubePoint mid = decode(*p5, point(0, {{0, q(1)}, {1, q(1, 2)}}));
    CHECK(mid.vertex == 1);
    CHECK(mid.frac == std::map<HyperplaneId, Rational>{{1, q(1, 2)}});

    const auto t = complex_of(tripod());
    try {
        decode(*t, point(0, {{1, q(1, 2)}, {2, q(1, 2)}}));
        FAIL("expected NotInImage");
    } catch (const NotInImage& e) {
        CHECK(e.reason() == NotInImage::Reason::frac_not_crossing);
    }
    // full coordinates on opposite hyperplanes name no vertex
    try {
        decode(*t, point(0, {{0, q(1)}, {1, q(1)}, {2, q(1)}}));
        FAIL("expected NotInImage");
    } catch (const NotInImage& e) {
        CHECK(e.reason() == NotInImage::Reason::no_vertex_for_ones);
    }
    // a fraction on a hyperplane not adjacent to the corner
    try {
        decode(*p5, point(0, {{2, q(1, 2)}}));
        FAIL("expected NotInImage");
    } catch (const NotInImage& e) {
        CHECK(e.reason() == NotInImage::Reason::no_cube_at_vertex);
    }
}

TEST_CASE("check_point") {
    const auto two = complex_of(disjoint_union(path_graph(3), path_graph(3)));
    CHECK_NOTHROW(check_point(*two, point(1, {{2, q(1, 2)}})));
    CHECK_THROWS_AS(check_point(*two, point(0, {{2, q(1, 2)}})), InvalidInput);
    FinSupportPoint bad;
    bad.entries[0] = q(3, 2);
    CHECK_THROWS_AS(check_point(*two, bad), InvalidInput);
    CHECK_THROWS_AS(check_point(*two, point(0, {{9, q(1, 2)}})), InvalidInput);
}

TEST_CASE("iota is an isometry on every instance") {
    for (const auto& inst : small_instances()) {
        CAPTURE(inst.name);
        const auto cx = complex_of(inst.raw);
        const auto d = bfs_oracle(inst.raw);
        for (Vertex x = 0; x < cx->vertex_count(); ++x)
            for (Vertex y = 0; y < cx->vertex_count(); ++y) {
                const auto l1 = l1_distance(iota(*cx, x), iota(*cx, y));
                if (d[x][y] == UINT32_MAX)
                    CHECK(l1.is_infinite());
                else
                    CHECK(l1.value() == d[x][y]);
            }
    }
}

TEST_CASE("decode inverts encode and the metric is a metric") {
    std::mt19937_64 rng(3);
    for (const auto& inst : small_instances()) {
        CAPTURE(inst.name);
        const auto cx = complex_of(inst.raw);
        std::vector<FinSupportPoint> pts;
        for (int i = 0; i < 1000 / 19 + 1; ++i) {
            const CubePoint p = random_cube_point(*cx, rng);
            const FinSupportPoint xi = encode(*cx, p);
            CHECK_NOTHROW(check_point(*cx, xi));
            CHECK(decode(*cx, xi) == p);
            pts.push_back(xi);
        }
        for (const auto& a : pts)
            for (const auto& b : pts) {
                const auto ab = l1_distance(a, b);
                CHECK(ab == l1_distance(b, a));
                if (ab.is_infinite()) continue;
                CHECK((ab.value() == 0) == (a == b));
                for (int k = 0; k < 3; ++k) {
                    const auto& c = pts[rng() % pts.size()];
                    const auto ac = l1_distance(a, c), cb = l1_distance(c, b);
                    if (ac.is_finite()) CHECK(ab.value() <= ac.value() + cb.value());
                }
            }
    }
}
