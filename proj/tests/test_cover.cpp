#include "cubecover/cover.hpp"
#include "cubecover/delta.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace testing;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

// Checks the cover properties directly from the graph: coverage, r-connectivity inside
// components, and distance > r between components of one level with different stars.
void check_cover_shape(const CubeComplex& cx, const CoverCertificate& cert) {
    const auto& g = cx.graph();
    const std::uint32_t r = static_cast<std::uint32_t>(mpz_class(cert.r.get_num() / cert.r.get_den()).get_ui());
    std::set<Vertex> covered;
    std::uint32_t widest = 0;
    REQUIRE(cert.levels.size() == cx.dimension() + 1);
    for (const auto& lv : cert.levels) {
        std::set<Vertex> in_level;
        for (const auto& comp : lv.components) {
            for (Vertex v : comp.vertices) {
                CHECK(in_level.insert(v).second);
                covered.insert(v);
            }
            // connected through steps of length ≤ r
            std::set<Vertex> reached{comp.vertices.front()};
            for (bool grew = true; grew;) {
                grew = false;
                for (Vertex v : comp.vertices)
                    if (!reached.count(v))
                        for (Vertex u : reached)
                            if (g.dist(u, v) <= r) {
                                reached.insert(v);
                                grew = true;
                                break;
                            }
            }
            CHECK(reached.size() == comp.vertices.size());
            std::uint32_t d = 0;
            for (Vertex a : comp.vertices)
                for (Vertex b : comp.vertices) d = std::max(d, g.dist(a, b));
            CHECK(d == comp.diameter);
            widest = std::max(widest, d);
        }
        CHECK(std::vector<Vertex>(in_level.begin(), in_level.end()) == lv.vertices);
        for (std::size_t i = 0; i < lv.components.size(); ++i)
            for (std::size_t j = i + 1; j < lv.components.size(); ++j)
                for (Vertex a : lv.components[i].vertices)
                    for (Vertex b : lv.components[j].vertices)
                        if (g.same_component(a, b)) CHECK(g.dist(a, b) > r);
    }
    CHECK(covered.size() == g.vertex_count());
    CHECK(widest == cert.max_diameter);
}

}  // namespace

TEST_CASE("cover epsilon") {
    CHECK(cover_epsilon(ExtendedRational(q(1, 4)), q(1)) == q(1, 8));
    CHECK(cover_epsilon(ExtendedRational::infinity(), q(3)) == 1);
    CHECK(cover_epsilon(ExtendedRational(q(4)), q(1)) == 1);
    CHECK_THROWS_AS(cover_epsilon(ExtendedRational(q(1, 4)), q(0)), PreconditionError);
}

TEST_CASE("single vertex cover") {
    const auto cx = complex_of(path_graph(1));
    const CoverCertificate cert = build_cover(cx, q(1));
    CHECK(cert.delta.is_infinite());
    CHECK(cert.epsilon == 1);
    REQUIRE(cert.levels.size() == 1);
    CHECK(cert.levels[0].vertices == std::vector<Vertex>{0});
    CHECK(cert.max_diameter == 0);
    CHECK(verify_certificate(cx, cert).empty());
}

TEST_CASE("path and grid covers") {
    const auto p9 = complex_of(path_graph(9));
    const CoverCertificate a = build_cover(p9, q(1));
    CHECK(a.levels.size() == 2);
    CHECK(a.delta.value() == q(1, 4));
    CHECK(a.epsilon == q(1, 8));
    CHECK(a.N == 4);
    check_cover_shape(*p9, a);
    CHECK(verify_certificate(p9, a).empty());

    const auto g8 = complex_of(grid_graph(8, 8));
    const CoverCertificate b = build_cover(g8, q(2));
    CHECK(b.levels.size() == 3);
    CHECK(b.epsilon == compute_delta(2).value() / 3);
    check_cover_shape(*g8, b);
    CHECK(verify_certificate(g8, b).empty());
}

TEST_CASE("a long path gives a nontrivial cover") {
    const auto p40 = complex_of(path_graph(40));
    const CoverCertificate cert = build_cover(p40, q(1));
    check_cover_shape(*p40, cert);
    CHECK(verify_certificate(p40, cert).empty());
    CHECK(cert.levels[0].components.size() >= 2);
    CHECK_FALSE(cert.levels[1].vertices.empty());
    CHECK(cert.max_diameter < 39);
}

TEST_CASE("covers on every instance") {
    for (const auto& inst : small_instances()) {
        CAPTURE(inst.name);
        const auto cx = complex_of(inst.raw);
        if (cx->dimension() > 2) continue;
        const CoverCertificate cert = build_cover(cx, q(1));
        check_cover_shape(*cx, cert);
        CHECK(verify_certificate(cx, cert).empty());
    }
}

TEST_CASE("certificate json") {
    const auto p40 = complex_of(path_graph(40));
    const CoverCertificate cert = build_cover(p40, q(1));
    const json doc = certificate_to_json(cert);
    CHECK(doc.at("r") == "1/1");
    CHECK(doc.at("delta") == "1/4");
    const CoverCertificate back = certificate_from_json(json::parse(doc.dump()));
    CHECK(certificate_to_json(back) == doc);
    CHECK(verify_certificate(p40, back).empty());

    const CoverCertificate point = build_cover(complex_of(path_graph(1)), q(1));
    CHECK(certificate_to_json(point).at("delta") == "inf");
    CHECK(certificate_from_json(certificate_to_json(point)).delta.is_infinite());
    CHECK_THROWS_AS(certificate_from_json(json{{"r", "1"}}), InvalidInput);
}

TEST_CASE("tampered certificates are rejected") {
    const auto p40 = complex_of(path_graph(40));
    const CoverCertificate cert = build_cover(p40, q(1));
    REQUIRE(cert.levels[0].components.size() >= 2);

    auto rejects = [&](CoverCertificate bad) { return !verify_certificate(p40, bad).empty(); };
    {
        CoverCertificate bad = cert;
        bad.epsilon = q(1, 2);
        CHECK(rejects(bad));
    }
    {
        CoverCertificate bad = cert;
        bad.N += 1;
        CHECK(rejects(bad));
    }
    {
        CoverCertificate bad = cert;
        bad.max_diameter += 1;
        CHECK(rejects(bad));
    }
    {
        CoverCertificate bad = cert;
        bad.levels[0].components[0].diameter += 1;
        CHECK(rejects(bad));
    }
    {
        CoverCertificate bad = cert;
        bad.levels[0].components[0].star = bad.levels[0].components[1].star;
        CHECK(rejects(bad));
    }
    {
        CoverCertificate bad = cert;
        auto& a = bad.levels[0].components[0].vertices;
        auto& b = bad.levels[0].components[1].vertices;
        b.push_back(a.back());
        a.pop_back();
        CHECK(rejects(bad));
    }
    {
        CoverCertificate bad = cert;
        bad.levels[1].vertices.pop_back();
        CHECK(rejects(bad));
    }
    {
        CoverCertificate bad = cert;
        bad.levels.pop_back();
        CHECK(rejects(bad));
    }
    {
        CoverCertificate bad = cert;
        bad.levels[0].components.pop_back();
        CHECK(rejects(bad));
    }
}
