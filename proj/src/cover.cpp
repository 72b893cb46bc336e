#include "cubecover/cover.hpp"

#include "cubecover/delta.hpp"
#include "cubecover/error.hpp"
#include "cubecover/parallel.hpp"
#include "cubecover/triangulation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace cubecover {

namespace {

// Floor of a positive rational as a graph distance threshold.
std::uint32_t distance_threshold(const Rational& r) {
    mpz_class q = r.get_num() / r.get_den();
    return q.fits_uint_p() ? static_cast<std::uint32_t>(q.get_ui()) : MedianGraph::kInfinity - 1;
}

// Star of f(x) at each level; at most one per level since same-level stars are disjoint.
std::map<std::uint32_t, std::string> level_stars(const CubeComplex& target, const FinSupportPoint& image) {
    std::map<std::uint32_t, std::string> out;
    for (const T1Vertex& w : star_witnesses(target, decode(target, image)))
        if (!out.emplace(w.level(), w.id()).second)
            throw PropertyViolation("a point lies in two stars of level " + std::to_string(w.level()));
    return out;
}

std::uint32_t diameter_of(const MedianGraph& g, std::span<const Vertex> vs) {
    std::uint32_t d = 0;
    for (Vertex a : vs)
        for (Vertex b : vs) d = std::max(d, g.dist(a, b));
    return d;
}

}  // namespace

Rational cover_epsilon(const ExtendedRational& delta, const Rational& r) {
    if (sgn(r) <= 0) throw PreconditionError("r must be positive");
    if (delta.is_infinite()) return 1;
    Rational eps = delta.value() / (r + 1);
    return eps > 1 ? Rational(1) : eps;
}

CoverCertificate build_cover(ComplexPtr cx, const Rational& r, const CoverOptions& options) {
    CoverCertificate cert;
    cert.r = r;
    const std::uint32_t dim = cx->dimension();
    cert.delta = compute_delta_upto(dim);
    cert.epsilon = cover_epsilon(cert.delta, r);
    const TowerMap tm = build_tower(cx, cert.epsilon, options.tower);
    cert.N = tm.N;
    const auto images = apply_all(tm, options.tower.threads);
    const auto& g = cx->graph();

    std::vector<std::map<std::uint32_t, std::string>> stars(g.vertex_count());
    parallel_for(g.vertex_count(), options.tower.threads,
                 [&](std::size_t v) { stars[v] = level_stars(tm.target(), images[v]); });

    const std::uint32_t threshold = distance_threshold(r);
    for (std::uint32_t level = 0; level <= dim; ++level) {
        CoverLevel lv;
        lv.level = level;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (stars[v].count(level)) lv.vertices.push_back(v);

        // Union-find over pairs within distance r.
        std::vector<std::size_t> parent(lv.vertices.size());
        std::iota(parent.begin(), parent.end(), 0u);
        auto find = [&](std::size_t i) {
            while (parent[i] != i) i = parent[i] = parent[parent[i]];
            return i;
        };
        for (std::size_t i = 0; i < lv.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < lv.vertices.size(); ++j)
                if (g.dist(lv.vertices[i], lv.vertices[j]) <= threshold) parent[find(i)] = find(j);

        std::map<std::size_t, std::vector<Vertex>> groups;
        for (std::size_t i = 0; i < lv.vertices.size(); ++i) groups[find(i)].push_back(lv.vertices[i]);
        for (auto& [root, members] : groups) {
            CoverComponent comp;
            comp.vertices = std::move(members);
            comp.diameter = diameter_of(g, comp.vertices);
            comp.star = stars[comp.vertices.front()].at(level);
            for (Vertex v : comp.vertices)
                if (stars[v].at(level) != comp.star)
                    throw PropertyViolation("an r-component of U_" + std::to_string(level) + " meets two stars");
            cert.max_diameter = std::max(cert.max_diameter, comp.diameter);
            lv.components.push_back(std::move(comp));
        }
        std::sort(lv.components.begin(), lv.components.end(),
                  [](const auto& a, const auto& b) { return a.vertices.front() < b.vertices.front(); });
        cert.levels.push_back(std::move(lv));
    }
    return cert;
}

std::vector<std::string> verify_certificate(ComplexPtr cx, const CoverCertificate& cert,
                                            const CoverOptions& options) {
    std::vector<std::string> fail;
    const auto& g = cx->graph();
    const std::uint32_t dim = cx->dimension();

    if (sgn(cert.r) <= 0) return {"r is not positive"};
    const ExtendedRational delta = compute_delta_upto(dim);
    if (!(delta == cert.delta)) fail.push_back("delta differs from the recomputed " + to_string(delta));
    if (cert.epsilon != cover_epsilon(delta, cert.r)) fail.push_back("epsilon is not min(1, delta/(r+1))");
    if (cert.levels.size() != dim + 1) fail.push_back("expected " + std::to_string(dim + 1) + " levels");
    if (!fail.empty()) return fail;

    // f and star membership from scratch.
    const TowerMap tm = build_tower(cx, cert.epsilon, options.tower);
    if (tm.N != cert.N) fail.push_back("N differs from the recomputed " + std::to_string(tm.N));
    const auto images = apply_all(tm, options.tower.threads);
    std::vector<std::vector<T1Vertex>> witnesses(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        try {
            witnesses[v] = star_witnesses(tm.target(), decode(tm.target(), images[v]));
        } catch (const NotInImage& e) {
            fail.push_back("f(" + std::to_string(v) + ") does not decode: " + e.what());
            return fail;
        }
    }
    auto in_star = [&](Vertex v, std::uint32_t level, const std::string& star) {
        return std::any_of(witnesses[v].begin(), witnesses[v].end(),
                           [&](const T1Vertex& w) { return w.level() == level && w.id() == star; });
    };

    const std::uint32_t threshold = distance_threshold(cert.r);
    std::vector<char> covered(g.vertex_count(), 0);
    std::uint32_t max_diam = 0;
    for (std::uint32_t level = 0; level <= dim; ++level) {
        const CoverLevel& lv = cert.levels[level];
        const std::string tag = "U_" + std::to_string(level);
        if (lv.level != level) fail.push_back(tag + " is out of order");

        std::set<Vertex> expected;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            for (const T1Vertex& w : witnesses[v])
                if (w.level() == level) expected.insert(v);
        if (std::set<Vertex>(lv.vertices.begin(), lv.vertices.end()) != expected)
            fail.push_back(tag + " is not the preimage of S_" + std::to_string(level));
        for (Vertex v : expected) covered[v] = 1;

        // r-components by breadth-first search over the expected set.
        std::map<Vertex, std::size_t> label;
        std::vector<std::set<Vertex>> comps;
        for (Vertex s : expected) {
            if (label.count(s)) continue;
            comps.emplace_back();
            std::deque<Vertex> queue{s};
            label[s] = comps.size() - 1;
            while (!queue.empty()) {
                const Vertex u = queue.front();
                queue.pop_front();
                comps.back().insert(u);
                for (Vertex w : expected)
                    if (!label.count(w) && g.dist(u, w) <= threshold) {
                        label[w] = comps.size() - 1;
                        queue.push_back(w);
                    }
            }
        }
        std::set<std::set<Vertex>> claimed;
        for (const CoverComponent& c : lv.components) {
            claimed.emplace(c.vertices.begin(), c.vertices.end());
            for (Vertex v : c.vertices)
                if (v >= g.vertex_count() || !in_star(v, level, c.star)) {
                    fail.push_back(tag + ": vertex " + std::to_string(v) + " is not in star " + c.star);
                    break;
                }
            std::uint32_t d = 0;
            for (Vertex a : c.vertices)
                for (Vertex b : c.vertices)
                    if (a < g.vertex_count() && b < g.vertex_count()) d = std::max(d, g.dist(a, b));
            if (d != c.diameter) fail.push_back(tag + ": a component has diameter " + std::to_string(d));
            if (d == MedianGraph::kInfinity) fail.push_back(tag + ": a component has infinite diameter");
            max_diam = std::max(max_diam, d);
        }
        if (claimed != std::set<std::set<Vertex>>(comps.begin(), comps.end()))
            fail.push_back(tag + ": components are not the r-components");

        // Separation: distinct stars of one level are more than r apart, and their images
        // at least δ apart.
        for (const CoverComponent& a : lv.components)
            for (const CoverComponent& b : lv.components) {
                if (&a == &b || a.star == b.star) continue;
                for (Vertex x : a.vertices)
                    for (Vertex y : b.vertices) {
                        if (!g.same_component(x, y)) continue;
                        if (g.dist(x, y) <= threshold)
                            fail.push_back(tag + ": vertices in distinct stars within distance r");
                        if (delta.is_finite() && l1_distance(images[x], images[y]).value() < delta.value())
                            fail.push_back(tag + ": images in distinct stars closer than delta");
                    }
            }
    }
    if (std::find(covered.begin(), covered.end(), 0) != covered.end()) fail.push_back("some vertex is uncovered");
    if (max_diam != cert.max_diameter) fail.push_back("max_diameter differs from the recomputed " + std::to_string(max_diam));
    return fail;
}

json certificate_to_json(const CoverCertificate& cert) {
    json levels = json::array();
    for (const CoverLevel& lv : cert.levels) {
        json comps = json::array();
        for (const CoverComponent& c : lv.components)
            comps.push_back(json{{"vertices", c.vertices}, {"diameter", c.diameter}, {"star", c.star}});
        levels.push_back(json{{"level", lv.level}, {"vertices", lv.vertices}, {"components", std::move(comps)}});
    }
    return json{{"r", to_string(cert.r)},
                {"delta", to_string(cert.delta)},
                {"epsilon", to_string(cert.epsilon)},
                {"N", cert.N},
                {"levels", std::move(levels)},
                {"max_diameter", cert.max_diameter}};
}

CoverCertificate certificate_from_json(const json& doc) {
    try {
        CoverCertificate cert;
        cert.r = parse_rational(doc.at("r").get<std::string>());
        const std::string delta = doc.at("delta").get<std::string>();
        cert.delta = delta == "inf" ? ExtendedRational::infinity() : ExtendedRational(parse_rational(delta));
        cert.epsilon = parse_rational(doc.at("epsilon").get<std::string>());
        cert.N = doc.at("N").get<std::uint32_t>();
        cert.max_diameter = doc.at("max_diameter").get<std::uint32_t>();
        for (const auto& l : doc.at("levels")) {
            CoverLevel lv;
            lv.level = l.at("level").get<std::uint32_t>();
            lv.vertices = l.at("vertices").get<std::vector<Vertex>>();
            for (const auto& c : l.at("components"))
                lv.components.push_back(CoverComponent{c.at("vertices").get<std::vector<Vertex>>(),
                                                       c.at("diameter").get<std::uint32_t>(),
                                                       c.at("star").get<std::string>()});
            cert.levels.push_back(std::move(lv));
        }
        return cert;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed certificate: ") + e.what());
    }
}

}  // namespace cubecover
