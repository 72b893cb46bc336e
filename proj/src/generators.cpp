#include "cubecover/generators.hpp"

#include "cubecover/complex.hpp"
#include "cubecover/error.hpp"
#include "cubecover/io.hpp"
#include "cubecover/pocset.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace cubecover {

RawGraph grid_graph(std::uint32_t n, std::uint32_t m) {
    if (n == 0 || m == 0) throw InvalidInput("grid sides must be positive");
    RawGraph g;
    g.vertex_count = static_cast<std::size_t>(n) * m;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < m; ++j) {
            const Vertex v = i * m + j;
            if (j + 1 < m) g.edges.emplace_back(v, v + 1);
            if (i + 1 < n) g.edges.emplace_back(v, v + m);
        }
    return g;
}

RawGraph hypercube_grid_graph(std::uint32_t side, std::uint32_t dim) {
    if (side == 0) throw InvalidInput("side must be positive");
    std::size_t count = 1;
    for (std::uint32_t i = 0; i < dim; ++i) {
        count *= side;
        if (count > 1'000'000) throw InvalidInput("hypercube grid too large");
    }
    RawGraph g;
    g.vertex_count = count;
    for (std::size_t v = 0; v < count; ++v) {
        std::size_t stride = 1;
        for (std::uint32_t i = 0; i < dim; ++i, stride *= side)
            if ((v / stride) % side + 1 < side)
                g.edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(v + stride));
    }
    return g;
}

RawGraph path_graph(std::uint32_t n) {
    if (n == 0) throw InvalidInput("path needs at least one vertex");
    RawGraph g;
    g.vertex_count = n;
    for (Vertex v = 0; v + 1 < n; ++v) g.edges.emplace_back(v, v + 1);
    return g;
}

RawGraph cycle_graph(std::uint32_t n) {
    if (n < 3) throw InvalidInput("cycle needs at least three vertices");
    RawGraph g = path_graph(n);
    g.edges.emplace_back(n - 1, 0);
    return g;
}

RawGraph tree_graph(std::uint32_t depth, std::uint32_t arity) {
    if (arity == 0 && depth > 0) throw InvalidInput("tree arity must be positive");
    RawGraph g;
    std::vector<Vertex> layer{0};
    g.vertex_count = 1;
    for (std::uint32_t d = 0; d < depth; ++d) {
        std::vector<Vertex> next;
        for (Vertex parent : layer)
            for (std::uint32_t a = 0; a < arity; ++a) {
                const Vertex child = static_cast<Vertex>(g.vertex_count++);
                g.edges.emplace_back(parent, child);
                next.push_back(child);
            }
        layer = std::move(next);
        if (g.vertex_count > 1'000'000) throw InvalidInput("tree too large");
    }
    return g;
}

RawGraph staircase_graph(std::uint32_t n) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, Vertex> id;
    for (std::uint32_t i = 0; i <= n; ++i)
        for (std::uint32_t j = 0; i + j <= n; ++j) id.emplace(std::pair{i, j}, static_cast<Vertex>(id.size()));
    RawGraph g;
    g.vertex_count = id.size();
    for (const auto& [p, v] : id) {
        if (auto it = id.find({p.first + 1, p.second}); it != id.end()) g.edges.emplace_back(v, it->second);
        if (auto it = id.find({p.first, p.second + 1}); it != id.end()) g.edges.emplace_back(v, it->second);
    }
    return g;
}

RawGraph strip_gluing_graph(std::uint32_t length, std::uint32_t strips) {
    if (length < 2) throw InvalidInput("strip length must be at least 2");
    if (strips >= length) throw InvalidInput("strip_gluing needs strips < length");
    RawGraph g;
    // Bottom line 0..L-1, top of the first strip L..2L-1.
    g.vertex_count = 2 * static_cast<std::size_t>(length);
    for (Vertex k = 0; k < length; ++k) {
        g.edges.emplace_back(k, length + k);
        if (k + 1 < length) {
            g.edges.emplace_back(k, k + 1);
            g.edges.emplace_back(length + k, length + k + 1);
        }
    }
    for (std::uint32_t s = 1; s <= strips; ++s) {
        const Vertex first_top = static_cast<Vertex>(g.vertex_count);
        for (Vertex k = s; k < length; ++k) {
            const Vertex top = first_top + (k - s);
            g.edges.emplace_back(k, top);
            if (k > s) g.edges.emplace_back(top - 1, top);
        }
        g.vertex_count += length - s;
    }
    return g;
}

namespace {

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::optional<RawGraph> try_random_pocset(std::mt19937_64& rng, const RandomPocsetParams& p) {
    const std::size_t n = p.hyperplanes;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);

    // less[a][b]: a < b.
    std::vector<std::vector<char>> less(n, std::vector<char>(n, 0)), opp(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (uniform01(rng) < p.p_less) less[perm[i]][perm[j]] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (less[i][k] && less[k][j]) less[i][j] = 1;
    auto related = [&](std::size_t a, std::size_t b) { return less[a][b] || less[b][a]; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!related(i, j) && uniform01(rng) < p.p_opposite) opp[i][j] = opp[j][i] = 1;
    // h opposite k and h < h' force h' opposite k (h'^+ ⊂ h^+).
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t k = 0; k < n; ++k) {
                if (!opp[h][k]) continue;
                for (std::size_t h2 = 0; h2 < n; ++h2) {
                    if (!less[h][h2] || opp[h2][k]) continue;
                    if (h2 == k || related(h2, k)) return std::nullopt;
                    opp[h2][k] = opp[k][h2] = 1;
                    changed = true;
                }
            }
    }

    std::vector<Relation> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            table[i * n + j] = i == j        ? Relation::equal
                               : less[i][j] ? Relation::less
                               : less[j][i] ? Relation::greater
                               : opp[i][j]  ? Relation::opposite
                                            : Relation::cross;
    const Pocset pocset(n, table);
    const auto ufs = enumerate_ultrafilters(pocset);
    if (ufs.size() > p.max_vertices) return std::nullopt;
    RawGraph raw = dual_graph(ufs);

    // The dual must realize exactly the sampled system: one connected median graph whose
    // hyperplanes are the n coordinates with the sampled relations.
    MedianGraph g = validate_median(raw);
    if (g.component_count() != 1) return std::nullopt;
    const CubeComplex cx(std::move(g));
    if (cx.hyperplane_count() != n) return std::nullopt;
    std::vector<std::size_t> coordinate(n);
    for (HyperplaneId h = 0; h < n; ++h) {
        const Edge& e = cx.graph().edge(cx.hyperplanes()[h].edges.front());
        const auto& a = ufs[e.u];
        const auto& b = ufs[e.v];
        coordinate[h] = static_cast<std::size_t>(std::mismatch(a.begin(), a.end(), b.begin()).first - a.begin());
    }
    for (HyperplaneId h = 0; h < n; ++h)
        for (HyperplaneId k = 0; k < n; ++k)
            if (cx.relations()(h, k) != table[coordinate[h] * n + coordinate[k]]) return std::nullopt;
    return raw;
}

}  // namespace

RawGraph random_pocset_graph(std::uint64_t seed, const RandomPocsetParams& params) {
    if (params.hyperplanes == 0 || params.hyperplanes > 24) throw InvalidInput("random_pocset needs 1..24 hyperplanes");
    std::mt19937_64 rng(seed);
    for (std::size_t attempt = 0; attempt < params.max_attempts; ++attempt)
        if (auto g = try_random_pocset(rng, params)) return *g;
    throw InvalidInput("random_pocset found no admissible sample; loosen the parameters");
}

RawGraph generate_raw(const InstanceSpec& spec) {
    auto need = [&](const std::optional<std::uint32_t>& v, const char* name) {
        if (!v) throw InvalidInput(std::string("--") + name + " is required for kind " + spec.kind);
        return *v;
    };
    if (spec.kind == "grid") return grid_graph(need(spec.n, "n"), need(spec.m, "m"));
    if (spec.kind == "hypercube_grid") return hypercube_grid_graph(need(spec.n, "n"), need(spec.m, "m"));
    if (spec.kind == "path") return path_graph(need(spec.n, "n"));
    if (spec.kind == "cycle") return cycle_graph(need(spec.n, "n"));
    if (spec.kind == "tree") return tree_graph(need(spec.n, "n"), spec.m.value_or(2));
    if (spec.kind == "staircase") return staircase_graph(need(spec.n, "n"));
    if (spec.kind == "strip_gluing") return strip_gluing_graph(need(spec.n, "n"), need(spec.m, "m"));
    if (spec.kind == "random_pocset") {
        RandomPocsetParams p;
        if (spec.n) p.hyperplanes = *spec.n;
        if (spec.m) p.max_vertices = *spec.m;
        return random_pocset_graph(spec.seed, p);
    }
    if (spec.kind == "file") {
        if (spec.file.empty()) throw InvalidInput("--file is required for kind file");
        std::ifstream in(spec.file);
        if (!in) throw InvalidInput("cannot open " + spec.file);
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_graph_json(ss.str());
    }
    throw InvalidInput("unknown instance kind '" + spec.kind + "'");
}

MedianGraph generate(const InstanceSpec& spec) { return validate_median(generate_raw(spec)); }

}  // namespace cubecover
