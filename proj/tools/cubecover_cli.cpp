// Command-line front end: instance generation, validation, the quotient tower and cover
// certificates. Exit codes: 1 invalid input, 2 property violation, 3 internal error.

#include "cubecover/coloring.hpp"
#include "cubecover/cover.hpp"
#include "cubecover/error.hpp"
#include "cubecover/generators.hpp"
#include "cubecover/io.hpp"
#include "cubecover/pocset.hpp"
#include "cubecover/tower.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cubecover;

namespace {

struct Options {
    InstanceSpec spec;
    std::optional<std::uint32_t> base;
    std::string epsilon = "1/2";
    std::optional<std::uint64_t> ell;
    std::string r = "1";
    unsigned threads = 1;
    std::string out;
    std::string format = "json";
    std::string set;
    std::string hyperplanes;
    std::size_t budget = 4096;
};

std::vector<std::uint32_t> parse_list(const std::string& text, const char* what) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        if (item.empty()) continue;
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || used == 0 || v > UINT32_MAX)
            throw InvalidInput(std::string("bad ") + what + " '" + item + "'");
        out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
}

ComplexPtr load(const Options& o) {
    RawGraph raw = generate_raw(o.spec);
    if (o.base) {
        // Rebase the component containing the requested vertex.
        const MedianGraph probe = make_trusted_median_graph(raw);
        if (*o.base >= probe.vertex_count()) throw InvalidInput("--base vertex out of range");
        raw.base[probe.component(*o.base)] = *o.base;
    }
    return make_complex(validate_median(raw));
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw InvalidInput("cannot write " + o.out);
    f << text;
}

void emit(const Options& o, const json& doc) { emit(o, doc.dump(2) + "\n"); }

int cmd_validate(const Options& o) {
    try {
        const ComplexPtr cx = load(o);
        emit(o, json{{"valid", true},
                     {"vertices", cx->vertex_count()},
                     {"edges", cx->graph().edge_count()},
                     {"components", cx->component_count()},
                     {"hyperplanes", cx->hyperplane_count()},
                     {"dimension", cx->dimension()}});
        return 0;
    } catch (const NotMedianError& e) {
        std::cerr << e.what() << "\n";
        emit(o, json{{"valid", false}, {"triple", e.triple}, {"median_count", e.median_count}});
        return 1;
    }
}

int cmd_hyperplanes(const Options& o) {
    const ComplexPtr cx = load(o);
    if (o.format == "dot") {
        emit(o, to_dot(cx->graph(), &cx->hyperplanes()));
        return 0;
    }
    json doc = hyperplanes_to_json(*cx);
    doc["dimension"] = cx->dimension();
    emit(o, doc);
    return 0;
}

int cmd_color(const Options& o) {
    const ComplexPtr cx = load(o);
    const ColoringAssignment col = compute_coloring(*cx);
    json rows = json::array();
    for (HyperplaneId h = 0; h < cx->hyperplane_count(); ++h)
        rows.push_back(json{{"hyperplane", h}, {"rank", col.rank[h]}, {"color", col.color[h]}});
    emit(o, rows);
    return 0;
}

int cmd_quotient(const Options& o) {
    const ComplexPtr cx = load(o);
    const std::vector<HyperplaneId> kept =
        o.hyperplanes.empty() ? compute_coloring(*cx).kc : parse_list(o.hyperplanes, "hyperplane id");
    const QuotientResult q = quotient(*cx, kept);
    if (o.format == "dot") {
        emit(o, to_dot(q.complex->graph(), &q.complex->hyperplanes()));
        return 0;
    }
    json hmap = json::object();
    for (HyperplaneId h : q.kept) hmap[std::to_string(h)] = *q.hyperplane_map[h];
    emit(o, json{{"kept", q.kept},
                 {"graph", graph_to_json(q.complex->graph())},
                 {"vertex_map", q.vertex_map},
                 {"hyperplane_map", std::move(hmap)}});
    return 0;
}

TowerOptions tower_options(const Options& o) { return TowerOptions{o.ell, o.threads}; }

int cmd_map(const Options& o) {
    const ComplexPtr cx = load(o);
    const TowerMap tm = build_tower(cx, parse_rational(o.epsilon), tower_options(o));
    const auto images = apply_all(tm, o.threads);
    json doc{{"epsilon", to_string(tm.epsilon)}, {"N", tm.N}, {"stages_built", tm.stages.size()},
             {"ell", tm.ell}, {"notes", tm.notes}};
    json imgs = json::array();
    for (Vertex v = 0; v < images.size(); ++v) imgs.push_back(json{{"vertex", v}, {"image", point_to_json(images[v])}});
    doc["images"] = std::move(imgs);
    try {
        const LipschitzReport rep = verify_lipschitz(tm, images, o.budget);
        json observed = json::array(), bound = json::array();
        for (const auto& q : rep.observed) observed.push_back(to_string(q));
        for (const auto& q : rep.bound) bound.push_back(to_string(q));
        doc["lipschitz"] = json{{"observed", std::move(observed)}, {"bound", std::move(bound)}, {"ok", rep.ok}};
        json control = json::array();
        for (const auto& [t, v] : verify_cobornologous(tm, images)) control.push_back(json{{"t", t}, {"min", to_string(v)}});
        doc["cobornologous"] = std::move(control);
        emit(o, doc);
        return rep.ok ? 0 : 2;
    } catch (const BudgetExceeded& e) {
        doc["notes"].push_back(std::string("verification skipped: ") + e.what());
        emit(o, doc);
        return 0;
    }
}

int cmd_cover(const Options& o) {
    const ComplexPtr cx = load(o);
    emit(o, certificate_to_json(build_cover(cx, parse_rational(o.r), CoverOptions{tower_options(o)})));
    return 0;
}

int cmd_certify(const Options& o) {
    const ComplexPtr cx = load(o);
    const CoverOptions opts{tower_options(o)};
    const std::string text = certificate_to_json(build_cover(cx, parse_rational(o.r), opts)).dump(2) + "\n";
    emit(o, text);
    const CoverCertificate parsed = certificate_from_json(json::parse(text));
    const auto failures = verify_certificate(cx, parsed, opts);
    for (const auto& f : failures) std::cerr << "certificate check failed: " << f << "\n";
    if (!failures.empty()) return 2;
    std::cerr << "certificate verified: " << parsed.levels.size() << " levels, max diameter " << parsed.max_diameter
              << ", N = " << parsed.N << "\n";
    return 0;
}

int cmd_roller(const Options& o) {
    const ComplexPtr cx = load(o);
    json comps = json::array();
    std::string dot;
    for (ComponentId c = 0; c < cx->component_count(); ++c) {
        const auto ufs = enumerate_ultrafilters(Pocset::of_component(*cx, c));
        const MedianGraph dual = validate_median(dual_graph(ufs));
        // The source component matches when v ↦ α_v is an edge-preserving bijection.
        bool matches = ufs.size() == cx->graph().component_vertices(c).size();
        if (matches) {
            std::map<Ultrafilter, Vertex> index;
            for (Vertex i = 0; i < ufs.size(); ++i) index.emplace(ufs[i], i);
            std::vector<Vertex> image;
            for (Vertex v : cx->graph().component_vertices(c)) image.push_back(index.at(vertex_orientation(*cx, v)));
            std::size_t source_edges = 0;
            for (const Edge& e : cx->graph().edges()) {
                if (cx->graph().component(e.u) != c) continue;
                ++source_edges;
                const auto vs = cx->graph().component_vertices(c);
                const auto pos = [&](Vertex v) { return std::lower_bound(vs.begin(), vs.end(), v) - vs.begin(); };
                if (!dual.edge_between(image[pos(e.u)], image[pos(e.v)])) matches = false;
            }
            matches = matches && source_edges == dual.edge_count();
        }
        json list = json::array();
        for (const auto& u : ufs) list.push_back(u);
        comps.push_back(json{{"component", c},
                             {"ultrafilters", std::move(list)},
                             {"dual", graph_to_json(dual)},
                             {"matches_source", matches}});
        dot += to_dot(dual);
    }
    if (o.format == "dot")
        emit(o, dot);
    else
        emit(o, json{{"components", std::move(comps)}});
    return 0;
}

int cmd_gate(const Options& o) {
    if (!o.base) throw InvalidInput("gate needs --base");
    Options plain = o;
    plain.base.reset();
    const ComplexPtr cx = load(plain);
    const auto set = parse_list(o.set, "vertex");
    emit(o, json{{"gate", gate(*cx, *o.base, set)}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Median graphs, quotient towers and asymptotic-dimension covers"};
    app.require_subcommand(1);
    Options o;
    std::optional<std::uint32_t> n, m;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--kind", o.spec.kind,
                        "grid | hypercube_grid | path | cycle | tree | staircase | strip_gluing | random_pocset | file"
                        " (default file when --file is given)");
        sub->add_option("--n", n, "first size parameter");
        sub->add_option("--m", m, "second size parameter");
        sub->add_option("--seed", o.spec.seed, "seed for random_pocset");
        sub->add_option("--file", o.spec.file, "graph JSON for kind=file");
        sub->add_option("--base", o.base, "base vertex (gate: the point o)");
        sub->add_option("--epsilon", o.epsilon, "Lipschitz target p/q for map");
        sub->add_option("--ell", o.ell, "override the interpolation parameter");
        sub->add_option("--r", o.r, "scale p/q for cover and certify");
        sub->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--out", o.out, "write the artifact here instead of stdout");
        sub->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
        sub->add_option("--budget", o.budget, "vertex budget for exhaustive verification");
    };

    std::map<std::string, int (*)(const Options&)> handlers{
        {"validate", cmd_validate}, {"hyperplanes", cmd_hyperplanes}, {"color", cmd_color},
        {"quotient", cmd_quotient}, {"map", cmd_map},                 {"cover", cmd_cover},
        {"roller", cmd_roller},     {"gate", cmd_gate},               {"certify", cmd_certify}};
    std::map<std::string, const char*> help{
        {"validate", "check the median axiom"},
        {"hyperplanes", "dump hyperplanes and halfspaces"},
        {"color", "rank vectors and colors"},
        {"quotient", "quotient by K_c or --hyperplanes"},
        {"map", "build the quotient tower and report Lipschitz/cobornologous measurements"},
        {"cover", "build a cover certificate"},
        {"roller", "enumerate ultrafilters and rebuild the dual graph"},
        {"gate", "gate of --base in the convex set --set"},
        {"certify", "build, serialize and independently re-verify a cover certificate"}};
    std::vector<CLI::App*> subs;
    for (const auto& [name, fn] : handlers) {
        CLI::App* sub = app.add_subcommand(name, help[name]);
        add_common(sub);
        if (name == "gate") sub->add_option("--set", o.set, "comma-separated vertices")->required();
        if (name == "quotient") sub->add_option("--hyperplanes", o.hyperplanes, "comma-separated hyperplane ids");
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }
    o.spec.n = n;
    o.spec.m = m;
    if (o.spec.kind.empty()) {
        if (o.spec.file.empty()) {
            std::cerr << "invalid input: --kind or --file is required\n";
            return 1;
        }
        o.spec.kind = "file";
    }

    try {
        for (CLI::App* sub : subs)
            if (sub->parsed()) return handlers.at(sub->get_name())(o);
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const PreconditionError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const PropertyViolation& e) {
        std::cerr << "property violation: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
