#include "cubecover/io.hpp"

#include "cubecover/error.hpp"

#include <sstream>

namespace cubecover {

namespace {

std::uint32_t as_id(const json& v, const char* what) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::int64_t>() > UINT32_MAX)
        throw InvalidInput(std::string(what) + " must be a non-negative integer");
    return v.get<std::uint32_t>();
}

std::uint32_t parse_id(const std::string& s, const char* what) {
    std::size_t used = 0;
    unsigned long value = 0;
    try {
        value = std::stoul(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size() || value > UINT32_MAX)
        throw InvalidInput(std::string(what) + " '" + s + "' is not a non-negative integer");
    return static_cast<std::uint32_t>(value);
}

}  // namespace

RawGraph graph_from_json(const json& doc) {
    if (!doc.is_object()) throw InvalidInput("graph document must be a JSON object");
    if (!doc.contains("vertices")) throw InvalidInput("graph document lacks \"vertices\"");
    RawGraph g;
    g.vertex_count = as_id(doc["vertices"], "vertices");
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw InvalidInput("\"edges\" must be an array");
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2) throw InvalidInput("each edge must be a pair [u, v]");
            g.edges.emplace_back(as_id(e[0], "edge endpoint"), as_id(e[1], "edge endpoint"));
        }
    }
    if (doc.contains("base")) {
        if (!doc["base"].is_object()) throw InvalidInput("\"base\" must be an object");
        for (const auto& [key, value] : doc["base"].items())
            g.base[parse_id(key, "component index")] = as_id(value, "base vertex");
    }
    return g;
}

RawGraph parse_graph_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    return graph_from_json(doc);
}

json graph_to_json(const MedianGraph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    json base = json::object();
    for (ComponentId c = 0; c < g.component_count(); ++c) base[std::to_string(c)] = g.base(c);
    return json{{"vertices", g.vertex_count()}, {"edges", std::move(edges)}, {"base", std::move(base)}};
}

json hyperplanes_to_json(const CubeComplex& cx) {
    const auto& g = cx.graph();
    json list = json::array();
    for (const Hyperplane& h : cx.hyperplanes().all()) {
        json edges = json::array(), minus = json::array(), plus = json::array();
        for (EdgeId e : h.edges) edges.push_back({g.edge(e).u, g.edge(e).v});
        for (auto v = h.minus.find_first(); v != VertexSet::npos; v = h.minus.find_next(v)) minus.push_back(v);
        for (auto v = h.plus.find_first(); v != VertexSet::npos; v = h.plus.find_next(v)) plus.push_back(v);
        list.push_back(json{{"component", h.component},
                            {"edges", std::move(edges)},
                            {"minus", std::move(minus)},
                            {"plus", std::move(plus)}});
    }
    return json{{"hyperplanes", std::move(list)}};
}

json point_to_json(const FinSupportPoint& p) {
    json entries = json::object();
    for (const auto& [h, t] : p.entries) entries[std::to_string(h)] = to_string(t);
    return json{{"component", p.component}, {"entries", std::move(entries)}};
}

FinSupportPoint point_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("component")) throw InvalidInput("point must be an object with a component");
    FinSupportPoint p;
    p.component = as_id(doc["component"], "component");
    if (doc.contains("entries")) {
        if (!doc["entries"].is_object()) throw InvalidInput("\"entries\" must be an object");
        for (const auto& [key, value] : doc["entries"].items()) {
            if (!value.is_string()) throw InvalidInput("point coordinates must be \"p/q\" strings");
            p.set(parse_id(key, "hyperplane id"), parse_rational(value.get<std::string>()));
        }
    }
    return p;
}

json cube_point_to_json(const CubePoint& p) {
    json frac = json::object();
    for (const auto& [h, t] : p.frac) frac[std::to_string(h)] = to_string(t);
    return json{{"vertex", p.vertex}, {"frac", std::move(frac)}};
}

std::string to_dot(const MedianGraph& g, const HyperplaneSet* hs) {
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (g.base_of(v) == v) out << " [shape=doublecircle]";
        out << ";\n";
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        out << "  " << g.edge(e).u << " -- " << g.edge(e).v;
        if (hs) out << " [label=\"h" << hs->of_edge(e) << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace cubecover
