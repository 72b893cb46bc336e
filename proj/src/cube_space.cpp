#include "cubecover/cube_space.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace cubecover {

Rational FinSupportPoint::at(HyperplaneId h) const {
    auto it = entries.find(h);
    return it == entries.end() ? Rational(0) : it->second;
}

void FinSupportPoint::set(HyperplaneId h, const Rational& value) {
    if (sgn(value) == 0)
        entries.erase(h);
    else
        entries[h] = value;
}

NotInImage::NotInImage(Reason reason, const std::string& detail)
    : PropertyViolation(std::string("point is not in the cube image (") + to_string(reason) + "): " + detail),
      reason_(reason) {}

const char* to_string(NotInImage::Reason r) {
    switch (r) {
        case NotInImage::Reason::no_vertex_for_ones: return "no_vertex_for_ones";
        case NotInImage::Reason::frac_not_crossing: return "frac_not_crossing";
        case NotInImage::Reason::no_cube_at_vertex: return "no_cube_at_vertex";
    }
    return "?";
}

FinSupportPoint iota(const CubeComplex& cx, Vertex x) {
    if (x >= cx.vertex_count()) throw InvalidInput("vertex id out of range");
    FinSupportPoint p;
    p.component = cx.graph().component(x);
    for (HyperplaneId h : cx.base_separators(x)) p.entries.emplace(h, Rational(1));
    return p;
}

FinSupportPoint encode(const CubeComplex& cx, const CubePoint& q) {
    FinSupportPoint p = iota(cx, q.vertex);
    for (const auto& [h, t] : q.frac) {
        if (p.entries.count(h)) throw InvalidInput("fractional hyperplane already separates the corner from the base");
        p.set(h, t);
    }
    return p;
}

ExtendedRational l1_distance(const FinSupportPoint& a, const FinSupportPoint& b) {
    if (a.component != b.component) return ExtendedRational::infinity();
    Rational sum = 0;
    auto i = a.entries.begin();
    auto j = b.entries.begin();
    while (i != a.entries.end() || j != b.entries.end()) {
        if (j == b.entries.end() || (i != a.entries.end() && i->first < j->first)) {
            sum += abs(i->second);
            ++i;
        } else if (i == a.entries.end() || j->first < i->first) {
            sum += abs(j->second);
            ++j;
        } else {
            sum += abs(i->second - j->second);
            ++i;
            ++j;
        }
    }
    return ExtendedRational(sum);
}

void check_point(const CubeComplex& cx, const FinSupportPoint& xi) {
    if (xi.component >= cx.component_count()) throw InvalidInput("point names a missing component");
    for (const auto& [h, t] : xi.entries) {
        if (h >= cx.hyperplane_count()) throw InvalidInput("hyperplane id " + std::to_string(h) + " out of range");
        if (cx.hyperplanes()[h].component != xi.component)
            throw InvalidInput("hyperplane " + std::to_string(h) + " is outside the point's component");
        if (sgn(t) < 0 || t > 1) throw InvalidInput("coordinate " + to_string(t) + " outside [0,1]");
    }
}

CubePoint decode(const CubeComplex& cx, const FinSupportPoint& xi) {
    check_point(cx, xi);
    std::vector<HyperplaneId> ones, frac;
    for (const auto& [h, t] : xi.entries) (t == 1 ? ones : frac).push_back(h);

    const auto v = cx.vertex_with_separators(xi.component, ones);
    if (!v) throw NotInImage(NotInImage::Reason::no_vertex_for_ones, "no vertex has exactly the saturated separators");

    for (std::size_t i = 0; i < frac.size(); ++i)
        for (std::size_t j = i + 1; j < frac.size(); ++j)
            if (!cx.relations().cross(frac[i], frac[j]))
                throw NotInImage(NotInImage::Reason::frac_not_crossing, "hyperplanes " + std::to_string(frac[i]) +
                                                                            " and " + std::to_string(frac[j]));

    const auto& hs = cx.hyperplanes();
    for (HyperplaneId h : frac)
        if (hs.on_plus_side(h, *v) || !hs[h].carrier.test(*v))
            throw NotInImage(NotInImage::Reason::no_cube_at_vertex,
                             "hyperplane " + std::to_string(h) + " is not adjacent to vertex " + std::to_string(*v));
    if (frac.size() > cx.dimension(xi.component))
        throw NotInImage(NotInImage::Reason::no_cube_at_vertex, "more fractional coordinates than the dimension");

    // Every corner of the spanned cube must be a vertex.
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << frac.size()); ++mask) {
        std::vector<HyperplaneId> corner = ones;
        for (std::size_t i = 0; i < frac.size(); ++i)
            if (mask >> i & 1u) corner.push_back(frac[i]);
        std::sort(corner.begin(), corner.end());
        if (!cx.vertex_with_separators(xi.component, corner))
            throw NotInImage(NotInImage::Reason::no_cube_at_vertex, "a cube corner is missing");
    }

    CubePoint p{*v, {}};
    for (HyperplaneId h : frac) p.frac.emplace(h, xi.at(h));
    return p;
}

}  // namespace cubecover
