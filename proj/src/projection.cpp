#include "cubecover/projection.hpp"

#include "cubecover/error.hpp"

#include <algorithm>
#include <string>

namespace cubecover {

namespace {

std::vector<HyperplanePair> op_support(const CubeComplex& cx, const FinSupportPoint& xi) {
    std::vector<HyperplanePair> out;
    for (auto i = xi.entries.begin(); i != xi.entries.end(); ++i)
        for (auto j = std::next(i); j != xi.entries.end(); ++j)
            if (cx.relations().opposite(i->first, j->first)) out.emplace_back(i->first, j->first);
    return out;
}

std::vector<HyperplanePair> less_support(const CubeComplex& cx, const FinSupportPoint& xi) {
    std::vector<HyperplanePair> out;
    for (const auto& [k, value] : xi.entries)
        for (HyperplaneId h : cx.relations().below(k))
            if (xi.at(h) != 1) out.emplace_back(h, k);
    std::sort(out.begin(), out.end());
    return out;
}

bool lexicographic(const HyperplanePair& a, const HyperplanePair& b) { return a < b; }

}  // namespace

PairSupport pair_support(const CubeComplex& cx, const FinSupportPoint& xi) {
    return {op_support(cx, xi), less_support(cx, xi)};
}

FinSupportPoint p_op_pair(const CubeComplex& cx, FinSupportPoint xi, HyperplaneId h, HyperplaneId k) {
    if (!cx.relations().opposite(h, k))
        throw PreconditionError("hyperplanes " + std::to_string(h) + " and " + std::to_string(k) + " are not opposite");
    const Rational x = xi.at(h), y = xi.at(k);
    if (x >= y) {
        xi.set(h, x - y);
        xi.set(k, 0);
    } else {
        xi.set(h, 0);
        xi.set(k, y - x);
    }
    return xi;
}

FinSupportPoint p_less_pair(const CubeComplex& cx, FinSupportPoint xi, HyperplaneId h, HyperplaneId k) {
    if (!cx.relations().less(h, k))
        throw PreconditionError("hyperplane " + std::to_string(h) + " is not below " + std::to_string(k));
    const Rational sum = xi.at(h) + xi.at(k);
    if (sum <= 1) {
        xi.set(h, sum);
        xi.set(k, 0);
    } else {
        xi.set(h, 1);
        xi.set(k, sum - 1);
    }
    return xi;
}

FinSupportPoint project_op(const CubeComplex& cx, FinSupportPoint xi, const PairOrder& order) {
    auto support = op_support(cx, xi);
    std::sort(support.begin(), support.end(), order ? order : PairOrder(lexicographic));
    // Each move only shrinks the support, so one pass over the initial support suffices.
    for (const auto& [h, k] : support) xi = p_op_pair(cx, std::move(xi), h, k);
    if (!op_support(cx, xi).empty()) throw InternalError("op-support survived project_op");
    return xi;
}

FinSupportPoint project_less(const CubeComplex& cx, FinSupportPoint xi, const PairOrder& tie) {
    if (!op_support(cx, xi).empty()) throw PreconditionError("project_less needs an empty op-support");
    const PairOrder& first = tie ? tie : PairOrder(lexicographic);
    for (;;) {
        const auto support = less_support(cx, xi);
        if (support.empty()) break;
        const HyperplanePair* pick = nullptr;
        std::uint32_t best = 0;
        for (const auto& pair : support) {
            const std::uint32_t d = cx.carrier_distance(pair.first, pair.second);
            if (!pick || d > best || (d == best && first(pair, *pick))) {
                pick = &pair;
                best = d;
            }
        }
        xi = p_less_pair(cx, std::move(xi), pick->first, pick->second);
    }
    return xi;
}

FinSupportPoint project_point(const CubeComplex& cx, const FinSupportPoint& xi) {
    check_point(cx, xi);
    return project_less(cx, project_op(cx, xi));
}

CubePoint project(const CubeComplex& cx, const FinSupportPoint& xi) {
    const FinSupportPoint p = project_point(cx, xi);
    try {
        return decode(cx, p);
    } catch (const NotInImage& e) {
        throw InternalError(std::string("projection left the cube image: ") + e.what());
    }
}

}  // namespace cubecover
