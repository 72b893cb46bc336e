#include "cubecover/tower.hpp"

#include "cubecover/error.hpp"
#include "cubecover/parallel.hpp"
#include "cubecover/projection.hpp"

#include <algorithm>
#include <map>

namespace cubecover {

std::uint32_t choose_stage_count(const Rational& constant, const Rational& epsilon) {
    if (sgn(epsilon) <= 0 || epsilon > 1) throw PreconditionError("epsilon must lie in (0, 1]");
    if (sgn(constant) < 0 || constant >= 1) throw PreconditionError("stage constant must lie in [0, 1)");
    std::uint32_t n = 1;
    Rational power = constant;
    while (!(power < epsilon)) {
        power *= constant;
        ++n;
    }
    return n;
}

TowerMap build_tower(ComplexPtr source, const Rational& epsilon, const TowerOptions& options) {
    TowerMap tm;
    tm.source = source;
    tm.epsilon = epsilon;
    const std::size_t comps = source->component_count();
    Rational worst = 0;
    for (ComponentId c = 0; c < comps; ++c) {
        const std::uint64_t ell = options.ell ? *options.ell : default_ell(source->dimension(c));
        if (ell == 0) throw InvalidInput("ell must be at least 1");
        tm.ell.push_back(ell);
        Rational constant(static_cast<unsigned long>(ell), static_cast<unsigned long>(ell + 1));
        constant.canonicalize();
        worst = std::max(worst, constant);
        tm.stage_constant.push_back(constant);
    }
    if (comps == 0) worst = Rational(1, 2);
    tm.N = choose_stage_count(worst, epsilon);
    for (const Rational& c : tm.stage_constant) {
        Rational b = 1;
        for (std::uint32_t i = 0; i < tm.N; ++i) b *= c;
        tm.lipschitz_bound.push_back(b);
    }

    ComplexPtr current = source;
    for (std::uint32_t stage = 0; stage < tm.N; ++stage) {
        ColoringAssignment coloring = compute_coloring(*current);
        auto wf = std::make_shared<const WeightFn>(current, coloring, tm.ell);
        QuotientResult q = quotient(*current, wf->coloring().kc);
        ComplexPtr next = q.complex;
        tm.stages.push_back(TowerStage{current, std::move(wf), std::move(q)});
        current = next;
        if (current->hyperplane_count() == 0) {
            if (stage + 1 < tm.N)
                tm.notes.push_back("every component collapsed to a point after stage " + std::to_string(stage + 1) +
                                   " of " + std::to_string(tm.N) + "; remaining stages are identities");
            break;
        }
    }
    return tm;
}

FinSupportPoint apply(const TowerMap& tm, Vertex x) {
    FinSupportPoint xi = iota(*tm.source, x);
    for (const TowerStage& st : tm.stages) {
        const CubeComplex& target = *st.quotient.complex;
        xi = project_point(target, psi_w(*st.wf, st.quotient, xi));
        try {
            (void)decode(target, xi);
        } catch (const NotInImage& e) {
            throw InternalError(std::string("tower stage left the cube image: ") + e.what());
        }
    }
    return xi;
}

std::vector<FinSupportPoint> apply_all(const TowerMap& tm, unsigned threads) {
    std::vector<FinSupportPoint> out(tm.source->vertex_count());
    parallel_for(out.size(), threads, [&](std::size_t v) { out[v] = apply(tm, static_cast<Vertex>(v)); });
    return out;
}

LipschitzReport verify_lipschitz(const TowerMap& tm, std::span<const FinSupportPoint> images,
                                 std::size_t vertex_budget) {
    const auto& g = tm.source->graph();
    if (g.vertex_count() > vertex_budget)
        throw BudgetExceeded("vertex count " + std::to_string(g.vertex_count()) + " exceeds the budget " +
                             std::to_string(vertex_budget));
    if (images.size() != g.vertex_count()) throw InvalidInput("need one image per vertex");
    LipschitzReport rep;
    rep.observed.assign(g.component_count(), Rational(0));
    rep.bound = tm.lipschitz_bound;
    for (ComponentId c = 0; c < g.component_count(); ++c) {
        const auto vs = g.component_vertices(c);
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                const auto d = l1_distance(images[vs[i]], images[vs[j]]);
                if (d.is_infinite()) throw InternalError("images of one component landed in different components");
                Rational ratio = d.value() / Rational(g.dist(vs[i], vs[j]));
                if (ratio > rep.observed[c]) rep.observed[c] = ratio;
            }
        if (rep.observed[c] > rep.bound[c]) rep.ok = false;
        rep.observed_max = std::max(rep.observed_max, rep.observed[c]);
        rep.bound_max = std::max(rep.bound_max, rep.bound[c]);
    }
    return rep;
}

std::vector<std::pair<std::uint32_t, Rational>> verify_cobornologous(const TowerMap& tm,
                                                                     std::span<const FinSupportPoint> images) {
    const auto& g = tm.source->graph();
    if (images.size() != g.vertex_count()) throw InvalidInput("need one image per vertex");
    // Minimum image distance at each exact source distance, then a suffix minimum.
    std::map<std::uint32_t, Rational> at_distance;
    for (ComponentId c = 0; c < g.component_count(); ++c) {
        const auto vs = g.component_vertices(c);
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                const std::uint32_t d = g.dist(vs[i], vs[j]);
                const Rational img = l1_distance(images[vs[i]], images[vs[j]]).value();
                auto [it, fresh] = at_distance.emplace(d, img);
                if (!fresh && img < it->second) it->second = img;
            }
    }
    std::vector<std::pair<std::uint32_t, Rational>> control;
    if (at_distance.empty()) return control;
    const std::uint32_t diameter = at_distance.rbegin()->first;
    control.resize(diameter);
    std::optional<Rational> running;
    for (std::uint32_t t = diameter; t >= 1; --t) {
        if (auto it = at_distance.find(t); it != at_distance.end())
            running = running ? std::min(*running, it->second) : it->second;
        control[t - 1] = {t, *running};
    }
    return control;
}

}  // namespace cubecover
