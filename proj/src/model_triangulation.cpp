#include "cubecover/model_triangulation.hpp"

#include "cubecover/error.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace cubecover {

namespace {

RationalVector barycenter(const std::vector<RationalVector>& pts) {
    RationalVector c(pts.front().size(), Rational(0));
    for (const auto& p : pts)
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += p[i];
    const Rational n(static_cast<unsigned long>(pts.size()));
    for (auto& x : c) x /= n;
    return c;
}

std::string key(const RationalVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
}

// Full flags of a simplex: for every ordering of its vertices, the barycenters of the
// initial segments. The first entry of each flag is a vertex of the simplex.
template <typename F>
void for_each_flag(const std::vector<RationalVector>& simplex, F&& emit) {
    std::vector<std::size_t> perm(simplex.size());
    std::iota(perm.begin(), perm.end(), 0u);
    do {
        std::vector<RationalVector> flag, prefix;
        for (std::size_t i : perm) {
            prefix.push_back(simplex[i]);
            flag.push_back(barycenter(prefix));
        }
        emit(flag, perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

ModelTriangulation build_model(std::uint32_t dim, std::uint32_t side) {
    if (dim == 0 || dim > 3) throw PreconditionError("model triangulation supports dimensions 1 to 3");
    if (side == 0) throw InvalidInput("side must be positive");
    ModelTriangulation model;
    model.dim = dim;
    model.side = side;

    std::uint32_t cubes = 1;
    for (std::uint32_t i = 0; i < dim; ++i) cubes *= side;
    const Rational half(1, 2);

    for (std::uint32_t cube = 0; cube < cubes; ++cube) {
        RationalVector corner(dim);
        for (std::uint32_t i = 0, rest = cube; i < dim; ++i, rest /= side)
            corner[i] = Rational(static_cast<unsigned long>(rest % side));

        // T: for each sign pattern and ordering, the chain center, then faces fixing the
        // first j coordinates of the ordering at the signed side.
        for (std::uint32_t signs = 0; signs < (1u << dim); ++signs) {
            std::vector<std::uint32_t> order(dim);
            std::iota(order.begin(), order.end(), 0u);
            do {
                std::vector<RationalVector> t_simplex;
                RationalVector u(dim);
                for (std::uint32_t i = 0; i < dim; ++i) u[i] = corner[i] + half;
                t_simplex.push_back(u);
                for (std::uint32_t j = 0; j < dim; ++j) {
                    const std::uint32_t i = order[j];
                    u[i] = corner[i] + ((signs >> i & 1u) ? 1 : 0);
                    t_simplex.push_back(u);
                }
                // T₁ then T₂ by full flags.
                for_each_flag(t_simplex, [&](const std::vector<RationalVector>& t1_simplex,
                                             const std::vector<std::size_t>&) {
                    for_each_flag(t1_simplex, [&](const std::vector<RationalVector>& t2_simplex,
                                                  const std::vector<std::size_t>& perm) {
                        model.simplices.push_back(
                            ModelSimplex{t2_simplex, key(t1_simplex[perm.front()]),
                                         static_cast<std::uint32_t>(perm.front())});
                    });
                });
            } while (std::next_permutation(order.begin(), order.end()));
        }
    }
    return model;
}

std::vector<Rational> solve_unique(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs) {
    const std::size_t n_rows = rows.size();
    const std::size_t n_cols = n_rows ? rows.front().size() : 0;
    std::size_t r = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < n_cols && r < n_rows; ++c) {
        std::size_t p = r;
        while (p < n_rows && sgn(rows[p][c]) == 0) ++p;
        if (p == n_rows) return {};  // free column: not unique
        std::swap(rows[p], rows[r]);
        std::swap(rhs[p], rhs[r]);
        for (std::size_t i = 0; i < n_rows; ++i) {
            if (i == r || sgn(rows[i][c]) == 0) continue;
            const Rational f = rows[i][c] / rows[r][c];
            for (std::size_t k = c; k < n_cols; ++k) rows[i][k] -= f * rows[r][k];
            rhs[i] -= f * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (r < n_cols) return {};
    for (std::size_t i = r; i < n_rows; ++i)
        if (sgn(rhs[i]) != 0) return {};  // inconsistent
    std::vector<Rational> x(n_cols);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i] / rows[i][pivot_col[i]];
    return x;
}

std::vector<Rational> barycentric_coordinates(std::span<const RationalVector> simplex, std::span<const Rational> point) {
    const std::size_t n = simplex.size();
    const std::size_t dim = point.size();
    std::vector<std::vector<Rational>> rows(dim + 1, std::vector<Rational>(n));
    std::vector<Rational> rhs(dim + 1);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t a = 0; a < n; ++a) rows[i][a] = simplex[a][i];
        rhs[i] = point[i];
    }
    for (std::size_t a = 0; a < n; ++a) rows[dim][a] = 1;
    rhs[dim] = 1;
    auto mu = solve_unique(std::move(rows), std::move(rhs));
    for (const auto& m : mu)
        if (sgn(m) < 0) return {};
    return mu;
}

std::set<std::uint32_t> model_star_levels(const ModelTriangulation& model, std::span<const Rational> point) {
    std::set<std::uint32_t> out;
    for (const auto& s : model.simplices)
        if (!barycentric_coordinates(s.vertices, point).empty()) out.insert(s.level);
    return out;
}

Rational l1_simplex_distance(std::span<const RationalVector> a, std::span<const RationalVector> b) {
    // min ‖z‖₁ over Z = conv{p - q}. An optimum is a vertex of Z ∩ {z_S = 0} for its zero
    // set S, hence a convex combination of at most |S|+1 generators solving z_S = 0.
    std::vector<RationalVector> gens;
    for (const auto& p : a)
        for (const auto& q : b) {
            RationalVector z(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) z[i] = p[i] - q[i];
            gens.push_back(std::move(z));
        }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    const std::size_t dim = gens.front().size();
    std::optional<Rational> best;
    auto consider = [&](const RationalVector& z) {
        Rational n = 0;
        for (const auto& c : z) n += abs(c);
        if (!best || n < *best) best = n;
    };
    for (const auto& g : gens) consider(g);

    std::vector<std::size_t> pick;
    for (std::uint32_t mask = 1; mask < (1u << dim); ++mask) {
        std::vector<std::size_t> zero;
        for (std::size_t i = 0; i < dim; ++i)
            if (mask >> i & 1u) zero.push_back(i);
        for (std::size_t size = 2; size <= zero.size() + 1 && size <= gens.size(); ++size) {
            // Enumerate size-subsets of generators.
            std::vector<std::size_t> idx(size);
            std::iota(idx.begin(), idx.end(), 0u);
            for (;;) {
                std::vector<std::vector<Rational>> rows(zero.size() + 1, std::vector<Rational>(size));
                std::vector<Rational> rhs(zero.size() + 1, Rational(0));
                for (std::size_t r = 0; r < zero.size(); ++r)
                    for (std::size_t c = 0; c < size; ++c) rows[r][c] = gens[idx[c]][zero[r]];
                for (std::size_t c = 0; c < size; ++c) rows[zero.size()][c] = 1;
                rhs[zero.size()] = 1;
                const auto mu = solve_unique(std::move(rows), std::move(rhs));
                if (!mu.empty() && std::all_of(mu.begin(), mu.end(), [](const Rational& m) { return sgn(m) >= 0; })) {
                    RationalVector z(dim, Rational(0));
                    for (std::size_t c = 0; c < size; ++c)
                        for (std::size_t i = 0; i < dim; ++i) z[i] += mu[c] * gens[idx[c]][i];
                    consider(z);
                }
                std::size_t i = size;
                while (i > 0 && idx[i - 1] == gens.size() - size + i - 1) --i;
                if (i == 0) break;
                ++idx[i - 1];
                for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
    }
    return *best;
}

}  // namespace cubecover
