#ifndef MIRROR33_CONE_HPP
#define MIRROR33_CONE_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "mirror33/dd.hpp"
#include "mirror33/lattice.hpp"
#include "mirror33/lp.hpp"

namespace mirror33 {

/**
 * A rational polyhedral cone, stored by primitive ray generators in reduced
 * coordinates. Canonical form: generators primitive, lexicographically sorted,
 * and irredundant (no generator lies in the cone of the others).
 */
struct Cone {
    Space space;
    std::vector<VecZ> rays;

    bool operator==(const Cone& o) const { return space == o.space && rays == o.rays; }
    bool operator<(const Cone& o) const
    {
        return std::lexicographical_compare(rays.begin(), rays.end(),
                                            o.rays.begin(), o.rays.end(), lex_less);
    }
};

/** Is x a nonnegative rational combination of the given generators? */
inline bool in_cone_of(const std::vector<VecZ>& gens, const VecZ& x)
{
    if (gens.empty()) {
        for (Eigen::Index i = 0; i < x.size(); ++i)
            if (x[i] != 0) return false;
        return true;
    }
    const Eigen::Index d = x.size();
    MatQ a(d, static_cast<Eigen::Index>(gens.size()));
    for (std::size_t j = 0; j < gens.size(); ++j)
        a.col(static_cast<Eigen::Index>(j)) = to_rational(gens[j]);
    return SimplexSolver::feasible_eq(a, to_rational(x));
}

/** Canonicalizes a generator list: primitive, irredundant, sorted. */
inline Cone make_cone(Space space, std::vector<VecZ> gens)
{
    for (VecZ& g : gens) g = make_primitive(g);
    std::sort(gens.begin(), gens.end(), lex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    gens.erase(std::remove_if(gens.begin(), gens.end(),
                              [](const VecZ& g) { return g.isZero(); }),
               gens.end());
    // Irredundancy: drop any generator expressible by the remaining ones.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            std::vector<VecZ> others;
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (j != i) others.push_back(gens[j]);
            if (in_cone_of(others, gens[i])) {
                gens.erase(gens.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    return Cone{space, std::move(gens)};
}

inline Cone cone_from_lattice_vectors(Space space, const std::vector<LatticeVector>& vs)
{
    std::vector<VecZ> gens;
    for (const auto& v : vs) {
        if (v.space != space) throw std::invalid_argument("cone: mixed spaces");
        gens.push_back(v.reduced());
    }
    return make_cone(space, std::move(gens));
}

/**
 * Dual cone { m : (n, m) >= 0 for all n in C }, living in the dual space.
 * When C is not full-dimensional the dual has lineality; its directions are
 * returned as +/- generator pairs.
 */
inline Cone dual_cone(const Cone& c)
{
    const int d = c.space.dim;
    DoubleDescription dd = double_description(c.rays, d);
    std::vector<VecZ> gens = dd.rays;
    for (const VecZ& l : dd.lineality) {
        gens.push_back(l);
        gens.push_back(-l);
    }
    Cone out;
    out.space = c.space.dual();
    for (VecZ& g : gens) g = make_primitive(g);
    std::sort(gens.begin(), gens.end(), lex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    out.rays = std::move(gens);
    return out;
}

inline int dim_of(const Cone& c)
{
    if (c.rays.empty()) return 0;
    MatQ m(static_cast<Eigen::Index>(c.rays.size()), c.space.dim);
    for (std::size_t i = 0; i < c.rays.size(); ++i)
        m.row(static_cast<Eigen::Index>(i)) = to_rational(c.rays[i]).transpose();
    return rank_of(m);
}

inline bool is_pointed(const Cone& c)
{
    return dim_of(dual_cone(c)) == c.space.dim;
}

inline bool is_simplicial(const Cone& c)
{
    return static_cast<int>(c.rays.size()) == dim_of(c);
}

/** |det| of the generator matrix of a full-dimensional simplicial cone. */
inline Int simplicial_index(const Cone& c)
{
    if (!is_simplicial(c) || dim_of(c) != c.space.dim)
        throw std::invalid_argument("simplicial_index: need a full-dimensional simplicial cone");
    MatZ m(c.space.dim, c.space.dim);
    for (int j = 0; j < c.space.dim; ++j) m.col(j) = c.rays[j];
    Rat dv = det(m);
    Int n = numerator(dv);
    return n < 0 ? Int(-n) : n;
}

inline bool is_unimodular(const Cone& c) { return simplicial_index(c) == 1; }

/** Membership via the dual description. */
inline bool cone_contains(const Cone& c, const std::vector<VecZ>& dual_rays, const VecZ& x)
{
    for (const VecZ& d : dual_rays)
        if (dot(d, x) < 0) return false;
    (void)c;
    return true;
}

inline bool cone_contains(const Cone& c, const VecZ& x)
{
    return in_cone_of(c.rays, x);
}

namespace detail {

/** Splits a cone into full-rank simplicial subcones sharing the first ray. */
inline void triangulate_cone_rec(const std::vector<VecZ>& rays, int dim,
                                 std::vector<std::vector<VecZ>>& out)
{
    MatQ m(static_cast<Eigen::Index>(rays.size()), dim);
    for (std::size_t i = 0; i < rays.size(); ++i)
        m.row(static_cast<Eigen::Index>(i)) = to_rational(rays[i]).transpose();
    const int rank = rank_of(m);
    if (static_cast<int>(rays.size()) == rank) {
        out.push_back(rays);
        return;
    }
    const VecZ& apex = rays.front();
    DoubleDescription dual = double_description(rays, dim);
    std::vector<VecZ> normals = dual.rays;
    for (const VecZ& l : dual.lineality) {
        normals.push_back(l);
        normals.push_back(-l);
    }
    for (const VecZ& nrm : normals) {
        if (dot(nrm, apex) == 0) continue; // facet contains the apex
        std::vector<VecZ> facet_rays;
        for (const VecZ& r : rays)
            if (dot(nrm, r) == 0) facet_rays.push_back(r);
        if (facet_rays.empty()) continue;
        std::vector<std::vector<VecZ>> pieces;
        triangulate_cone_rec(facet_rays, dim, pieces);
        for (auto& piece : pieces) {
            piece.push_back(apex);
            out.push_back(std::move(piece));
        }
    }
}

} // namespace detail

/**
 * Hilbert basis of C intersected with the lattice: simplicial subdivision,
 * fundamental-parallelepiped enumeration, then reduction to the irreducible
 * elements. Requires a pointed full-dimensional cone.
 */
inline std::vector<VecZ> hilbert_basis(const Cone& c)
{
    const int d = c.space.dim;
    if (!is_pointed(c))
        throw std::invalid_argument("hilbert_basis: cone is not pointed");
    if (dim_of(c) != d)
        throw std::invalid_argument("hilbert_basis: cone is not full-dimensional");

    std::vector<std::vector<VecZ>> pieces;
    detail::triangulate_cone_rec(c.rays, d, pieces);

    std::vector<VecZ> candidates = c.rays;
    for (const auto& gens : pieces) {
        MatZ g(d, d);
        for (int j = 0; j < d; ++j) g.col(j) = gens[static_cast<std::size_t>(j)];
        Int dv = numerator(det(g));
        const Int D = dv < 0 ? Int(-dv) : dv;
        if (D <= 1) continue;
        // Lattice points of { G.lambda : lambda in [0,1)^d } have lambda in (1/D)Z^d.
        std::vector<Int> idx(static_cast<std::size_t>(d), 0);
        for (;;) {
            VecZ num = VecZ::Zero(d);
            for (int j = 0; j < d; ++j) num += idx[static_cast<std::size_t>(j)] * g.col(j);
            bool integral = true;
            for (int i = 0; i < d && integral; ++i)
                if (num[i] % D != 0) integral = false;
            if (integral) {
                VecZ pt(d);
                for (int i = 0; i < d; ++i) pt[i] = num[i] / D;
                if (!pt.isZero()) candidates.push_back(pt);
            }
            int j = 0;
            for (; j < d; ++j) {
                if (++idx[static_cast<std::size_t>(j)] < D) break;
                idx[static_cast<std::size_t>(j)] = 0;
            }
            if (j == d) break;
        }
    }
    std::sort(candidates.begin(), candidates.end(), lex_less);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    const Cone dual = dual_cone(c);
    auto inside = [&](const VecZ& x) {
        for (const VecZ& w : dual.rays)
            if (dot(w, x) < 0) return false;
        return true;
    };
    std::vector<VecZ> basis;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool reducible = false;
        for (std::size_t j = 0; j < candidates.size() && !reducible; ++j) {
            if (j == i) continue;
            const VecZ rest = candidates[i] - candidates[j];
            if (!rest.isZero() && inside(rest)) reducible = true;
        }
        if (!reducible) basis.push_back(candidates[i]);
    }
    return basis;
}

} // namespace mirror33

#endif
