#ifndef MIRROR33_TRIANGULATION_HPP
#define MIRROR33_TRIANGULATION_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mirror33/builtins.hpp"
#include "mirror33/fan.hpp"
#include "mirror33/lp.hpp"
#include "mirror33/polytope.hpp"
#include "mirror33/simplex.hpp"

namespace mirror33 {

/**
 * A triangulation of a point configuration: maximal simplices as ordered
 * index lists into `points`. Lower faces are implicit (every subset of a
 * simplex's vertex set spans a face).
 */
struct Triangulation {
    Space space;
    std::vector<VecZ> points;
    std::vector<std::vector<int>> maximal;

    int point_index(const VecZ& p) const
    {
        const auto it = std::lower_bound(points.begin(), points.end(), p, lex_less);
        if (it == points.end() || *it != p)
            throw std::invalid_argument("triangulation: unknown point");
        return static_cast<int>(it - points.begin());
    }

    std::vector<VecZ> simplex_vertices(std::size_t i) const
    {
        std::vector<VecZ> out;
        for (int idx : maximal[i]) out.push_back(points[static_cast<std::size_t>(idx)]);
        return out;
    }
};

/** Builds a triangulation over the lex-sorted union of the simplices' vertices. */
inline Triangulation triangulation_from_simplices(Space space,
                                                  const std::vector<std::vector<VecZ>>& simplices,
                                                  std::vector<VecZ> extra_points = {})
{
    Triangulation t;
    t.space = space;
    for (const auto& s : simplices)
        for (const VecZ& v : s) t.points.push_back(v);
    for (const VecZ& v : extra_points) t.points.push_back(v);
    std::sort(t.points.begin(), t.points.end(), lex_less);
    t.points.erase(std::unique(t.points.begin(), t.points.end()), t.points.end());
    std::set<std::vector<int>> seen;
    for (const auto& s : simplices) {
        std::vector<int> idx;
        for (const VecZ& v : s) idx.push_back(t.point_index(v));
        std::vector<int> key = idx;
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) t.maximal.push_back(idx);
    }
    return t;
}

/** The k-edgewise subdivision of an ordered simplex as a triangulation. */
inline Triangulation edgewise_subdivision(const OrderedSimplex& s, int k)
{
    return triangulation_from_simplices(s.space, edgewise_maximal_simplices(s, k),
                                        edgewise_points(s, k));
}

/** The prism subdivision of conv(delta1, delta1 + w). */
inline Triangulation prism_subdivision(const OrderedSimplex& d1, const OrderedSimplex& d2)
{
    return triangulation_from_simplices(d1.space, prism_maximal_simplices(d1, d2));
}

inline Int normalized_volume_of(const std::vector<VecZ>& verts)
{
    const int d = static_cast<int>(verts.size()) - 1;
    MatZ m(d, d);
    for (int i = 0; i < d; ++i) m.col(i) = verts[static_cast<std::size_t>(i + 1)] - verts[0];
    Int dv = numerator(det(m));
    return dv < 0 ? Int(-dv) : dv;
}

/**
 * Placing (incremental) triangulation of a vertex set: insert points in the
 * given order, coning each point over the boundary walls it sees. Used as the
 * independent volume oracle.
 */
inline std::vector<std::vector<VecZ>> placing_triangulation(std::vector<VecZ> pts, int dim)
{
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    // initial full-dimensional simplex
    std::vector<VecZ> start;
    std::vector<VecZ> rest;
    for (const VecZ& p : pts) {
        std::vector<VecZ> trial = start;
        trial.push_back(p);
        if (affinely_independent(trial)) start = trial;
        else rest.push_back(p);
        if (static_cast<int>(start.size()) == dim + 1) break;
    }
    if (static_cast<int>(start.size()) != dim + 1)
        throw std::invalid_argument("placing_triangulation: points are not full-dimensional");
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (std::find(start.begin(), start.end(), pts[i]) == start.end() &&
            std::find(rest.begin(), rest.end(), pts[i]) == rest.end())
            rest.push_back(pts[i]);

    std::vector<std::vector<VecZ>> simplices{start};
    for (const VecZ& p : rest) {
        // boundary walls: (vertex set of a simplex minus one point) seen once
        std::map<std::vector<std::vector<Int>>, std::pair<std::vector<VecZ>, VecZ>> walls;
        std::map<std::vector<std::vector<Int>>, int> count;
        for (const auto& s : simplices) {
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                std::vector<VecZ> wall;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) wall.push_back(s[i]);
                std::vector<std::vector<Int>> key;
                for (const VecZ& w : wall) key.emplace_back(w.data(), w.data() + w.size());
                std::sort(key.begin(), key.end());
                count[key] += 1;
                walls[key] = {wall, s[drop]};
            }
        }
        bool added = false;
        for (const auto& [key, cnt] : count) {
            if (cnt != 1) continue;
            const auto& [wall, opposite] = walls[key];
            // inward-oriented hyperplane of the wall
            MatQ m(dim - 1, dim);
            for (int i = 1; i < dim; ++i)
                m.row(i - 1) = to_rational(wall[static_cast<std::size_t>(i)] - wall[0]).transpose();
            const auto basis = kernel(m);
            if (basis.size() != 1) continue;
            VecZ n = primitive_direction(basis[0]);
            const Int c = -dot(n, wall[0]);
            Int side_opp = dot(n, opposite) + c;
            if (side_opp < 0) { n = -n; side_opp = -side_opp; }
            if (dot(n, p) - dot(n, wall[0]) < 0) {
                std::vector<VecZ> s = wall;
                s.push_back(p);
                simplices.push_back(std::move(s));
                added = true;
            }
        }
        if (!added)
            throw std::logic_error("placing_triangulation: point saw no boundary wall");
    }
    return simplices;
}

/** Exact normalized volume of a full-dimensional polytope via placing. */
inline Int normalized_volume(const Polytope& p)
{
    if (p.dim() != p.space.dim)
        throw std::invalid_argument("normalized_volume: polytope is not full-dimensional");
    Int vol = 0;
    for (const auto& s : placing_triangulation(p.lattice_vertices(), p.space.dim))
        vol += normalized_volume_of(s);
    return vol;
}

struct TriangulationReport {
    bool simplices_full_dimensional = true;
    bool vertices_inside = true;
    bool walls_glued = true;      // every wall is interior (2 sides) or on the boundary of P
    bool volume_matches = true;   // sum of simplex volumes equals vol(P)
    bool star = true;
    bool maximal = true;
    Int total_volume = 0;
    Int polytope_volume = 0;
    std::vector<std::string> problems;

    bool triangulation_ok() const
    {
        return simplices_full_dimensional && vertices_inside && walls_glued && volume_matches;
    }
    bool all_ok() const { return triangulation_ok() && star && maximal; }
};

/**
 * Checks the triangulation axioms for a full-dimensional triangulation of P.
 * Covering and pairwise interior-disjointness follow exactly from the checks
 * performed: every simplex sits inside P, every wall is either glued to
 * exactly one partner on the strictly opposite side or lies in a facet of P
 * (so the union has no boundary inside the interior of P and hence covers P),
 * and the exact volume accounting rules out any multiply covered region.
 * Star and maximality are reported alongside.
 */
inline TriangulationReport verify_triangulation(const Triangulation& t, const Polytope& p)
{
    TriangulationReport rep;
    const int d = p.space.dim;

    for (std::size_t si = 0; si < t.maximal.size(); ++si) {
        const auto verts = t.simplex_vertices(si);
        if (static_cast<int>(verts.size()) != d + 1 || !affinely_independent(verts)) {
            rep.simplices_full_dimensional = false;
            rep.problems.push_back("simplex #" + std::to_string(si) + " is degenerate");
            continue;
        }
        rep.total_volume += normalized_volume_of(verts);
    }
    for (const VecZ& pt : t.points)
        if (!p.contains(pt)) {
            rep.vertices_inside = false;
            rep.problems.push_back("a configuration point lies outside the polytope");
            break;
        }

    rep.polytope_volume = normalized_volume(p);
    rep.volume_matches = rep.simplices_full_dimensional && rep.total_volume == rep.polytope_volume;
    if (!rep.volume_matches)
        rep.problems.push_back("volume mismatch: simplices sum to " + rep.total_volume.str() +
                               ", polytope has " + rep.polytope_volume.str());

    // wall gluing
    std::map<std::vector<int>, std::vector<std::pair<std::size_t, int>>> walls;
    for (std::size_t si = 0; si < t.maximal.size(); ++si) {
        const auto& s = t.maximal[si];
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            std::vector<int> key;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) key.push_back(s[i]);
            std::sort(key.begin(), key.end());
            walls[key].push_back({si, s[drop]});
        }
    }
    for (const auto& [key, owners] : walls) {
        if (owners.size() > 2) {
            rep.walls_glued = false;
            rep.problems.push_back("a wall is shared by more than two simplices");
            continue;
        }
        std::vector<VecZ> wall;
        for (int idx : key) wall.push_back(t.points[static_cast<std::size_t>(idx)]);
        MatQ m(d - 1, d);
        for (int i = 1; i < d; ++i)
            m.row(i - 1) = to_rational(wall[static_cast<std::size_t>(i)] - wall[0]).transpose();
        const auto basis = kernel(m);
        if (basis.size() != 1) {
            rep.walls_glued = false;
            rep.problems.push_back("a wall is degenerate");
            continue;
        }
        const VecZ n = primitive_direction(basis[0]);
        const Int c = -dot(n, wall[0]);
        if (owners.size() == 2) {
            const Int sa = dot(n, t.points[static_cast<std::size_t>(owners[0].second)]) + c;
            const Int sb = dot(n, t.points[static_cast<std::size_t>(owners[1].second)]) + c;
            if (sa == 0 || sb == 0 || (sa > 0) == (sb > 0)) {
                rep.walls_glued = false;
                rep.problems.push_back("two simplices meet a wall from the same side");
            }
        } else {
            // must lie in a facet of P
            bool on_boundary = false;
            for (const Halfspace& f : p.hull().facets) {
                bool tight = true;
                for (const VecZ& w : wall)
                    if (dot(f.normal, w) + f.offset != 0) { tight = false; break; }
                if (tight) { on_boundary = true; break; }
            }
            if (!on_boundary) {
                rep.walls_glued = false;
                rep.problems.push_back("an unglued wall lies in the interior of P");
            }
        }
    }

    // star: every maximal simplex contains the origin as a vertex
    const VecZ origin = VecZ::Zero(d);
    bool have_origin = std::binary_search(t.points.begin(), t.points.end(), origin, lex_less);
    if (have_origin) {
        const int oidx = t.point_index(origin);
        for (const auto& s : t.maximal)
            if (std::find(s.begin(), s.end(), oidx) == s.end()) { rep.star = false; break; }
    } else {
        rep.star = false;
    }
    if (!rep.star) rep.problems.push_back("not a star triangulation");

    // maximal: the vertex set used equals all lattice points of P
    std::set<int> used;
    for (const auto& s : t.maximal)
        for (int idx : s) used.insert(idx);
    const auto lp = lattice_points(p);
    std::vector<VecZ> used_pts;
    for (int idx : used) used_pts.push_back(t.points[static_cast<std::size_t>(idx)]);
    std::sort(used_pts.begin(), used_pts.end(), lex_less);
    rep.maximal = used_pts == lp;
    if (!rep.maximal) rep.problems.push_back("not maximal: some lattice point of P is unused");

    return rep;
}

/**
 * Exact pairwise axiom check: the intersection of two maximal simplices is
 * the simplex spanned by their common vertices. Certified per pair by an
 * exact separating functional (an LP with free variables). Quadratic in the
 * number of simplices; meant for facet-scale inputs.
 */
inline bool pairwise_intersections_are_common_faces(const Triangulation& t)
{
    const int d = t.space.dim;
    const std::size_t n = t.maximal.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            std::vector<int> sa = t.maximal[a], sb = t.maximal[b];
            std::sort(sa.begin(), sa.end());
            std::sort(sb.begin(), sb.end());
            std::vector<int> common;
            std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                                  std::back_inserter(common));
            // Find (l, c): l.v = c on common, l.v <= c - 1 on sa-only, >= c + 1 on sb-only.
            // Free variables are split into differences of nonnegatives.
            const int nv = 2 * (d + 1);
            std::vector<VecQ> rows;
            std::vector<Rat> rhs;
            auto add_row = [&](const VecZ& v, int sign, bool eq) {
                VecQ r = VecQ::Zero(nv);
                for (int i = 0; i < d; ++i) {
                    r[2 * i] = sign * Rat(v[i]);
                    r[2 * i + 1] = -sign * Rat(v[i]);
                }
                r[2 * d] = -sign;
                r[2 * d + 1] = sign;
                rows.push_back(r);
                rhs.push_back(eq ? Rat(0) : Rat(-1));
            };
            for (int idx : common) {
                add_row(t.points[static_cast<std::size_t>(idx)], 1, true);
                add_row(t.points[static_cast<std::size_t>(idx)], -1, true);
            }
            for (int idx : sa)
                if (!std::binary_search(common.begin(), common.end(), idx))
                    add_row(t.points[static_cast<std::size_t>(idx)], 1, false);
            for (int idx : sb)
                if (!std::binary_search(common.begin(), common.end(), idx))
                    add_row(t.points[static_cast<std::size_t>(idx)], -1, false);
            MatQ aa(static_cast<Eigen::Index>(rows.size()), nv);
            VecQ bb(static_cast<Eigen::Index>(rows.size()));
            for (std::size_t i = 0; i < rows.size(); ++i) {
                aa.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
                bb[static_cast<Eigen::Index>(i)] = rhs[i];
            }
            const auto res = SimplexSolver::maximize(aa, bb, VecQ::Zero(nv));
            if (res.status != SimplexSolver::Status::Optimal) return false;
        }
    }
    return true;
}

/** Maximal simplices of t lying inside the given face of P (all vertices tight). */
inline std::vector<std::vector<int>> simplices_in_face(const Triangulation& t,
                                                       const VecZ& normal, const Int& offset)
{
    std::vector<std::vector<int>> out;
    for (const auto& s : t.maximal) {
        bool inside = true;
        for (int idx : s)
            if (dot(normal, t.points[static_cast<std::size_t>(idx)]) + offset != 0) {
                inside = false;
                break;
            }
        if (inside) {
            std::vector<int> key = s;
            std::sort(key.begin(), key.end());
            out.push_back(key);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace mirror33

#endif
