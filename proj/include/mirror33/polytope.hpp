#ifndef MIRROR33_POLYTOPE_HPP
#define MIRROR33_POLYTOPE_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mirror33/cone.hpp"
#include "mirror33/dd.hpp"
#include "mirror33/lattice.hpp"

namespace mirror33 {

/** Inequality normal.x + offset >= 0 with primitive integer normal. */
struct Halfspace {
    VecZ normal;
    Int offset;
};

/** Equation normal.x = value, cutting out the affine hull. */
struct HullEquation {
    VecZ normal;
    Int value;
};

struct HullData {
    std::vector<Halfspace> facets;
    std::vector<HullEquation> equations;
};

/** Facets and affine-hull equations of conv(points), via double description. */
inline HullData hull_of_points(const std::vector<VecQ>& points, int dim)
{
    if (points.empty()) return {};
    std::vector<VecZ> ineqs;
    for (const VecQ& p : points) {
        VecQ h(dim + 1);
        h.head(dim) = p;
        h[dim] = 1;
        ineqs.push_back(primitive_direction(h));
    }
    DoubleDescription dd = double_description(ineqs, dim + 1);
    HullData out;
    for (const VecZ& r : dd.rays) {
        if (r.head(dim).isZero()) continue; // the trivial 1 >= 0 row
        out.facets.push_back({r.head(dim), r[dim]});
    }
    for (const VecZ& l : dd.lineality) {
        if (l.head(dim).isZero()) continue;
        out.equations.push_back({l.head(dim), -l[dim]});
    }
    return out;
}

/**
 * A polytope with exact rational vertices, canonicalized to the irredundant
 * lexicographically sorted vertex list. The halfspace data (facets plus
 * affine-hull equations) is recomputed on demand; when both representations
 * exist they are kept consistent by construction.
 */
class Polytope {
public:
    Space space;

    Polytope() = default;

    static Polytope from_points(Space space, std::vector<VecQ> pts)
    {
        Polytope p;
        p.space = space;
        std::sort(pts.begin(), pts.end(),
                  [](const VecQ& a, const VecQ& b) {
                      for (Eigen::Index i = 0; i < a.size(); ++i)
                          if (a[i] != b[i]) return a[i] < b[i];
                      return false;
                  });
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (pts.empty()) return p;
        p.hull_ = hull_of_points(pts, space.dim);
        for (const VecQ& q : pts)
            if (p.is_vertex(q)) p.verts_.push_back(q);
        return p;
    }

    static Polytope from_lattice_points(Space space, const std::vector<VecZ>& pts)
    {
        std::vector<VecQ> qs;
        qs.reserve(pts.size());
        for (const VecZ& p : pts) qs.push_back(to_rational(p));
        return from_points(space, std::move(qs));
    }

    /** Vertex enumeration of an H-polytope; throws when the region is unbounded. */
    static Polytope from_halfspaces(Space space, const std::vector<Halfspace>& hs)
    {
        const int d = space.dim;
        std::vector<VecZ> ineqs;
        for (const Halfspace& h : hs) {
            VecZ v(d + 1);
            v.head(d) = h.normal;
            v[d] = h.offset;
            ineqs.push_back(v);
        }
        VecZ last = VecZ::Zero(d + 1);
        last[d] = 1;
        ineqs.push_back(last); // t >= 0
        DoubleDescription dd = double_description(ineqs, d + 1);
        if (!dd.lineality.empty())
            throw std::domain_error("from_halfspaces: region is unbounded");
        std::vector<VecQ> pts;
        for (const VecZ& r : dd.rays) {
            if (r[d] == 0)
                throw std::domain_error("from_halfspaces: region is unbounded");
            VecQ p(d);
            for (int i = 0; i < d; ++i) p[i] = Rat(r[i], r[d]);
            pts.push_back(p);
        }
        return from_points(space, std::move(pts));
    }

    const std::vector<VecQ>& vertices() const { return verts_; }
    bool empty() const { return verts_.empty(); }

    std::vector<VecZ> lattice_vertices() const
    {
        std::vector<VecZ> out;
        for (const VecQ& v : verts_) {
            VecZ w(v.size());
            for (Eigen::Index i = 0; i < v.size(); ++i) {
                if (denominator(v[i]) != 1)
                    throw std::domain_error("lattice_vertices: vertex is not a lattice point");
                w[i] = numerator(v[i]);
            }
            out.push_back(w);
        }
        return out;
    }

    bool is_lattice_polytope() const
    {
        for (const VecQ& v : verts_)
            for (Eigen::Index i = 0; i < v.size(); ++i)
                if (denominator(v[i]) != 1) return false;
        return true;
    }

    const HullData& hull() const
    {
        if (!verts_.empty() && hull_.facets.empty() && hull_.equations.empty())
            hull_ = hull_of_points(verts_, space.dim);
        return hull_;
    }

    int dim() const
    {
        if (verts_.empty()) return -1;
        return space.dim - static_cast<int>(hull().equations.size());
    }

    bool contains(const VecQ& x) const
    {
        if (verts_.empty()) return false;
        for (const HullEquation& e : hull().equations)
            if (dot(to_rational(e.normal), x) != Rat(e.value)) return false;
        for (const Halfspace& f : hull().facets)
            if (dot(to_rational(f.normal), x) + Rat(f.offset) < 0) return false;
        return true;
    }

    bool contains(const VecZ& x) const { return contains(to_rational(x)); }

    bool strictly_contains_origin() const
    {
        if (verts_.empty() || dim() != space.dim) return false;
        for (const Halfspace& f : hull().facets)
            if (f.offset <= 0) return false;
        return true;
    }

    bool operator==(const Polytope& o) const
    {
        return space == o.space && verts_ == o.verts_;
    }
    bool operator!=(const Polytope& o) const { return !(*this == o); }

private:
    std::vector<VecQ> verts_;
    mutable HullData hull_;

    bool is_vertex(const VecQ& p) const
    {
        // Active constraints must pin p: rank(active normals + equations) = dim.
        std::vector<VecZ> active;
        for (const HullEquation& e : hull_.equations) {
            if (dot(to_rational(e.normal), p) != Rat(e.value)) return false;
            active.push_back(e.normal);
        }
        for (const Halfspace& f : hull_.facets) {
            const Rat s = dot(to_rational(f.normal), p) + Rat(f.offset);
            if (s < 0) return false;
            if (s == 0) active.push_back(f.normal);
        }
        if (active.empty()) return false;
        MatQ m(static_cast<Eigen::Index>(active.size()), space.dim);
        for (std::size_t i = 0; i < active.size(); ++i)
            m.row(static_cast<Eigen::Index>(i)) = to_rational(active[i]).transpose();
        return rank_of(m) == space.dim;
    }
};

/** Vertex representation of P + Q, irredundant. */
inline Polytope minkowski_sum(const Polytope& p, const Polytope& q)
{
    if (p.space != q.space)
        throw std::invalid_argument("minkowski_sum: different spaces");
    std::vector<VecQ> sums;
    for (const VecQ& a : p.vertices())
        for (const VecQ& b : q.vertices()) sums.push_back(a + b);
    return Polytope::from_points(p.space, std::move(sums));
}

/** Thrown by dual_polytope when 0 is not interior; carries a separating facet. */
struct OriginNotInteriorError : std::domain_error {
    VecZ functional;
    Int offset;
    OriginNotInteriorError(VecZ f, Int off)
        : std::domain_error("dual_polytope: origin is not an interior point"),
          functional(std::move(f)), offset(std::move(off)) {}
};

struct DualPolytopeResult {
    Polytope dual;
    bool reflexive = false;
};

/**
 * Dual polytope { m : (n, m) >= -1 for all n in P }, with the reflexivity flag
 * (dual vertices all integral).
 */
inline DualPolytopeResult dual_polytope(const Polytope& p)
{
    if (p.dim() != p.space.dim)
        throw std::domain_error("dual_polytope: polytope is not full-dimensional");
    for (const Halfspace& f : p.hull().facets)
        if (f.offset <= 0) throw OriginNotInteriorError(f.normal, f.offset);
    std::vector<Halfspace> hs;
    for (const VecQ& v : p.vertices()) {
        VecQ h(p.space.dim + 1);
        h.head(p.space.dim) = v;
        h[p.space.dim] = 1;
        const VecZ hz = primitive_direction(h);
        hs.push_back({hz.head(p.space.dim), hz[p.space.dim]});
    }
    DualPolytopeResult res;
    res.dual = Polytope::from_halfspaces(p.space.dual(), hs);
    res.reflexive = res.dual.is_lattice_polytope();
    return res;
}

/** All lattice points of a bounded polytope, by box enumeration. */
inline std::vector<VecZ> lattice_points(const Polytope& p)
{
    std::vector<VecZ> out;
    if (p.empty()) return out;
    const int d = p.space.dim;
    std::vector<Int> lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        Rat mn = p.vertices()[0][i], mx = mn;
        for (const VecQ& v : p.vertices()) {
            if (v[i] < mn) mn = v[i];
            if (v[i] > mx) mx = v[i];
        }
        // ceil(mn), floor(mx)
        Int num = numerator(mn), den = denominator(mn);
        lo[static_cast<std::size_t>(i)] = num >= 0 ? Int((num + den - 1) / den) : Int(-((-num) / den));
        num = numerator(mx);
        den = denominator(mx);
        hi[static_cast<std::size_t>(i)] = num >= 0 ? Int(num / den) : Int(-(((-num) + den - 1) / den));
    }
    VecZ x(d);
    for (int i = 0; i < d; ++i) x[i] = lo[static_cast<std::size_t>(i)];
    for (;;) {
        if (p.contains(x)) out.push_back(x);
        int i = 0;
        for (; i < d; ++i) {
            if (++x[i] <= hi[static_cast<std::size_t>(i)]) break;
            x[i] = lo[static_cast<std::size_t>(i)];
        }
        if (i == d) break;
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

} // namespace mirror33

#endif
