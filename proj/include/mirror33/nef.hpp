#ifndef MIRROR33_NEF_HPP
#define MIRROR33_NEF_HPP

#include <optional>
#include <string>
#include <vector>

#include "mirror33/fan.hpp"
#include "mirror33/polytope.hpp"

namespace mirror33 {

/** A Minkowski decomposition total = parts[0] + ... + parts[k-1]. */
struct NefPartition {
    Polytope total;
    std::vector<Polytope> parts;
};

struct NefCheck {
    bool ok = false;
    std::string reason;
    std::optional<VecQ> witness; // a point separating the failed condition
};

/**
 * Checks the nef-partition conditions: parts are positive-dimensional, contain
 * the origin, Minkowski-sum to the total, and the total is reflexive.
 */
inline NefCheck is_nef_partition(const NefPartition& np)
{
    NefCheck res;
    const VecQ origin = VecQ::Zero(np.total.space.dim);
    for (std::size_t i = 0; i < np.parts.size(); ++i) {
        const Polytope& part = np.parts[i];
        if (part.space != np.total.space) {
            res.reason = "part " + std::to_string(i) + " lives in a different space";
            return res;
        }
        if (part.dim() < 1) {
            res.reason = "part " + std::to_string(i) + " is not positive-dimensional";
            if (!part.vertices().empty()) res.witness = part.vertices()[0];
            return res;
        }
        if (!part.contains(origin)) {
            res.reason = "part " + std::to_string(i) + " does not contain the origin";
            res.witness = origin;
            return res;
        }
    }
    Polytope sum = np.parts.empty() ? np.total : np.parts[0];
    for (std::size_t i = 1; i < np.parts.size(); ++i) sum = minkowski_sum(sum, np.parts[i]);
    if (!(sum == np.total)) {
        res.reason = "Minkowski sum of the parts differs from the total";
        for (const VecQ& v : sum.vertices())
            if (!np.total.contains(v)) { res.witness = v; break; }
        if (!res.witness)
            for (const VecQ& v : np.total.vertices())
                if (!sum.contains(v)) { res.witness = v; break; }
        return res;
    }
    try {
        if (!dual_polytope(np.total).reflexive) {
            res.reason = "total polytope is not reflexive";
            return res;
        }
    } catch (const OriginNotInteriorError& e) {
        res.reason = "origin is not interior to the total polytope";
        res.witness = to_rational(e.functional);
        return res;
    }
    res.ok = true;
    return res;
}

/**
 * Batyrev-Borisov dual nef-partition: part j of the dual is cut out by
 * (parts[j], m) + 1 >= 0 and (parts[i], m) >= 0 for i != j, with the
 * inequalities ranging over the vertices of each part.
 */
inline NefPartition dual_nef_partition(const NefPartition& np)
{
    const Space dual_space = np.total.space.dual();
    NefPartition out;
    for (std::size_t j = 0; j < np.parts.size(); ++j) {
        std::vector<Halfspace> hs;
        for (std::size_t i = 0; i < np.parts.size(); ++i) {
            const Int offset = (i == j) ? 1 : 0;
            for (const VecZ& v : np.parts[i].lattice_vertices())
                hs.push_back({v, offset});
        }
        out.parts.push_back(Polytope::from_halfspaces(dual_space, hs));
    }
    out.total = out.parts.empty() ? Polytope() : out.parts[0];
    for (std::size_t j = 1; j < out.parts.size(); ++j)
        out.total = minkowski_sum(out.total, out.parts[j]);
    return out;
}

/** A torus-invariant divisor sum a_rho D_rho on a fan. */
struct TorusDivisor {
    Fan fan;
    std::vector<Int> coeffs; // one per fan ray

    Int coeff(std::size_t ray) const { return coeffs[ray]; }
};

inline TorusDivisor zero_divisor(Fan f)
{
    TorusDivisor d;
    d.coeffs.assign(f.rays.size(), Int(0));
    d.fan = std::move(f);
    return d;
}

/** P_D = { n : (n, u_rho) + a_rho >= 0 } for a divisor on a complete fan. */
inline Polytope fundamental_polytope(const TorusDivisor& d)
{
    std::vector<Halfspace> hs;
    for (std::size_t i = 0; i < d.fan.rays.size(); ++i)
        hs.push_back({d.fan.rays[i], d.coeffs[i]});
    return Polytope::from_halfspaces(d.fan.space.dual(), hs);
}

/** D_P = sum (-min_{m in P} (u_rho, m)) D_rho; the minimum is over vertices. */
inline TorusDivisor divisor_from_polytope(const Polytope& p, const Fan& f)
{
    if (p.space != f.space.dual())
        throw std::invalid_argument("divisor_from_polytope: polytope must live in the dual space");
    if (!p.is_lattice_polytope())
        throw std::invalid_argument("divisor_from_polytope: polytope must be a lattice polytope");
    TorusDivisor d;
    d.fan = f;
    for (const VecZ& ray : f.rays) {
        std::optional<Int> mn;
        for (const VecZ& v : p.lattice_vertices()) {
            const Int val = dot(ray, v);
            if (!mn || val < *mn) mn = val;
        }
        d.coeffs.push_back(mn ? Int(-*mn) : Int(0));
    }
    return d;
}

struct NotCartierError : std::domain_error {
    std::size_t cone_index;
    explicit NotCartierError(std::size_t idx)
        : std::domain_error("divisor is not Cartier on cone #" + std::to_string(idx)),
          cone_index(idx) {}
};

/**
 * The support function of a Cartier divisor: on each maximal cone a single
 * integral linear functional m_sigma with (m_sigma, u_rho) = -a_rho.
 */
struct SupportFunction {
    Fan fan;
    std::vector<VecQ> cone_functionals; // one per maximal cone, in dual coordinates

    /** Value at a point of the fan's support. */
    Rat operator()(const VecZ& x) const
    {
        for (std::size_t i = 0; i < fan.max_cones.size(); ++i) {
            const Cone c = fan.cone(i);
            if (in_cone_of(c.rays, x)) return dot(cone_functionals[i], to_rational(x));
        }
        throw std::domain_error("support function: point outside the fan support");
    }
};

inline SupportFunction support_function(const TorusDivisor& d)
{
    SupportFunction sf;
    sf.fan = d.fan;
    for (std::size_t ci = 0; ci < d.fan.max_cones.size(); ++ci) {
        const auto& cone_rays = d.fan.max_cones[ci];
        MatQ a(static_cast<Eigen::Index>(cone_rays.size()), d.fan.space.dim);
        VecQ b(static_cast<Eigen::Index>(cone_rays.size()));
        for (std::size_t k = 0; k < cone_rays.size(); ++k) {
            a.row(static_cast<Eigen::Index>(k)) =
                to_rational(d.fan.rays[static_cast<std::size_t>(cone_rays[k])]).transpose();
            b[static_cast<Eigen::Index>(k)] = -Rat(d.coeffs[static_cast<std::size_t>(cone_rays[k])]);
        }
        const auto m = solve(a, b);
        if (!m) throw NotCartierError(ci);
        bool integral = true;
        for (Eigen::Index i = 0; i < m->size(); ++i)
            if (denominator((*m)[i]) != 1) integral = false;
        if (!integral) throw NotCartierError(ci);
        sf.cone_functionals.push_back(*m);
    }
    return sf;
}

/**
 * Pullback of a Cartier divisor along a fan refinement: the new coefficient
 * at a ray r of the fine fan is minus the support-function value at r.
 */
inline TorusDivisor pullback_divisor(const TorusDivisor& d, const Fan& fine)
{
    if (fine.space != d.fan.space)
        throw std::invalid_argument("pullback_divisor: fans live in different spaces");
    if (!refines(fine, d.fan))
        throw std::invalid_argument("pullback_divisor: fan does not refine the divisor's fan");
    const SupportFunction sf = support_function(d);

    // For each coarse cone, its dual-ray description for fast containment.
    std::vector<Cone> coarse_duals;
    for (std::size_t i = 0; i < d.fan.max_cones.size(); ++i)
        coarse_duals.push_back(dual_cone(d.fan.cone(i)));

    TorusDivisor out;
    out.fan = fine;
    for (const VecZ& r : fine.rays) {
        std::optional<Rat> val;
        for (std::size_t i = 0; i < coarse_duals.size(); ++i) {
            bool inside = true;
            for (const VecZ& w : coarse_duals[i].rays)
                if (dot(w, r) < 0) { inside = false; break; }
            if (inside) {
                val = dot(sf.cone_functionals[i], to_rational(r));
                break;
            }
        }
        if (!val) throw std::domain_error("pullback_divisor: ray outside the coarse support");
        if (denominator(*val) != 1)
            throw std::logic_error("pullback_divisor: non-integral support value");
        out.coeffs.push_back(-numerator(*val));
    }
    return out;
}

} // namespace mirror33

#endif
