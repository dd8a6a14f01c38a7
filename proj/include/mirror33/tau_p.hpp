#ifndef MIRROR33_TAU_P_HPP
#define MIRROR33_TAU_P_HPP

#include <string>
#include <vector>

#include "mirror33/triangulation.hpp"

namespace mirror33 {

/** w = e1 + e2 + e3 - e4 - e5 - e6, the prism translation u_{abc} -> v_{abc}. */
inline VecZ prism_shift()
{
    VecZ w(6);
    w << 1, 1, 1, -1, -1, -1;
    return n_vec(w).reduced();
}

struct FacetTriangulation {
    std::string name;   // "U1".."U3", "V4".."V6", "C1,4".."C3,6"
    Triangulation tau;  // triangulation of the facet, 4-simplices
};

/**
 * The facet triangulations of P = conv(Delta_1, Delta_2), with the global
 * vertex order u_1,...,u_6,v_1,...,v_6:
 *
 *   tau(P(U_i)) = Esd_3(conv(u_111, ..., u_iii omitted, ..., u_666)),
 *   tau(P(V_j)) = Esd_3(conv(v_111, ..., v_jjj omitted, ..., v_666)),
 *   tau(P(C_{i,j})) = union of prism(delta, delta + w) over the 3-simplices
 *                     delta of tau(P(U_i cap C_{i,j})).
 */
inline std::vector<FacetTriangulation> facet_triangulations()
{
    std::vector<FacetTriangulation> out;
    for (int i = 1; i <= 3; ++i) {
        std::vector<VecZ> verts;
        for (int k = 1; k <= 6; ++k)
            if (k != i) verts.push_back(n_vec(u_vector(k)).reduced());
        const OrderedSimplex facet = make_simplex(Space::N(), verts);
        out.push_back({"U" + std::to_string(i), edgewise_subdivision(facet, 3)});
    }
    for (int j = 4; j <= 6; ++j) {
        std::vector<VecZ> verts;
        for (int k = 1; k <= 6; ++k)
            if (k != j) verts.push_back(n_vec(v_vector(k)).reduced());
        const OrderedSimplex facet = make_simplex(Space::N(), verts);
        out.push_back({"V" + std::to_string(j), edgewise_subdivision(facet, 3)});
    }
    const VecZ w = prism_shift();
    for (int i = 1; i <= 3; ++i) {
        for (int j = 4; j <= 6; ++j) {
            std::vector<VecZ> verts;
            for (int k = 1; k <= 6; ++k)
                if (k != i && k != j) verts.push_back(n_vec(u_vector(k)).reduced());
            const OrderedSimplex face = make_simplex(Space::N(), verts);
            std::vector<std::vector<VecZ>> simplices;
            for (const auto& delta : edgewise_maximal_simplices(face, 3)) {
                OrderedSimplex d1{Space::N(), delta};
                OrderedSimplex d2 = d1;
                for (VecZ& v : d2.verts) v += w;
                for (auto& s : prism_maximal_simplices(d1, d2)) simplices.push_back(std::move(s));
            }
            out.push_back({"C" + std::to_string(i) + "," + std::to_string(j),
                           triangulation_from_simplices(Space::N(), simplices)});
        }
    }
    return out;
}

/** The glued boundary triangulation tau(dP): 6*81 + 9*108 = 1458 cells. */
inline Triangulation build_tau_boundary()
{
    std::vector<std::vector<VecZ>> simplices;
    for (const auto& ft : facet_triangulations())
        for (std::size_t i = 0; i < ft.tau.maximal.size(); ++i)
            simplices.push_back(ft.tau.simplex_vertices(i));
    return triangulation_from_simplices(Space::N(), simplices);
}

/**
 * The maximal projective star triangulation tau(P): the boundary cells coned
 * from the origin, over the configuration of all 111 lattice points of P.
 */
inline Triangulation build_tau_p()
{
    const Triangulation boundary = build_tau_boundary();
    const VecZ origin = VecZ::Zero(5);
    std::vector<std::vector<VecZ>> simplices;
    for (std::size_t i = 0; i < boundary.maximal.size(); ++i) {
        auto verts = boundary.simplex_vertices(i);
        verts.push_back(origin);
        simplices.push_back(std::move(verts));
    }
    std::vector<VecZ> config = lattice_points(make_p());
    return triangulation_from_simplices(Space::N(), simplices, std::move(config));
}

inline bool all_cones_unimodular(const Fan& f)
{
    for (std::size_t i = 0; i < f.max_cones.size(); ++i) {
        if (static_cast<int>(f.max_cones[i].size()) != f.space.dim) return false;
        MatZ m(f.space.dim, f.space.dim);
        for (int j = 0; j < f.space.dim; ++j)
            m.col(j) = f.rays[static_cast<std::size_t>(f.max_cones[i][static_cast<std::size_t>(j)])];
        Int dv = numerator(det(m));
        if (dv < 0) dv = -dv;
        if (dv != 1) return false;
    }
    return true;
}

/**
 * The face fan of a star triangulation: one maximal cone per maximal simplex,
 * spanned by its nonzero vertices. Rejects non-star input; optionally asserts
 * smoothness (all cones unimodular), which holds for tau(P).
 */
inline Fan fan_from_star_triangulation(const Triangulation& t, bool assert_unimodular = true)
{
    const VecZ origin = VecZ::Zero(t.space.dim);
    std::vector<std::vector<VecZ>> cones;
    for (std::size_t i = 0; i < t.maximal.size(); ++i) {
        std::vector<VecZ> gens;
        bool has_origin = false;
        for (const VecZ& v : t.simplex_vertices(i)) {
            if (v == origin) has_origin = true;
            else gens.push_back(v);
        }
        if (!has_origin)
            throw std::invalid_argument("fan_from_star_triangulation: not a star triangulation");
        cones.push_back(std::move(gens));
    }
    Fan f = fan_from_cones(t.space, cones);
    if (assert_unimodular && !all_cones_unimodular(f))
        throw std::domain_error("fan_from_star_triangulation: a cone is not unimodular");
    return f;
}

/** The smooth refinement Pi of Sigma_nabla, from the star triangulation. */
inline Fan make_pi_fan() { return fan_from_star_triangulation(build_tau_p()); }

} // namespace mirror33

#endif
