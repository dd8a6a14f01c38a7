#ifndef MIRROR33_BUILTINS_HPP
#define MIRROR33_BUILTINS_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "mirror33/fan.hpp"
#include "mirror33/polytope.hpp"

namespace mirror33 {

/** Unit vector e_i (1-based) in Z^6. */
inline VecZ e6(int i)
{
    VecZ v = VecZ::Zero(6);
    v[i - 1] = 1;
    return v;
}

/** u_i = 3 e_i - e_1 - e_2 - e_3 in N, ambient coordinates. */
inline VecZ u_vector(int i)
{
    VecZ v = 3 * e6(i);
    v[0] -= 1; v[1] -= 1; v[2] -= 1;
    return v;
}

/** v_i = 3 e_i - e_4 - e_5 - e_6 in N, ambient coordinates. */
inline VecZ v_vector(int i)
{
    VecZ v = 3 * e6(i);
    v[3] -= 1; v[4] -= 1; v[5] -= 1;
    return v;
}

/** u_{abc} = -e_1-e_2-e_3 + e_a + e_b + e_c (multiset 1 <= a <= b <= c <= 6). */
inline VecZ u_triple(int a, int b, int c)
{
    VecZ v = e6(a) + e6(b) + e6(c);
    v[0] -= 1; v[1] -= 1; v[2] -= 1;
    return v;
}

inline VecZ v_triple(int a, int b, int c)
{
    VecZ v = e6(a) + e6(b) + e6(c);
    v[3] -= 1; v[4] -= 1; v[5] -= 1;
    return v;
}

inline LatticeVector n_vec(const VecZ& ambient) { return LatticeVector(Space::N(), ambient); }
inline LatticeVector m_vec(const VecZ& ambient) { return LatticeVector(Space::M(), ambient); }

/** Delta = conv(6 e_i - sum e), the reflexive simplex of P^5. */
inline Polytope make_delta()
{
    std::vector<VecZ> pts;
    for (int i = 1; i <= 6; ++i) {
        VecZ v = 6 * e6(i);
        for (int j = 0; j < 6; ++j) v[j] -= 1;
        pts.push_back(n_vec(v).reduced());
    }
    return Polytope::from_lattice_points(Space::N(), pts);
}

inline Polytope make_delta1()
{
    std::vector<VecZ> pts;
    for (int i = 1; i <= 6; ++i) pts.push_back(n_vec(u_vector(i)).reduced());
    return Polytope::from_lattice_points(Space::N(), pts);
}

inline Polytope make_delta2()
{
    std::vector<VecZ> pts;
    for (int i = 1; i <= 6; ++i) pts.push_back(n_vec(v_vector(i)).reduced());
    return Polytope::from_lattice_points(Space::N(), pts);
}

inline Polytope make_nabla1()
{
    std::vector<VecZ> pts{VecZ::Zero(5)};
    for (int i = 0; i < 3; ++i) pts.push_back(basis_vector(Space::M(), i));
    return Polytope::from_lattice_points(Space::M(), pts);
}

inline Polytope make_nabla2()
{
    std::vector<VecZ> pts{VecZ::Zero(5)};
    for (int i = 3; i < 6; ++i) pts.push_back(basis_vector(Space::M(), i));
    return Polytope::from_lattice_points(Space::M(), pts);
}

inline Polytope make_nabla() { return minkowski_sum(make_nabla1(), make_nabla2()); }

/** P = conv(Delta_1, Delta_2), the support of the triangulation. */
inline Polytope make_p()
{
    std::vector<VecZ> pts;
    for (int i = 1; i <= 6; ++i) {
        pts.push_back(n_vec(u_vector(i)).reduced());
        pts.push_back(n_vec(v_vector(i)).reduced());
    }
    return Polytope::from_lattice_points(Space::N(), pts);
}

/** Normal fan of Delta: sigma_i = cone{e_1, ..., e_i omitted, ..., e_6} in M. */
inline Fan make_sigma_delta()
{
    std::vector<std::vector<VecZ>> cones;
    for (int omit = 0; omit < 6; ++omit) {
        std::vector<VecZ> gens;
        for (int j = 0; j < 6; ++j)
            if (j != omit) gens.push_back(basis_vector(Space::M(), j));
        cones.push_back(std::move(gens));
    }
    return fan_from_cones(Space::M(), cones);
}

/** The fan with maximal cones U_i, V_j, C_{i,j}, by the explicit formulas. */
inline Fan make_sigma_nabla()
{
    std::vector<std::vector<VecZ>> cones;
    for (int i = 1; i <= 3; ++i) {
        std::vector<VecZ> gens;
        for (int k = 1; k <= 6; ++k)
            if (k != i) gens.push_back(n_vec(u_vector(k)).reduced());
        cones.push_back(std::move(gens));
    }
    for (int j = 4; j <= 6; ++j) {
        std::vector<VecZ> gens;
        for (int k = 1; k <= 6; ++k)
            if (k != j) gens.push_back(n_vec(v_vector(k)).reduced());
        cones.push_back(std::move(gens));
    }
    for (int i = 1; i <= 3; ++i) {
        for (int j = 4; j <= 6; ++j) {
            std::vector<VecZ> gens;
            for (int k = 1; k <= 6; ++k) {
                if (k == i || k == j) continue;
                gens.push_back(n_vec(u_vector(k)).reduced());
                gens.push_back(n_vec(v_vector(k)).reduced());
            }
            cones.push_back(std::move(gens));
        }
    }
    return fan_from_cones(Space::N(), cones);
}

/** Label of a ray of Pi: a u- or v-type triple. */
struct RayLabel {
    enum class Kind { U, V };
    Kind kind;
    std::array<int, 3> idx; // nondecreasing, 1-based

    VecZ ambient() const
    {
        return kind == Kind::U ? u_triple(idx[0], idx[1], idx[2])
                               : v_triple(idx[0], idx[1], idx[2]);
    }
    VecZ reduced() const { return n_vec(ambient()).reduced(); }

    std::string name() const
    {
        return (kind == Kind::U ? "u" : "v") + std::to_string(idx[0]) +
               std::to_string(idx[1]) + std::to_string(idx[2]);
    }

    bool operator==(const RayLabel& o) const { return kind == o.kind && idx == o.idx; }
    bool operator<(const RayLabel& o) const
    {
        if (kind != o.kind) return kind < o.kind;
        return idx < o.idx;
    }
};

/** phi_s: how many of the label's indices equal s. */
inline int index_support(const RayLabel& r, int s)
{
    int n = 0;
    for (int i : r.idx)
        if (i == s) ++n;
    return n;
}

/** The 110 ray labels of Pi: all triples except u_123 and v_456 (those are 0). */
inline std::vector<RayLabel> all_ray_labels()
{
    std::vector<RayLabel> out;
    for (int a = 1; a <= 6; ++a)
        for (int b = a; b <= 6; ++b)
            for (int c = b; c <= 6; ++c) {
                if (!(a == 1 && b == 2 && c == 3))
                    out.push_back({RayLabel::Kind::U, {a, b, c}});
                if (!(a == 4 && b == 5 && c == 6))
                    out.push_back({RayLabel::Kind::V, {a, b, c}});
            }
    return out;
}

inline RayLabel parse_ray_label(const std::string& s)
{
    if (s.size() != 4 || (s[0] != 'u' && s[0] != 'v'))
        throw std::invalid_argument("ray label must look like u124 or v556");
    RayLabel r;
    r.kind = s[0] == 'u' ? RayLabel::Kind::U : RayLabel::Kind::V;
    for (int i = 0; i < 3; ++i) {
        const char c = s[static_cast<std::size_t>(i + 1)];
        if (c < '1' || c > '6') throw std::invalid_argument("ray label indices must be 1..6");
        r.idx[static_cast<std::size_t>(i)] = c - '0';
    }
    if (!(r.idx[0] <= r.idx[1] && r.idx[1] <= r.idx[2]))
        throw std::invalid_argument("ray label indices must be nondecreasing");
    if (r.kind == RayLabel::Kind::U && r.idx == std::array<int, 3>{1, 2, 3})
        throw std::invalid_argument("u123 is not a ray (it is the origin)");
    if (r.kind == RayLabel::Kind::V && r.idx == std::array<int, 3>{4, 5, 6})
        throw std::invalid_argument("v456 is not a ray (it is the origin)");
    return r;
}

} // namespace mirror33

#endif
