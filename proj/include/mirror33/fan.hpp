#ifndef MIRROR33_FAN_HPP
#define MIRROR33_FAN_HPP

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "mirror33/cone.hpp"
#include "mirror33/polytope.hpp"

namespace mirror33 {

/** A complete (or at least pure) fan given by its maximal cones. */
struct Fan {
    Space space;
    std::vector<VecZ> rays;                  // primitive, lex-sorted
    std::vector<std::vector<int>> max_cones; // sorted ray indices per cone

    Cone cone(std::size_t i) const
    {
        Cone c;
        c.space = space;
        for (int r : max_cones[i]) c.rays.push_back(rays[static_cast<std::size_t>(r)]);
        return c;
    }
};

inline Fan fan_from_cones(Space space, const std::vector<std::vector<VecZ>>& cones)
{
    std::vector<VecZ> rays;
    for (const auto& c : cones)
        for (const VecZ& r : c) rays.push_back(make_primitive(r));
    std::sort(rays.begin(), rays.end(), lex_less);
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

    auto index_of = [&](const VecZ& r) {
        const VecZ p = make_primitive(r);
        const auto it = std::lower_bound(rays.begin(), rays.end(), p, lex_less);
        return static_cast<int>(it - rays.begin());
    };
    Fan f;
    f.space = space;
    f.rays = rays;
    for (const auto& c : cones) {
        std::vector<int> idx;
        for (const VecZ& r : c) idx.push_back(index_of(r));
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        f.max_cones.push_back(std::move(idx));
    }
    std::sort(f.max_cones.begin(), f.max_cones.end());
    f.max_cones.erase(std::unique(f.max_cones.begin(), f.max_cones.end()), f.max_cones.end());
    return f;
}

/** Normal fan: one maximal cone per vertex, dual to the vertex cone of P - v. */
inline Fan normal_fan(const Polytope& p)
{
    if (p.dim() != p.space.dim)
        throw std::domain_error("normal_fan: polytope is not full-dimensional");
    std::vector<std::vector<VecZ>> cones;
    for (const VecQ& v : p.vertices()) {
        std::vector<VecZ> gens;
        for (const VecQ& w : p.vertices()) {
            if (w == v) continue;
            gens.push_back(primitive_direction(w - v));
        }
        Cone vertex_cone = make_cone(p.space, std::move(gens));
        cones.push_back(dual_cone(vertex_cone).rays);
    }
    return fan_from_cones(p.space.dual(), cones);
}

/** Face fan: cones over the proper faces; maximal cones sit over the facets. */
inline Fan face_fan(const Polytope& p)
{
    if (!p.strictly_contains_origin())
        throw std::domain_error("face_fan: origin is not interior");
    std::vector<std::vector<VecZ>> cones;
    for (const Halfspace& f : p.hull().facets) {
        std::vector<VecZ> gens;
        for (const VecQ& v : p.vertices())
            if (dot(to_rational(f.normal), v) + Rat(f.offset) == 0)
                gens.push_back(primitive_direction(v));
        cones.push_back(std::move(gens));
    }
    return fan_from_cones(p.space, cones);
}

inline bool fan_equal(const Fan& a, const Fan& b)
{
    if (a.space != b.space) return false;
    auto canon = [](const Fan& f) {
        std::set<std::vector<std::vector<Int>>> cones;
        for (std::size_t i = 0; i < f.max_cones.size(); ++i) {
            std::vector<std::vector<Int>> c;
            for (int r : f.max_cones[i]) {
                const VecZ& v = f.rays[static_cast<std::size_t>(r)];
                c.emplace_back(v.data(), v.data() + v.size());
            }
            std::sort(c.begin(), c.end());
            cones.insert(std::move(c));
        }
        return cones;
    };
    return canon(a) == canon(b);
}

/** Does every maximal cone of `fine` lie inside some maximal cone of `coarse`? */
inline bool refines(const Fan& fine, const Fan& coarse)
{
    if (fine.space != coarse.space) return false;
    std::vector<Cone> coarse_duals;
    for (std::size_t i = 0; i < coarse.max_cones.size(); ++i)
        coarse_duals.push_back(dual_cone(coarse.cone(i)));
    for (std::size_t i = 0; i < fine.max_cones.size(); ++i) {
        bool found = false;
        for (const Cone& dual : coarse_duals) {
            bool inside = true;
            for (int r : fine.max_cones[i]) {
                const VecZ& ray = fine.rays[static_cast<std::size_t>(r)];
                for (const VecZ& w : dual.rays)
                    if (dot(w, ray) < 0) { inside = false; break; }
                if (!inside) break;
            }
            if (inside) { found = true; break; }
        }
        if (!found) return false;
    }
    return true;
}

/** Samples exact rational directions and checks each lies in some maximal cone. */
inline bool is_complete_sampled(const Fan& f, int samples = 1000, unsigned seed = 20240331)
{
    std::vector<Cone> duals;
    for (std::size_t i = 0; i < f.max_cones.size(); ++i)
        duals.push_back(dual_cone(f.cone(i)));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(-9, 9);
    const int d = f.space.dim;
    for (int s = 0; s < samples; ++s) {
        VecZ x(d);
        bool zero = true;
        for (int i = 0; i < d; ++i) {
            x[i] = coord(rng);
            if (x[i] != 0) zero = false;
        }
        if (zero) continue;
        bool covered = false;
        for (const Cone& dual : duals) {
            bool inside = true;
            for (const VecZ& w : dual.rays)
                if (dot(w, x) < 0) { inside = false; break; }
            if (inside) { covered = true; break; }
        }
        if (!covered) return false;
    }
    return true;
}

/** Is cone(sub) a face of c? Uses the sum of all dual rays vanishing on sub. */
inline bool is_face_of(const Cone& c, const std::vector<VecZ>& sub)
{
    const Cone dual = dual_cone(c);
    VecZ w = VecZ::Zero(c.space.dim);
    for (const VecZ& d : dual.rays) {
        bool vanishes = true;
        for (const VecZ& s : sub)
            if (dot(d, s) != 0) { vanishes = false; break; }
        if (vanishes) w += d;
    }
    std::vector<VecZ> tight;
    for (const VecZ& r : c.rays)
        if (dot(w, r) == 0) tight.push_back(r);
    std::vector<VecZ> subn;
    for (const VecZ& s : sub) subn.push_back(make_primitive(s));
    std::sort(subn.begin(), subn.end(), lex_less);
    subn.erase(std::unique(subn.begin(), subn.end()), subn.end());
    std::sort(tight.begin(), tight.end(), lex_less);
    return subn == tight;
}

/**
 * Exhaustive pairwise fan axiom check: the intersection of any two maximal
 * cones is a common face. Exact, meant for small fans.
 */
inline bool is_fan_pairwise(const Fan& f)
{
    std::vector<Cone> cones, duals;
    for (std::size_t i = 0; i < f.max_cones.size(); ++i) {
        cones.push_back(f.cone(i));
        duals.push_back(dual_cone(cones.back()));
    }
    for (std::size_t i = 0; i < cones.size(); ++i) {
        for (std::size_t j = i + 1; j < cones.size(); ++j) {
            std::vector<VecZ> ineqs = duals[i].rays;
            ineqs.insert(ineqs.end(), duals[j].rays.begin(), duals[j].rays.end());
            DoubleDescription meet = double_description(ineqs, f.space.dim);
            if (!meet.lineality.empty()) return false;
            if (!is_face_of(cones[i], meet.rays)) return false;
            if (!is_face_of(cones[j], meet.rays)) return false;
        }
    }
    return true;
}

} // namespace mirror33

#endif
