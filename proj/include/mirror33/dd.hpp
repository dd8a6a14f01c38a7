#ifndef MIRROR33_DD_HPP
#define MIRROR33_DD_HPP

#include <algorithm>
#include <vector>

#include "mirror33/linalg.hpp"

namespace mirror33 {

/**
 * Double description of a polyhedral cone { x : a_i . x >= 0 }.
 * `rays` generate the pointed part, `lineality` spans the lineality space;
 * the cone is cone(rays) + span(lineality).
 */
struct DoubleDescription {
    std::vector<VecZ> rays;
    std::vector<VecZ> lineality;
};

namespace detail {

struct DDRay {
    VecZ v;
    std::vector<bool> tight; // per processed inequality
};

inline bool adjacent(const std::vector<DDRay>& rays, std::size_t a, std::size_t b)
{
    const std::size_t m = rays[a].tight.size();
    for (std::size_t k = 0; k < rays.size(); ++k) {
        if (k == a || k == b) continue;
        bool contains = true;
        for (std::size_t i = 0; i < m && contains; ++i)
            if (rays[a].tight[i] && rays[b].tight[i] && !rays[k].tight[i])
                contains = false;
        if (contains) return false;
    }
    return true;
}

} // namespace detail

/**
 * Motzkin's double description method; incremental over the inequality list,
 * with the combinatorial adjacency test. Sizes here are tiny (dim <= 6), so
 * no effort is spent on insertion order heuristics.
 */
inline DoubleDescription double_description(const std::vector<VecZ>& inequalities, int dim)
{
    using detail::DDRay;
    std::vector<VecZ> lin;
    for (int i = 0; i < dim; ++i) {
        VecZ e = VecZ::Zero(dim);
        e[i] = 1;
        lin.push_back(e);
    }
    std::vector<DDRay> rays;
    std::size_t processed = 0;

    for (const VecZ& h : inequalities) {
        // Case 1: the inequality cuts the lineality space.
        std::size_t cut = lin.size();
        for (std::size_t i = 0; i < lin.size(); ++i)
            if (dot(h, lin[i]) != 0) { cut = i; break; }
        if (cut < lin.size()) {
            VecZ l = lin[cut];
            Int hl = dot(h, l);
            if (hl < 0) { l = -l; hl = -hl; }
            std::vector<VecZ> newlin;
            for (std::size_t i = 0; i < lin.size(); ++i) {
                if (i == cut) continue;
                // h.(hl * l2 - (h.l2) * l) = 0
                newlin.push_back(make_primitive(hl * lin[i] - dot(h, lin[i]) * l));
            }
            lin.swap(newlin);
            for (DDRay& r : rays) {
                const Int hv = dot(h, r.v);
                if (hv != 0) r.v = make_primitive(hl * r.v - hv * l);
                r.tight.push_back(true);
            }
            DDRay nr;
            nr.v = l;
            nr.tight.assign(processed, true);
            nr.tight.push_back(false);
            rays.push_back(std::move(nr));
            ++processed;
            continue;
        }

        // Case 2: lineality already inside the hyperplane; split the rays.
        std::vector<std::size_t> pos, neg;
        std::vector<Int> val(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(h, rays[i].v);
            if (val[i] > 0) pos.push_back(i);
            else if (val[i] < 0) neg.push_back(i);
        }
        std::vector<DDRay> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (val[i] < 0) continue;
            DDRay r = rays[i];
            r.tight.push_back(val[i] == 0);
            next.push_back(std::move(r));
        }
        for (std::size_t p : pos) {
            for (std::size_t n : neg) {
                if (!detail::adjacent(rays, p, n)) continue;
                DDRay w;
                w.v = make_primitive(val[p] * rays[n].v - val[n] * rays[p].v);
                w.tight.resize(processed + 1);
                for (std::size_t i = 0; i < processed; ++i)
                    w.tight[i] = rays[p].tight[i] && rays[n].tight[i];
                w.tight[processed] = true;
                next.push_back(std::move(w));
            }
        }
        rays.swap(next);
        ++processed;
    }

    DoubleDescription out;
    for (DDRay& r : rays) out.rays.push_back(std::move(r.v));
    out.lineality = std::move(lin);
    std::sort(out.rays.begin(), out.rays.end(), lex_less);
    out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
    return out;
}

} // namespace mirror33

#endif
