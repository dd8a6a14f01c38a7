#ifndef MIRROR33_SIMPLEX_HPP
#define MIRROR33_SIMPLEX_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "mirror33/lattice.hpp"

namespace mirror33 {

/** An affine lattice simplex with a significant vertex order. */
struct OrderedSimplex {
    Space space;
    std::vector<VecZ> verts; // ordered; affinely independent

    int dim() const { return static_cast<int>(verts.size()) - 1; }
};

inline bool affinely_independent(const std::vector<VecZ>& pts)
{
    if (pts.size() <= 1) return true;
    MatQ m(static_cast<Eigen::Index>(pts.size() - 1), pts[0].size());
    for (std::size_t i = 1; i < pts.size(); ++i)
        m.row(static_cast<Eigen::Index>(i - 1)) = to_rational(pts[i] - pts[0]).transpose();
    return rank_of(m) == static_cast<int>(pts.size()) - 1;
}

inline OrderedSimplex make_simplex(Space space, std::vector<VecZ> verts)
{
    if (!affinely_independent(verts))
        throw std::invalid_argument("simplex vertices are affinely dependent");
    return OrderedSimplex{space, std::move(verts)};
}

/** Normalized volume |det| of a full-dimensional simplex (d! times Lebesgue). */
inline Int normalized_volume(const OrderedSimplex& s)
{
    const int d = s.dim();
    if (d != s.space.dim)
        throw std::invalid_argument("normalized_volume: simplex is not full-dimensional");
    MatZ m(d, d);
    for (int i = 0; i < d; ++i)
        m.col(i) = s.verts[static_cast<std::size_t>(i + 1)] - s.verts[0];
    Int dv = numerator(det(m));
    return dv < 0 ? Int(-dv) : dv;
}

/**
 * The matrix encoding of a maximal simplex of the k-edgewise subdivision:
 * a k x (d+1) grid whose row-major reading is partitioned by the d chosen
 * dividing lines into d+1 nondecreasing blocks valued 0..d, one line per
 * gap column.
 */
struct ColorScheme {
    int k = 0;
    int d = 0;
    std::vector<std::vector<int>> m; // k rows, d+1 columns

    /** Column j as the index multiset of the corresponding subdivision vertex. */
    std::vector<int> column(int j) const
    {
        std::vector<int> out;
        for (int i = 0; i < k; ++i) out.push_back(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        return out;
    }
};

/** Builds the scheme from the chosen line rows (gap column j cut in row rows[j], 1-based). */
inline ColorScheme color_scheme_from_cuts(int k, int d, const std::vector<int>& rows)
{
    if (static_cast<int>(rows.size()) != d)
        throw std::invalid_argument("color scheme needs one dividing line per gap column");
    std::vector<bool> cut(static_cast<std::size_t>(k * (d + 1)), false);
    for (int j = 0; j < d; ++j) {
        const int r = rows[static_cast<std::size_t>(j)];
        if (r < 1 || r > k) throw std::invalid_argument("dividing line row out of range");
        cut[static_cast<std::size_t>((r - 1) * (d + 1) + j)] = true;
    }
    ColorScheme cs;
    cs.k = k;
    cs.d = d;
    cs.m.assign(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(d + 1), 0));
    int value = 0;
    for (int t = 0; t < k * (d + 1); ++t) {
        cs.m[static_cast<std::size_t>(t / (d + 1))][static_cast<std::size_t>(t % (d + 1))] = value;
        if (cut[static_cast<std::size_t>(t)]) ++value;
    }
    return cs;
}

/** Checks the block structure: one line per gap column, blocks valued 0..d. */
inline bool is_valid_color_scheme(const ColorScheme& cs)
{
    const int k = cs.k, d = cs.d;
    if (static_cast<int>(cs.m.size()) != k) return false;
    std::vector<int> seq;
    for (int i = 0; i < k; ++i) {
        if (static_cast<int>(cs.m[static_cast<std::size_t>(i)].size()) != d + 1) return false;
        for (int j = 0; j <= d; ++j) seq.push_back(cs.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    if (seq.front() != 0 || seq.back() != d) return false;
    std::vector<int> cut_cols;
    for (std::size_t t = 0; t + 1 < seq.size(); ++t) {
        const int step = seq[t + 1] - seq[t];
        if (step < 0 || step > 1) return false;
        if (step == 1) {
            const int col = static_cast<int>(t % static_cast<std::size_t>(d + 1));
            if (col == d) return false; // no gap after the last column
            cut_cols.push_back(col);
        }
    }
    if (static_cast<int>(cut_cols.size()) != d) return false;
    std::sort(cut_cols.begin(), cut_cols.end());
    for (int j = 0; j < d; ++j)
        if (cut_cols[static_cast<std::size_t>(j)] != j) return false;
    return true;
}

/** p_{chi_1...chi_k} = (p_{chi_1} + ... + p_{chi_k}) / k, which must be integral. */
inline VecZ edgewise_point(const OrderedSimplex& s, const std::vector<int>& chi, int k)
{
    VecZ sum = VecZ::Zero(s.verts[0].size());
    for (int c : chi) sum += s.verts[static_cast<std::size_t>(c)];
    VecZ out(sum.size());
    for (Eigen::Index i = 0; i < sum.size(); ++i) {
        if (sum[i] % k != 0)
            throw std::domain_error("edgewise subdivision point is not a lattice point");
        out[i] = sum[i] / k;
    }
    return out;
}

/**
 * Maximal simplices of Esd_k as ordered vertex lists, enumerated from all
 * color schemes; dividing-line positions iterate column-major so the output
 * order is reproducible.
 */
inline std::vector<std::vector<VecZ>> edgewise_maximal_simplices(const OrderedSimplex& s, int k)
{
    if (k <= 0) throw std::invalid_argument("edgewise subdivision needs k >= 1");
    const int d = s.dim();
    std::vector<std::vector<VecZ>> out;
    std::vector<int> rows(static_cast<std::size_t>(d), 1);
    for (;;) {
        const ColorScheme cs = color_scheme_from_cuts(k, d, rows);
        std::vector<VecZ> verts;
        for (int j = 0; j <= d; ++j) verts.push_back(edgewise_point(s, cs.column(j), k));
        out.push_back(std::move(verts));
        int j = 0;
        for (; j < d; ++j) {
            if (++rows[static_cast<std::size_t>(j)] <= k) break;
            rows[static_cast<std::size_t>(j)] = 1;
        }
        if (j == d) break;
    }
    return out;
}

/** All subdivision vertices of Esd_k: the size-k multisets of vertex indices. */
inline std::vector<VecZ> edgewise_points(const OrderedSimplex& s, int k)
{
    const int d = s.dim();
    std::vector<VecZ> out;
    std::vector<int> chi(static_cast<std::size_t>(k), 0);
    for (;;) {
        out.push_back(edgewise_point(s, chi, k));
        int i = k - 1;
        for (; i >= 0; --i)
            if (chi[static_cast<std::size_t>(i)] < d) break;
        if (i < 0) break;
        const int v = chi[static_cast<std::size_t>(i)] + 1;
        for (int j = i; j < k; ++j) chi[static_cast<std::size_t>(j)] = v;
    }
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/**
 * Prism subdivision of conv(delta1, delta2) where delta2 = delta1 + w:
 * the d+1 maximal simplices a_i = conv(p_0,...,p_i,q_i,...,q_d).
 */
inline std::vector<std::vector<VecZ>> prism_maximal_simplices(const OrderedSimplex& d1,
                                                              const OrderedSimplex& d2)
{
    if (d1.verts.size() != d2.verts.size() || d1.verts.empty())
        throw std::invalid_argument("prism: simplices must share a vertex count");
    const VecZ w = d2.verts[0] - d1.verts[0];
    for (std::size_t i = 0; i < d1.verts.size(); ++i)
        if (d2.verts[i] - d1.verts[i] != w)
            throw std::invalid_argument("prism: second simplex is not a parallel transport");
    // nonzero height: conv must gain a dimension
    std::vector<VecZ> all = d1.verts;
    all.insert(all.end(), d2.verts.begin(), d2.verts.end());
    MatQ m(static_cast<Eigen::Index>(all.size() - 1), all[0].size());
    for (std::size_t i = 1; i < all.size(); ++i)
        m.row(static_cast<Eigen::Index>(i - 1)) = to_rational(all[i] - all[0]).transpose();
    if (rank_of(m) != d1.dim() + 1)
        throw std::invalid_argument("prism: zero height");

    std::vector<std::vector<VecZ>> out;
    const int d = d1.dim();
    for (int i = 0; i <= d; ++i) {
        std::vector<VecZ> verts;
        for (int j = 0; j <= i; ++j) verts.push_back(d1.verts[static_cast<std::size_t>(j)]);
        for (int j = i; j <= d; ++j) verts.push_back(d2.verts[static_cast<std::size_t>(j)]);
        out.push_back(std::move(verts));
    }
    return out;
}

} // namespace mirror33

#endif
