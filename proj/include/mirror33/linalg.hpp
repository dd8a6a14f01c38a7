#ifndef MIRROR33_LINALG_HPP
#define MIRROR33_LINALG_HPP

#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "mirror33/numeric.hpp"

namespace mirror33 {

using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using MatZ = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using VecZ = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

inline VecQ to_rational(const VecZ& v)
{
    VecQ r(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

inline MatQ to_rational(const MatZ& m)
{
    MatQ r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

/** Exact fraction-free reduction to row echelon form, in place. Returns the rank. */
inline int row_echelon(MatQ& m)
{
    const Eigen::Index rows = m.rows(), cols = m.cols();
    int rank = 0;
    for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = rank; r < rows; ++r)
            if (m(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        m.row(rank).swap(m.row(pivot));
        const Rat inv = Rat(1) / m(rank, col);
        for (Eigen::Index c = col; c < cols; ++c) m(rank, c) *= inv;
        for (Eigen::Index r = 0; r < rows; ++r) {
            if (r == rank || m(r, col) == 0) continue;
            const Rat f = m(r, col);
            for (Eigen::Index c = col; c < cols; ++c) m(r, c) -= f * m(rank, c);
        }
        ++rank;
    }
    return rank;
}

inline int rank_of(MatQ m) { return row_echelon(m); }
inline int rank_of(const MatZ& m) { return rank_of(to_rational(m)); }

inline Rat det(MatQ m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square matrix");
    const Eigen::Index n = m.rows();
    Rat d = 1;
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = col; r < n; ++r)
            if (m(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) return Rat(0);
        if (pivot != col) { m.row(col).swap(m.row(pivot)); d = -d; }
        d *= m(col, col);
        const Rat inv = Rat(1) / m(col, col);
        for (Eigen::Index r = col + 1; r < n; ++r) {
            if (m(r, col) == 0) continue;
            const Rat f = m(r, col) * inv;
            for (Eigen::Index c = col; c < n; ++c) m(r, c) -= f * m(col, c);
        }
    }
    return d;
}

inline Rat det(const MatZ& m) { return det(to_rational(m)); }

/** Solves A x = b exactly. Empty result when the system is inconsistent. */
inline std::optional<VecQ> solve(const MatQ& a, const VecQ& b)
{
    const Eigen::Index rows = a.rows(), cols = a.cols();
    MatQ aug(rows, cols + 1);
    aug.block(0, 0, rows, cols) = a;
    aug.col(cols) = b;
    row_echelon(aug);
    VecQ x = VecQ::Zero(cols);
    std::vector<Eigen::Index> lead(rows, -1);
    for (Eigen::Index r = 0; r < rows; ++r) {
        Eigen::Index c = 0;
        while (c < cols + 1 && aug(r, c) == 0) ++c;
        if (c == cols) return std::nullopt; // 0 = nonzero
        if (c == cols + 1) continue;        // zero row
        lead[r] = c;
        x[c] = aug(r, cols);
    }
    // Leading entries determine x; free columns stay zero, so verify.
    for (Eigen::Index r = 0; r < rows; ++r) {
        if (lead[r] < 0) continue;
        Rat acc = 0;
        for (Eigen::Index c = 0; c < cols; ++c) acc += aug(r, c) * x[c];
        if (acc != aug(r, cols)) return std::nullopt;
    }
    // Verify against the original system (free variables may interact).
    for (Eigen::Index r = 0; r < rows; ++r) {
        Rat acc = 0;
        for (Eigen::Index c = 0; c < cols; ++c) acc += a(r, c) * x[c];
        if (acc != b[r]) return std::nullopt;
    }
    return x;
}

/** Basis of the right kernel of A, as columns. */
inline std::vector<VecQ> kernel(MatQ a)
{
    const Eigen::Index rows = a.rows(), cols = a.cols();
    row_echelon(a);
    std::vector<Eigen::Index> lead_col;
    std::vector<bool> is_lead(cols, false);
    for (Eigen::Index r = 0; r < rows; ++r) {
        Eigen::Index c = 0;
        while (c < cols && a(r, c) == 0) ++c;
        if (c < cols) { lead_col.push_back(c); is_lead[c] = true; }
    }
    std::vector<VecQ> basis;
    for (Eigen::Index free = 0; free < cols; ++free) {
        if (is_lead[free]) continue;
        VecQ v = VecQ::Zero(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < lead_col.size(); ++r)
            v[lead_col[r]] = -a(static_cast<Eigen::Index>(r), free);
        basis.push_back(v);
    }
    return basis;
}

/** Divides by the gcd of the entries so the vector becomes primitive; zero stays zero. */
inline VecZ make_primitive(VecZ v)
{
    Int g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v[i]);
    if (g > 1)
        for (Eigen::Index i = 0; i < v.size(); ++i) v[i] /= g;
    return v;
}

/** Clears denominators and divides by content: the primitive integer direction of v. */
inline VecZ primitive_direction(const VecQ& v)
{
    Int lcm = 1;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const Int d = denominator(v[i]);
        lcm = lcm / gcd(lcm, d) * d;
    }
    VecZ w(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
        w[i] = numerator(v[i]) * (lcm / denominator(v[i]));
    return make_primitive(w);
}

inline Int dot(const VecZ& a, const VecZ& b)
{
    Int s = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const VecQ& a, const VecQ& b)
{
    Rat s = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool lex_less(const VecZ& a, const VecZ& b)
{
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

} // namespace mirror33

#endif
