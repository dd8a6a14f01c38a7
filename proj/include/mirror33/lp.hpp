#ifndef MIRROR33_LP_HPP
#define MIRROR33_LP_HPP

#include <stdexcept>
#include <vector>

#include "mirror33/linalg.hpp"

namespace mirror33 {

/**
 * Exact rational simplex on the condensed dictionary, for problems of the form
 *
 *     maximize c.x   subject to  A x <= b,  x >= 0.
 *
 * Pivoting uses Bland's rule (least index), so termination is guaranteed.
 * Optimal solves also report the dual vector, which certifies optimality:
 * y >= 0, A^T y >= c and b.y = c.x.
 */
class SimplexSolver {
public:
    enum class Status { Optimal, Unbounded, Infeasible };

    struct Result {
        Status status = Status::Infeasible;
        Rat objective;
        VecQ x;     // primal solution (Optimal only)
        VecQ dual;  // one multiplier per row (Optimal only)
        long pivots = 0;
    };

    static Result maximize(const MatQ& a, const VecQ& b, const VecQ& c)
    {
        SimplexSolver s(a, b, c);
        return s.run();
    }

    /** Feasibility of { x >= 0 : A x = b }, decided by a phase-1 solve. */
    static bool feasible_eq(const MatQ& a, const VecQ& b)
    {
        const Eigen::Index m = a.rows();
        MatQ a2(2 * m, a.cols());
        VecQ b2(2 * m);
        a2.topRows(m) = a;
        a2.bottomRows(m) = -a;
        b2.head(m) = b;
        b2.tail(m) = -b;
        const VecQ c = VecQ::Zero(a.cols());
        return maximize(a2, b2, c).status == Status::Optimal;
    }

private:
    Eigen::Index m_, n_, rows0_;
    MatQ t_;                 // m x n dictionary body
    VecQ rhs_;               // m
    VecQ obj_;               // n objective coefficients on nonbasic columns
    Rat obj0_;
    std::vector<int> basic_, nonbasic_; // variable ids; structural < n_, slack n_ + i
    long pivots_ = 0;

    SimplexSolver(const MatQ& a, const VecQ& b, const VecQ& c)
        : m_(a.rows()), n_(a.cols()), rows0_(a.rows()), t_(a), rhs_(b), obj_(c), obj0_(0)
    {
        basic_.resize(m_);
        nonbasic_.resize(n_);
        for (Eigen::Index i = 0; i < m_; ++i) basic_[i] = static_cast<int>(n_ + i);
        for (Eigen::Index j = 0; j < n_; ++j) nonbasic_[j] = static_cast<int>(j);
    }

    void drop_row(Eigen::Index r)
    {
        MatQ t2(m_ - 1, t_.cols());
        VecQ rhs2(m_ - 1);
        Eigen::Index k = 0;
        for (Eigen::Index i = 0; i < m_; ++i) {
            if (i == r) continue;
            t2.row(k) = t_.row(i);
            rhs2[k] = rhs_[i];
            ++k;
        }
        t_.swap(t2);
        rhs_.swap(rhs2);
        basic_.erase(basic_.begin() + r);
        --m_;
    }

    void pivot(Eigen::Index r, Eigen::Index c)
    {
        ++pivots_;
        const Rat piv = t_(r, c);
        const Rat inv = Rat(1) / piv;
        t_.row(r) *= inv;
        t_(r, c) = inv;
        rhs_[r] *= inv;
        for (Eigen::Index i = 0; i < m_; ++i) {
            if (i == r || t_(i, c) == 0) continue;
            const Rat f = t_(i, c);
            t_(i, c) = 0;
            for (Eigen::Index j = 0; j < t_.cols(); ++j)
                if (t_(r, j) != 0 && j != c) t_(i, j) -= f * t_(r, j);
            t_(i, c) = -f * t_(r, c);
            rhs_[i] -= f * rhs_[r];
        }
        const Rat g = obj_[c];
        if (g != 0) {
            obj_[c] = 0;
            for (Eigen::Index j = 0; j < t_.cols(); ++j)
                if (t_(r, j) != 0 && j != c) obj_[j] -= g * t_(r, j);
            obj_[c] = -g * t_(r, c);
            obj0_ += g * rhs_[r];
        }
        std::swap(basic_[r], nonbasic_[c]);
    }

    /** Bland's rule: entering column with positive reduced cost and least variable id. */
    Eigen::Index choose_entering() const
    {
        Eigen::Index best = -1;
        for (Eigen::Index j = 0; j < t_.cols(); ++j)
            if (obj_[j] > 0 && (best < 0 || nonbasic_[j] < nonbasic_[best])) best = j;
        return best;
    }

    Eigen::Index choose_leaving(Eigen::Index c) const
    {
        Eigen::Index best = -1;
        Rat best_ratio;
        for (Eigen::Index i = 0; i < m_; ++i) {
            if (t_(i, c) <= 0) continue;
            const Rat ratio = rhs_[i] / t_(i, c);
            if (best < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basic_[i] < basic_[best])) {
                best = i;
                best_ratio = ratio;
            }
        }
        return best;
    }

    bool iterate()
    {
        for (;;) {
            const Eigen::Index c = choose_entering();
            if (c < 0) return true; // optimal
            const Eigen::Index r = choose_leaving(c);
            if (r < 0) return false; // unbounded
            pivot(r, c);
        }
    }

    Result run()
    {
        if (!phase1()) {
            Result res;
            res.status = Status::Infeasible;
            res.pivots = pivots_;
            return res;
        }
        Result res;
        if (!iterate()) {
            res.status = Status::Unbounded;
            res.pivots = pivots_;
            return res;
        }
        res.status = Status::Optimal;
        res.objective = obj0_;
        res.x = VecQ::Zero(n_);
        for (Eigen::Index i = 0; i < m_; ++i)
            if (basic_[i] < n_) res.x[basic_[i]] = rhs_[i];
        res.dual = VecQ::Zero(rows0_);
        for (Eigen::Index j = 0; j < t_.cols(); ++j)
            if (nonbasic_[j] >= n_) res.dual[nonbasic_[j] - n_] = -obj_[j];
        res.pivots = pivots_;
        return res;
    }

    /** Auxiliary-variable phase 1; returns false when the program is infeasible. */
    bool phase1()
    {
        Eigen::Index worst = 0;
        for (Eigen::Index i = 1; i < m_; ++i)
            if (rhs_[i] < rhs_[worst]) worst = i;
        if (rhs_[worst] >= 0) return true;

        const int aux = static_cast<int>(n_ + m_);
        MatQ t2(m_, n_ + 1);
        t2.leftCols(n_) = t_;
        t2.col(n_).setConstant(Rat(-1));
        t_.swap(t2);
        nonbasic_.push_back(aux);
        const VecQ saved_obj = obj_;
        obj_ = VecQ::Zero(n_ + 1);
        obj_[n_] = -1; // maximize -aux
        obj0_ = 0;
        pivot(worst, n_);

        if (!iterate())
            throw std::logic_error("phase 1 cannot be unbounded");
        const bool feasible = (obj0_ == 0);
        if (feasible) {
            // Drive the auxiliary variable out of the basis if it lingers there.
            for (Eigen::Index i = 0; i < m_; ++i) {
                if (basic_[i] != aux) continue;
                if (rhs_[i] != 0) throw std::logic_error("zero objective with nonzero aux");
                bool pivoted = false;
                for (Eigen::Index j = 0; j < t_.cols(); ++j)
                    if (t_(i, j) != 0 && nonbasic_[j] != aux) { pivot(i, j); pivoted = true; break; }
                if (!pivoted) drop_row(i); // redundant constraint
                break;
            }
            drop_aux_column(aux);
            restore_objective(saved_obj);
        }
        return feasible;
    }

    void drop_aux_column(int aux)
    {
        Eigen::Index col = -1;
        for (Eigen::Index j = 0; j < t_.cols(); ++j)
            if (nonbasic_[j] == aux) { col = j; break; }
        if (col < 0) throw std::logic_error("aux variable still basic");
        MatQ t2(m_, t_.cols() - 1);
        Eigen::Index k = 0;
        for (Eigen::Index j = 0; j < t_.cols(); ++j)
            if (j != col) t2.col(k++) = t_.col(j);
        t_.swap(t2);
        nonbasic_.erase(nonbasic_.begin() + col);
    }

    /** Re-expresses c.x in the current nonbasic variables. */
    void restore_objective(const VecQ& c)
    {
        obj_ = VecQ::Zero(t_.cols());
        obj0_ = 0;
        for (Eigen::Index j = 0; j < t_.cols(); ++j)
            if (nonbasic_[j] < n_) obj_[j] += c[nonbasic_[j]];
        for (Eigen::Index i = 0; i < m_; ++i) {
            if (basic_[i] >= n_ || c[basic_[i]] == 0) continue;
            const Rat f = c[basic_[i]];
            obj0_ += f * rhs_[i];
            for (Eigen::Index j = 0; j < t_.cols(); ++j)
                if (t_(i, j) != 0) obj_[j] -= f * t_(i, j);
        }
    }
};

/** Independent check of an optimal primal/dual pair returned by the solver. */
inline bool verify_lp_optimum(const MatQ& a, const VecQ& b, const VecQ& c,
                              const SimplexSolver::Result& res)
{
    if (res.status != SimplexSolver::Status::Optimal) return false;
    for (Eigen::Index j = 0; j < res.x.size(); ++j)
        if (res.x[j] < 0) return false;
    const VecQ slack = b - a * res.x;
    for (Eigen::Index i = 0; i < slack.size(); ++i)
        if (slack[i] < 0) return false;
    for (Eigen::Index i = 0; i < res.dual.size(); ++i)
        if (res.dual[i] < 0) return false;
    const VecQ reduced = a.transpose() * res.dual - c;
    for (Eigen::Index j = 0; j < reduced.size(); ++j)
        if (reduced[j] < 0) return false;
    const Rat primal = c.dot(res.x);
    const Rat dual = b.dot(res.dual);
    return primal == res.objective && dual == res.objective;
}

} // namespace mirror33

#endif
