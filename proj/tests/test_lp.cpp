#include <catch2/catch_amalgamated.hpp>

#include "mirror33/lp.hpp"

using namespace mirror33;

TEST_CASE("simplex solves a tiny bounded program")
{
    MatQ a(3, 2);
    a << 1, 0, 0, 1, 1, 1;
    VecQ b(3);
    b << 4, 3, 5;
    VecQ c(2);
    c << 1, 1;
    const auto res = SimplexSolver::maximize(a, b, c);
    REQUIRE(res.status == SimplexSolver::Status::Optimal);
    REQUIRE(res.objective == Rat(5));
    REQUIRE(verify_lp_optimum(a, b, c, res));
}

TEST_CASE("simplex detects unboundedness")
{
    MatQ a(1, 2);
    a << 1, -1;
    VecQ b(1);
    b << 1;
    VecQ c(2);
    c << 0, 1;
    REQUIRE(SimplexSolver::maximize(a, b, c).status == SimplexSolver::Status::Unbounded);
}

TEST_CASE("simplex detects infeasibility via phase 1")
{
    MatQ a(2, 1);
    a << 1, -1;
    VecQ b(2);
    b << -2, 1; // x <= -2 and x >= -1
    VecQ c(1);
    c << 1;
    REQUIRE(SimplexSolver::maximize(a, b, c).status == SimplexSolver::Status::Infeasible);
}

TEST_CASE("phase 1 + phase 2 with negative right-hand sides")
{
    // x + y >= 1 (as -x - y <= -1), x <= 2, y <= 2, maximize x + 2y
    MatQ a(3, 2);
    a << -1, -1, 1, 0, 0, 1;
    VecQ b(3);
    b << -1, 2, 2;
    VecQ c(2);
    c << 1, 2;
    const auto res = SimplexSolver::maximize(a, b, c);
    REQUIRE(res.status == SimplexSolver::Status::Optimal);
    REQUIRE(res.objective == Rat(6));
    REQUIRE(verify_lp_optimum(a, b, c, res));
}

TEST_CASE("equality feasibility: convex membership")
{
    // is (1,1) a conic combination of (1,0),(0,1)? yes
    MatQ a(2, 2);
    a << 1, 0, 0, 1;
    VecQ b(2);
    b << 1, 1;
    REQUIRE(SimplexSolver::feasible_eq(a, b));
    // is (-1,0) one? no
    VecQ b2(2);
    b2 << -1, 0;
    REQUIRE_FALSE(SimplexSolver::feasible_eq(a, b2));
}

TEST_CASE("exact rational pivots keep exact optima")
{
    MatQ a(2, 2);
    a << Rat(1, 3), Rat(1, 7), Rat(2, 5), Rat(1, 2);
    VecQ b(2);
    b << Rat(1), Rat(2);
    VecQ c(2);
    c << Rat(1), Rat(1);
    const auto res = SimplexSolver::maximize(a, b, c);
    REQUIRE(res.status == SimplexSolver::Status::Optimal);
    REQUIRE(verify_lp_optimum(a, b, c, res));
}
