#include <catch2/catch_amalgamated.hpp>

#include "mirror33/builtins.hpp"
#include "mirror33/cone.hpp"

using namespace mirror33;

namespace {

Cone n_cone(const std::vector<VecZ>& ambient)
{
    std::vector<VecZ> red;
    for (const VecZ& v : ambient) red.push_back(n_vec(v).reduced());
    return make_cone(Space::N(), red);
}

std::vector<VecZ> m_set(const std::vector<std::vector<int>>& vs)
{
    std::vector<VecZ> out;
    for (const auto& v : vs) {
        VecZ a(6);
        for (int i = 0; i < 6; ++i) a[i] = v[static_cast<std::size_t>(i)];
        out.push_back(make_primitive(m_vec(a).reduced()));
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

VecZ amb(const std::vector<int>& v)
{
    VecZ a(6);
    for (int i = 0; i < 6; ++i) a[i] = v[static_cast<std::size_t>(i)];
    return a;
}

} // namespace

TEST_CASE("positive orthant in Z^5 is self-dual")
{
    std::vector<VecZ> gens;
    for (int i = 0; i < 5; ++i) {
        VecZ e = VecZ::Zero(5);
        e[i] = 1;
        gens.push_back(e);
    }
    Cone c = make_cone(Space::plain(5), gens);
    Cone d = dual_cone(c);
    REQUIRE(d.rays == c.rays);
    REQUIRE(is_unimodular(c));
}

TEST_CASE("cone canonicalization removes redundant generators")
{
    VecZ a(2), b(2), mid(2);
    a << 1, 0;
    b << 0, 1;
    mid << 1, 1;
    Cone c = make_cone(Space::plain(2), {a, b, mid, 2 * a});
    REQUIRE(c.rays.size() == 2);
}

TEST_CASE("sigma_1 from the cycle construction has the printed dual")
{
    const Cone s1 = n_cone({v_triple(1, 1, 1), v_triple(1, 1, 2), v_triple(1, 1, 3),
                            v_triple(1, 1, 4), v_triple(1, 1, 5)});
    const Cone d = dual_cone(s1);
    REQUIRE(d.space == Space::M());
    const auto expect = m_set({{-1, -2, -2, -2, -2, 0},
                               {0, 1, 0, 0, 0, 0},
                               {0, 0, 1, 0, 0, 0},
                               {1, 1, 1, 2, 1, 0},
                               {1, 1, 1, 1, 2, 0}});
    REQUIRE(d.rays == expect);
    // and duality is involutive on it
    REQUIRE(dual_cone(d).rays == s1.rays);
}

TEST_CASE("sigma_2 from the cycle construction has the printed dual")
{
    const Cone s2 = n_cone({u_triple(2, 6, 6), u_triple(3, 6, 6), u_triple(4, 6, 6),
                            u_triple(5, 6, 6), u_triple(6, 6, 6)});
    const Cone d = dual_cone(s2);
    const auto expect = m_set({{-1, 1, 0, 0, 0, 0},
                               {-1, 0, 1, 0, 0, 0},
                               {0, 0, 0, 1, 0, 0},
                               {0, 0, 0, 0, 1, 0},
                               {1, -1, -1, -1, -1, 0}});
    REQUIRE(d.rays == expect);
}

TEST_CASE("U_1 has the printed dual matrix and the extra Hilbert generator y1")
{
    const Cone u1 = n_cone({u_vector(2), u_vector(3), u_vector(4), u_vector(5), u_vector(6)});
    const Cone d = dual_cone(u1);
    const auto expect = m_set({{-1, 1, 0, 0, 0, 0},
                               {-1, 0, 1, 0, 0, 0},
                               {0, 0, 0, 1, 0, 0},
                               {0, 0, 0, 0, 1, 0},
                               {0, 0, 0, 0, 0, 1}});
    REQUIRE(d.rays == expect);

    auto hb = hilbert_basis(d);
    auto expect_hb = expect;
    expect_hb.push_back(m_vec(amb({-1, 0, 0, 0, 0, 0})).reduced());
    std::sort(expect_hb.begin(), expect_hb.end(), lex_less);
    std::sort(hb.begin(), hb.end(), lex_less);
    REQUIRE(hb == expect_hb);
}

TEST_CASE("C_{3,6} dual needs no generators beyond its rays")
{
    std::vector<VecZ> gens;
    for (int k : {1, 2, 4, 5}) {
        gens.push_back(u_vector(k));
        gens.push_back(v_vector(k));
    }
    const Cone c36 = n_cone(gens);
    const Cone d = dual_cone(c36);
    REQUIRE(d.rays.size() == 6);
    const auto expect = m_set({{1, 0, -1, 0, 0, 0},
                               {0, 1, -1, 0, 0, 0},
                               {0, 0, -1, 0, 0, 0},
                               {0, 0, 0, 1, 0, -1},
                               {0, 0, 0, 0, 1, -1},
                               {0, 0, 0, 0, 0, -1}});
    REQUIRE(d.rays == expect);

    auto hb = hilbert_basis(d);
    std::sort(hb.begin(), hb.end(), lex_less);
    REQUIRE(hb == expect);
}

TEST_CASE("unimodular cone has its rays as Hilbert basis")
{
    VecZ a(2), b(2);
    a << 1, 0;
    b << 0, 1;
    const Cone c = make_cone(Space::plain(2), {a, b});
    const auto hb = hilbert_basis(c);
    REQUIRE(hb == std::vector<VecZ>{b, a}); // lex-sorted
}

TEST_CASE("hilbert_basis output generates all cone lattice points in a test box")
{
    // cone over (1,0) and (1,3): index 3, needs interior generators
    VecZ a(2), b(2);
    a << 1, 0;
    b << 1, 3;
    const Cone c = make_cone(Space::plain(2), {a, b});
    const auto hb = hilbert_basis(c);
    const Cone d = dual_cone(c);
    for (int x = 0; x <= 5; ++x) {
        for (int y = -1; y <= 5; ++y) {
            VecZ p(2);
            p << x, y;
            bool inside = true;
            for (const VecZ& w : d.rays)
                if (dot(w, p) < 0) inside = false;
            if (!inside) continue;
            // greedy decomposition must reach 0
            VecZ rem = p;
            bool progress = true;
            while (!rem.isZero() && progress) {
                progress = false;
                for (const VecZ& g : hb) {
                    const VecZ cand = rem - g;
                    bool ok = true;
                    for (const VecZ& w : d.rays)
                        if (dot(w, cand) < 0) { ok = false; break; }
                    if (ok) {
                        rem = cand;
                        progress = true;
                        break;
                    }
                }
            }
            REQUIRE(rem.isZero());
        }
    }
}

TEST_CASE("non-pointed cones are rejected by hilbert_basis")
{
    VecZ a(2), b(2);
    a << 1, 0;
    b << -1, 0;
    VecZ c2(2);
    c2 << 0, 1;
    const Cone c = make_cone(Space::plain(2), {a, b, c2});
    REQUIRE_THROWS_AS(hilbert_basis(c), std::invalid_argument);
}
