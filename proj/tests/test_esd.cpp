#include <catch2/catch_amalgamated.hpp>

#include "mirror33/simplex.hpp"
#include "mirror33/triangulation.hpp"

using namespace mirror33;

namespace {

/** conv(0, k e_1, ..., k e_d) in Z^d; its k-fold barycentric points are integral. */
OrderedSimplex scaled_standard_simplex(int d, int k)
{
    std::vector<VecZ> verts{VecZ::Zero(d)};
    for (int i = 0; i < d; ++i) {
        VecZ v = VecZ::Zero(d);
        v[i] = k;
        verts.push_back(v);
    }
    return make_simplex(Space::plain(d), verts);
}

std::vector<std::vector<Int>> key_of(const std::vector<VecZ>& verts)
{
    std::vector<std::vector<Int>> key;
    for (const VecZ& v : verts) key.emplace_back(v.data(), v.data() + v.size());
    std::sort(key.begin(), key.end());
    return key;
}

} // namespace

TEST_CASE("the worked 3 x 5 color scheme gives conv(p013, p113, p114, p124, p134)")
{
    const ColorScheme cs = color_scheme_from_cuts(3, 4, {1, 3, 2, 2});
    REQUIRE(is_valid_color_scheme(cs));
    REQUIRE(cs.m == std::vector<std::vector<int>>{{0, 1, 1, 1, 1}, {1, 1, 1, 2, 3}, {3, 3, 4, 4, 4}});
    REQUIRE(cs.column(0) == std::vector<int>{0, 1, 3});
    REQUIRE(cs.column(4) == std::vector<int>{1, 3, 4});

    const OrderedSimplex s = scaled_standard_simplex(4, 3);
    const auto expected_cols = std::vector<std::vector<int>>{
        {0, 1, 3}, {1, 1, 3}, {1, 1, 4}, {1, 2, 4}, {1, 3, 4}};
    std::vector<VecZ> expect;
    for (const auto& chi : expected_cols) expect.push_back(edgewise_point(s, chi, 3));

    bool found = false;
    for (const auto& verts : edgewise_maximal_simplices(s, 3))
        if (verts == expect) found = true;
    REQUIRE(found);
}

TEST_CASE("Esd_1 returns the simplex itself")
{
    const OrderedSimplex s = scaled_standard_simplex(3, 1);
    const auto simplices = edgewise_maximal_simplices(s, 1);
    REQUIRE(simplices.size() == 1);
    REQUIRE(simplices[0] == s.verts);
}

TEST_CASE("Esd_k counts k^d maximal simplices and preserves normalized volume")
{
    for (int d = 2; d <= 4; ++d) {
        for (int k = 2; k <= 3; ++k) {
            const OrderedSimplex s = scaled_standard_simplex(d, k);
            const auto simplices = edgewise_maximal_simplices(s, k);
            REQUIRE(static_cast<int>(simplices.size()) == static_cast<int>(std::pow(k, d)));
            Int total = 0;
            for (const auto& verts : simplices) total += normalized_volume_of(verts);
            REQUIRE(total == normalized_volume(OrderedSimplex{s.space, s.verts}));
        }
    }
}

TEST_CASE("Esd_3 of a simplex restricted to a facet is Esd_3 of the facet (d <= 4)")
{
    for (int d = 2; d <= 4; ++d) {
        const OrderedSimplex s = scaled_standard_simplex(d, 3);
        for (std::size_t drop = 0; drop < s.verts.size(); ++drop) {
            std::vector<VecZ> fverts;
            for (std::size_t i = 0; i < s.verts.size(); ++i)
                if (i != drop) fverts.push_back(s.verts[i]);
            const OrderedSimplex facet{s.space, fverts};

            // the facet's own subdivision
            std::set<std::vector<std::vector<Int>>> expect;
            for (const auto& verts : edgewise_maximal_simplices(facet, 3))
                expect.insert(key_of(verts));

            // restriction: subdivision cells of s with d vertices on the facet
            const Polytope fpoly = Polytope::from_lattice_points(s.space, fverts);
            std::set<std::vector<std::vector<Int>>> got;
            for (const auto& verts : edgewise_maximal_simplices(s, 3)) {
                std::vector<VecZ> on;
                for (const VecZ& v : verts)
                    if (fpoly.contains(v)) on.push_back(v);
                if (on.size() == static_cast<std::size_t>(d)) got.insert(key_of(on));
            }
            REQUIRE(got == expect);
        }
    }
}

TEST_CASE("Esd output is a triangulation (exhaustive pairwise check, d = 3)")
{
    const OrderedSimplex s = scaled_standard_simplex(3, 3);
    const Triangulation t = edgewise_subdivision(s, 3);
    REQUIRE(pairwise_intersections_are_common_faces(t));
    const Polytope p = Polytope::from_lattice_points(s.space, s.verts);
    const auto rep = verify_triangulation(t, p);
    REQUIRE(rep.triangulation_ok());
    REQUIRE(rep.maximal); // every lattice point of the scaled simplex is used
}

TEST_CASE("k = 0 is rejected")
{
    const OrderedSimplex s = scaled_standard_simplex(2, 2);
    REQUIRE_THROWS_AS(edgewise_maximal_simplices(s, 0), std::invalid_argument);
}

TEST_CASE("prism subdivision of a square is two triangles")
{
    VecZ a(2), b(2);
    a << 0, 0;
    b << 1, 0;
    const OrderedSimplex seg = make_simplex(Space::plain(2), {a, b});
    OrderedSimplex lifted = seg;
    for (VecZ& v : lifted.verts) v[1] += 1;
    const Triangulation t = prism_subdivision(seg, lifted);
    REQUIRE(t.maximal.size() == 2);
    REQUIRE(pairwise_intersections_are_common_faces(t));
}

TEST_CASE("prisms over Esd_3 cells of a tetrahedron give four 4-simplices each")
{
    // delta inside P(U_1 cap C_{1,4}) = conv(u_222, u_333, u_555, u_666), shifted by w
    std::vector<VecZ> gverts;
    for (int k : {2, 3, 5, 6}) gverts.push_back(n_vec(u_vector(k)).reduced());
    const OrderedSimplex g = make_simplex(Space::N(), gverts);
    VecZ w6(6);
    w6 << 1, 1, 1, -1, -1, -1;
    const VecZ w = n_vec(w6).reduced();
    for (const auto& delta : edgewise_maximal_simplices(g, 3)) {
        OrderedSimplex d1{Space::N(), delta};
        OrderedSimplex d2 = d1;
        for (VecZ& v : d2.verts) v += w;
        const auto cells = prism_maximal_simplices(d1, d2);
        REQUIRE(cells.size() == 4);
        const Triangulation t = prism_subdivision(d1, d2);
        REQUIRE(pairwise_intersections_are_common_faces(t));
    }
}

TEST_CASE("zero-height prisms are rejected")
{
    VecZ a(2), b(2);
    a << 0, 0;
    b << 1, 0;
    const OrderedSimplex seg = make_simplex(Space::plain(2), {a, b});
    REQUIRE_THROWS_AS(prism_subdivision(seg, seg), std::invalid_argument);
}
