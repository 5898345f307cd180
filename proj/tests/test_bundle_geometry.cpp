#include "pqk/bundle.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace pqk;
using K = Rational;

namespace {

// rank over Q by Gaussian elimination; eigen-count oracle for involutions
std::size_t rational_rank(Matrix<K> m)
{
    const std::size_t n = m.dim();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && m(piv, col) == K(0)) ++piv;
        if (piv == n) continue;
        for (std::size_t j = 0; j < n; ++j) std::swap(m(rank, j), m(piv, j));
        const K inv = K(1) / m(rank, col);
        for (std::size_t j = 0; j < n; ++j) m(rank, j) = inv * m(rank, j);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank || m(r, col) == K(0)) continue;
            const K f = m(r, col);
            for (std::size_t j = 0; j < n; ++j) m(r, j) = m(r, j) - f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("build_bundle_model basics")
{
    SECTION("twistor n=2 has total dimension 10")
    {
        const auto m = build_bundle_model<K>(BundleKind::twistor, 2, K(16), K(1));
        REQUIRE(m.total_dim == 10);
    }
    SECTION("I1 maps the J1 direction to minus the J2 direction")
    {
        const auto m = build_bundle_model<K>(BundleKind::twistor, 2, K(16), K(1));
        REQUIRE(m.structure_on_vertical(0, 0) == K(0));
        REQUIRE(m.structure_on_vertical(1, 0) == K(-1));
        REQUIRE(m.structure_on_vertical(0, 1) == K(1));
        REQUIRE(m.structure_on_vertical(1, 1) == K(0));
    }
    SECTION("P1 squares to Id with a 5/5 eigenvalue split")
    {
        const auto m = build_bundle_model<K>(BundleKind::reflector, 2, K(16), K(1));
        const auto& P = m.structures[0];
        REQUIRE(P * P == Matrix<K>::identity(10));
        // dim ker(P - Id) = 10 - rank(P - Id)
        const std::size_t plus = 10 - rational_rank(P - Matrix<K>::identity(10));
        const std::size_t minus = 10 - rational_rank(P + Matrix<K>::identity(10));
        REQUIRE(plus == 5);
        REQUIRE(minus == 5);
    }
    SECTION("preconditions")
    {
        REQUIRE_THROWS_AS(build_bundle_model<K>(BundleKind::twistor, 2, K(16), K(0)),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(build_bundle_model<K>(BundleKind::twistor, 1, K(16), K(1)),
                          std::invalid_argument);
    }
    SECTION("frame-transpose mode cannot build the reflector model")
    {
        REQUIRE_THROWS_AS(build_bundle_model<K>(BundleKind::reflector, 2, K(16), K(1),
                                                AdjointMode::frame_transpose),
                          VerificationError);
        REQUIRE_NOTHROW(build_bundle_model<K>(BundleKind::twistor, 2, K(16), K(1),
                                              AdjointMode::frame_transpose));
    }
}

TEST_CASE("curvature block assembly")
{
    SECTION("Sc = 0: mixed blocks vanish and the horizontal block reduces to the base R")
    {
        for (auto kind : {BundleKind::twistor, BundleKind::reflector}) {
            const auto m = build_bundle_model<K>(kind, 2, K(0), K(1));
            for (std::size_t a = 0; a < 2; ++a)
                for (std::size_t x = 2; x < 10; ++x)
                    for (std::size_t b = 0; b < 2; ++b)
                        for (std::size_t y = 2; y < 10; ++y)
                            REQUIRE(m.curvature(a, x, b, y) == K(0));
            for (std::size_t x = 0; x < 8; ++x)
                for (std::size_t y = 0; y < 8; ++y)
                    for (std::size_t z = 0; z < 8; ++z)
                        for (std::size_t w = 0; w < 8; ++w)
                            REQUIRE(m.curvature(2 + x, 2 + y, 2 + z, 2 + w) ==
                                    m.base.R(x, y, z, w));
        }
    }
    SECTION("mixed block coefficients at n=2, t=1, Sc=16")
    {
        const auto tw = block_coefficients(BundleKind::twistor, 2, K(16), K(1));
        REQUIRE(tw.mixed_Js == K(1) / K(8));
        const auto rf = block_coefficients(BundleKind::reflector, 2, K(16), K(1));
        REQUIRE(rf.mixed_Js == K(-3) / K(8));
    }
    SECTION("assembled tensor passes the symmetry validator (pair symmetry checked, not imposed)")
    {
        const auto m = build_bundle_model<K>(BundleKind::reflector, 3, K(8), K(2));
        REQUIRE(validate_curvature_symmetries(m.curvature).empty());
    }
}

TEST_CASE("bundle Ricci against the closed forms")
{
    SECTION("twistor n=2, t=1: Einstein at Sc=16, not at Sc=8")
    {
        const auto m16 = build_bundle_model<K>(BundleKind::twistor, 2, K(16), K(1));
        const auto c16 = bundle_ricci(m16);
        REQUIRE(c16.first == K(3) / K(2));
        REQUIRE(c16.second == K(3) / K(2));

        const auto m8 = build_bundle_model<K>(BundleKind::twistor, 2, K(8), K(1));
        const auto c8 = bundle_ricci(m8);
        REQUIRE(c8.first == K(3) / K(4));
        REQUIRE(c8.second == K(7) / K(8));
    }
    SECTION("reflector n=2, t=1, Sc=-16 is Einstein")
    {
        const auto m = build_bundle_model<K>(BundleKind::reflector, 2, K(-16), K(1));
        const auto c = bundle_ricci(m);
        REQUIRE(c.first == K(-3) / K(2));
        REQUIRE(c.second == K(-3) / K(2));
    }
    SECTION("closed forms hold over a (n, t, Sc) grid including negative t")
    {
        const std::array<K, 3> ts = {K(1) / K(2), K(2), K(-1)};
        const std::array<K, 4> scs = {K(-8), K(0), K(16) / K(3), K(8)};
        for (auto kind : {BundleKind::twistor, BundleKind::reflector})
            for (const auto& t : ts) {
                for (const auto& sc : scs) {
                    const auto m = build_bundle_model<K>(kind, 2, sc, t);
                    REQUIRE_NOTHROW(bundle_ricci(m));
                }
            }
    }
}

TEST_CASE("bundle star-Ricci against the closed forms")
{
    SECTION("twistor i=1 at the shared root Sc=16: (3/2, 3/2)")
    {
        const auto m = build_bundle_model<K>(BundleKind::twistor, 2, K(16), K(1));
        const auto c = bundle_star_ricci(m, 1);
        REQUIRE(c.first == K(3) / K(2));
        REQUIRE(c.second == K(3) / K(2));
    }
    SECTION("twistor i=1 at the second root Sc=-8: coefficients equal (-3/4)")
    {
        const auto m = build_bundle_model<K>(BundleKind::twistor, 2, K(-8), K(1));
        const auto c = bundle_star_ricci(m, 1);
        REQUIRE(c.first == K(-3) / K(4));
        REQUIRE(c.second == K(-3) / K(4));
    }
    SECTION("Sc=0, i=2: vertical coefficient 1/(nt), horizontal 0")
    {
        for (auto kind : {BundleKind::twistor, BundleKind::reflector}) {
            const auto m = build_bundle_model<K>(kind, 2, K(0), K(2));
            const auto c = bundle_star_ricci(m, 2);
            REQUIRE(c.first == K(1) / K(4));
            REQUIRE(c.second == K(0));
        }
    }
}

TEST_CASE("Gray and para-Gray classes")
{
    SECTION("twistor: AH2 and AH3 hold at every sampled Sc; AH1 only at the boundary")
    {
        const std::array<K, 5> scs = {K(-8), K(0), K(16) / K(3), K(16), K(37)};
        for (const auto& sc : scs) {
            const auto m = build_bundle_model<K>(BundleKind::twistor, 2, sc, K(1));
            for (int i : {1, 2}) {
                const auto a2 = gray_class_check(m, i, GrayClass::AH2);
                const auto a3 = gray_class_check(m, i, GrayClass::AH3);
                REQUIRE(a2.holds);
                REQUIRE(a3.holds);
                const auto a1 = gray_class_check(m, i, GrayClass::AH1);
                const bool expect = sc == K(0) || (i == 1 && sc == K(16));
                REQUIRE(a1.holds == expect);
                if (!a1.holds) REQUIRE(a1.worst_violation != K(0));
            }
        }
    }
    SECTION("reflector: APH1 for P2 fails at Sc=-16 (only Sc=0 admissible)")
    {
        const auto m = build_bundle_model<K>(BundleKind::reflector, 2, K(-16), K(1));
        REQUIRE(gray_class_check(m, 1, GrayClass::APH1).holds);
        REQUIRE_FALSE(gray_class_check(m, 2, GrayClass::APH1).holds);
    }
    SECTION("class family must match the bundle kind")
    {
        const auto m = build_bundle_model<K>(BundleKind::twistor, 2, K(0), K(1));
        REQUIRE_THROWS_AS(gray_class_check(m, 1, GrayClass::APH1), std::invalid_argument);
    }
    SECTION("AH2 membership implies AH3 membership over the sample grid")
    {
        for (const auto& sc : {K(0), K(8), K(16)}) {
            const auto m = build_bundle_model<K>(BundleKind::twistor, 2, sc, K(1));
            for (int i : {1, 2})
                if (gray_class_check(m, i, GrayClass::AH2).holds)
                    REQUIRE(gray_class_check(m, i, GrayClass::AH3).holds);
        }
    }
}

TEST_CASE("Einstein critical scalar curvatures")
{
    REQUIRE(einstein_critical_sc<K>(BundleKind::twistor, 2, K(1)) ==
            std::array<K, 2>{K(16), K(16) / K(3)});
    REQUIRE(einstein_critical_sc<K>(BundleKind::reflector, 2, K(1)) ==
            std::array<K, 2>{K(-16), K(-16) / K(3)});
    REQUIRE(einstein_critical_sc<K>(BundleKind::twistor, 3, K(2)) ==
            std::array<K, 2>{K(10), K(5) / K(2)});
}

TEST_CASE("star-Einstein critical scalar curvatures")
{
    SECTION("i=1 rational roots")
    {
        const auto tw = star_einstein_critical_sc<K>(BundleKind::twistor, 1, 2, K(1));
        REQUIRE(tw[0].a == K(16));
        REQUIRE(tw[0].b == K(0));
        REQUIRE(tw[1].a == K(-8));
        const auto rf = star_einstein_critical_sc<K>(BundleKind::reflector, 1, 2, K(1));
        REQUIRE(rf[0].a == K(-16));
        REQUIRE(rf[1].a == K(8));
    }
    SECTION("i=2 roots in Q(sqrt 21): 8(5 -+ sqrt 21)")
    {
        const auto r = star_einstein_critical_sc<K>(BundleKind::twistor, 2, 2, K(1));
        REQUIRE(r[0] == QRational(K(40), K(-8), 21));
        REQUIRE(r[1] == QRational(K(40), K(8), 21));
        // the roots satisfy s^2 - 5s + 1 = 0 in s = Sc/16
        for (const auto& root : r) {
            const QRational s = root / QRational(K(16));
            REQUIRE(s * s - QRational(K(5)) * s + QRational(K(1)) == QRational(K(0)));
        }
    }
    SECTION("i=2 reflector roots carry the mirrored middle coefficient")
    {
        const auto r = star_einstein_critical_sc<K>(BundleKind::reflector, 2, 2, K(1));
        REQUIRE(r[0] == QRational(K(-40), K(-8), 21));
        REQUIRE(r[1] == QRational(K(-40), K(8), 21));
    }
    SECTION("n=1 rejected")
    {
        REQUIRE_THROWS_AS(star_einstein_critical_sc<K>(BundleKind::twistor, 2, 1, K(1)),
                          std::invalid_argument);
    }
}

TEST_CASE("hermitian ricci invariance")
{
    SECTION("holds for both kinds away from the critical set")
    {
        const auto tw = build_bundle_model<K>(BundleKind::twistor, 2, K(16), K(1));
        REQUIRE(hermitian_ricci_check(tw, 1));
        const auto rf = build_bundle_model<K>(BundleKind::reflector, 2, K(7), K(1));
        REQUIRE(hermitian_ricci_check(rf, 2));
    }
    SECTION("an injected non-block perturbation breaks the invariance")
    {
        auto m = build_bundle_model<K>(BundleKind::twistor, 2, K(16), K(1));
        m.curvature(0, 2, 0, 2) = m.curvature(0, 2, 0, 2) + K(1);
        REQUIRE_FALSE(hermitian_ricci_check(m, 1));
    }
}

TEST_CASE("general-formula crosscheck is informational")
{
    SECTION("Sc = 0: mixed blocks agree (both zero)")
    {
        const auto m = build_bundle_model<K>(BundleKind::twistor, 2, K(0), K(1));
        const auto rep = general_blocks_crosscheck(m);
        REQUIRE(rep.size() == 2);
        REQUIRE(rep[1].block == "mixed");
        REQUIRE(rep[1].agrees);
    }
    SECTION("twistor vertical block differs by the factor -1")
    {
        const auto m = build_bundle_model<K>(BundleKind::twistor, 2, K(16), K(1));
        const auto rep = general_blocks_crosscheck(m);
        REQUIRE(rep[0].block == "vertical4");
        REQUIRE_FALSE(rep[0].agrees);
        REQUIRE(rep[0].factor.has_value());
        REQUIRE(*rep[0].factor == "-1");
    }
    SECTION("reflector blocks agree exactly")
    {
        const auto m = build_bundle_model<K>(BundleKind::reflector, 2, K(16), K(1));
        const auto rep = general_blocks_crosscheck(m);
        REQUIRE(rep[0].agrees);
        REQUIRE(rep[1].agrees);
    }
}

TEST_CASE("float mode runs the same pipeline with 1e-10 comparisons")
{
    const auto m = build_bundle_model<double>(BundleKind::twistor, 2, 16.0, 1.0);
    const auto c = bundle_ricci(m);
    REQUIRE(std::fabs(c.first - 1.5) < 1e-10);
    REQUIRE(std::fabs(c.second - 1.5) < 1e-10);
    REQUIRE(gray_class_check(m, 1, GrayClass::AH1).holds);
}
