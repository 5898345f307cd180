#include "pqk/mixed3.hpp"
#include "pqk/so21.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace pqk;
using K = Rational;

namespace {

// independent series oracle: sum_{k<20} (s e)^k / k!
Matrix<double> series_exp(double s, const Matrix<Rational>& gen)
{
    Matrix<double> x(3), acc = Matrix<double>::identity(3), term = Matrix<double>::identity(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) x(i, j) = s * to_double(gen(i, j));
    for (int k = 1; k < 20; ++k) {
        term = (1.0 / k) * (term * x);
        acc = acc + term;
    }
    return acc;
}

}  // namespace

TEST_CASE("so(2,1) generators and brackets")
{
    const auto gen = so21_generators();
    SECTION("e3 first row is (0, -2, 0)")
    {
        REQUIRE(gen[2](0, 0) == K(0));
        REQUIRE(gen[2](0, 1) == K(-2));
        REQUIRE(gen[2](0, 2) == K(0));
    }
    SECTION("minus basis is the entrywise negation")
    {
        const auto minus = so21_basis(So21Basis::minus);
        REQUIRE(minus[0].matrix == K(-1) * gen[0]);
    }
    SECTION("e1 e2 - e2 e1 = 2 e3 as matrices")
    {
        REQUIRE(gen[0] * gen[1] - gen[1] * gen[0] == K(2) * gen[2]);
    }
    SECTION("bracket tables")
    {
        const auto p = so21_basis(So21Basis::plus);
        const auto m = so21_basis(So21Basis::minus);
        REQUIRE(bracket(p[1], p[2]).matrix == K(-2) * p[0].matrix);
        REQUIRE(bracket(m[1], m[2]).matrix == K(2) * m[0].matrix);
        REQUIRE(bracket(p[0], p[0]).matrix == Matrix<K>(3));
        REQUIRE(bracket(p[0], p[1]).matrix == K(2) * p[2].matrix);
        REQUIRE(bracket(p[2], p[0]).matrix == K(-2) * p[1].matrix);
        REQUIRE(bracket(m[0], m[1]).matrix == K(-2) * m[2].matrix);
        REQUIRE(bracket(m[2], m[0]).matrix == K(2) * m[1].matrix);
    }
    SECTION("Jacobi identity over all triples")
    {
        const auto p = so21_basis(So21Basis::plus);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c) {
                    const auto s = bracket(p[a], bracket(p[b], p[c])).matrix +
                                   bracket(p[b], bracket(p[c], p[a])).matrix +
                                   bracket(p[c], bracket(p[a], p[b])).matrix;
                    REQUIRE(s == Matrix<K>(3));
                }
    }
}

TEST_CASE("exp closed forms")
{
    SECTION("s = 0 gives the identity")
    {
        for (int w = 1; w <= 3; ++w) {
            const auto m = exp_generator(0.0, w);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j)
                    REQUIRE(m(i, j) == (i == j ? 1.0 : 0.0));
        }
    }
    SECTION("s = 1/2, generator 1: cosh(1), sinh(1) in rows/cols 2,3")
    {
        const auto m = exp_generator(0.5, 1);
        REQUIRE(std::fabs(m(1, 1) - 1.5430806348152437) < 1e-12);
        REQUIRE(std::fabs(m(1, 2) - 1.1752011936438014) < 1e-12);
        REQUIRE(std::fabs(m(0, 0) - 1.0) < 1e-12);
    }
    SECTION("s = pi/4, generator 3: rotation by pi/2")
    {
        const auto m = exp_generator(std::acos(-1.0) / 4.0, 3);
        REQUIRE(std::fabs(m(0, 0)) < 1e-12);
        REQUIRE(std::fabs(m(1, 0) - 1.0) < 1e-12);
        REQUIRE(std::fabs(m(0, 1) + 1.0) < 1e-12);
    }
    SECTION("closed forms match the 20-term series to 1e-10 for |s| <= 1")
    {
        const auto gen = so21_generators();
        for (int w = 1; w <= 3; ++w)
            for (double s : {-1.0, -0.5, -0.25, 0.1, 0.5, 1.0}) {
                const auto closed = exp_generator(s, w);
                const auto series = series_exp(s, gen[w - 1]);
                for (std::size_t i = 0; i < 3; ++i)
                    for (std::size_t j = 0; j < 3; ++j)
                        REQUIRE(std::fabs(closed(i, j) - series(i, j)) < 1e-10);
            }
    }
    SECTION("exp(s) exp(-s) = Id and the (2,1) form is preserved")
    {
        const double q[3] = {1.0, 1.0, -1.0};
        for (int w = 1; w <= 3; ++w)
            for (double s : {-1.0, 0.3, 1.0}) {
                const auto a = exp_generator(s, w);
                const auto b = exp_generator(-s, w);
                const auto prod = a * b;
                for (std::size_t i = 0; i < 3; ++i)
                    for (std::size_t j = 0; j < 3; ++j) {
                        REQUIRE(std::fabs(prod(i, j) - (i == j ? 1.0 : 0.0)) < 1e-10);
                        double acc = 0;
                        for (std::size_t k = 0; k < 3; ++k) acc += a(k, i) * q[k] * a(k, j);
                        REQUIRE(std::fabs(acc - (i == j ? q[i] : 0.0)) < 1e-10);
                    }
            }
    }
}

TEST_CASE("ad matrices")
{
    SECTION("displayed entries")
    {
        REQUIRE(ad_matrix(1, So21Basis::plus)(1, 2) == K(2));
        REQUIRE(ad_matrix(1, So21Basis::minus)(1, 2) == K(-2));
        REQUIRE(ad_matrix(2, So21Basis::plus)(0, 2) == K(-2));
        REQUIRE(ad_matrix(3, So21Basis::plus)(0, 1) == K(2));
    }
    SECTION("ad(e3) applied to e1 coordinates gives [e3,e1] = -2 e2")
    {
        const auto ad3 = ad_matrix(3, So21Basis::plus);
        const auto p = so21_basis(So21Basis::plus);
        const auto br = bracket(p[2], p[0]);
        std::vector<K> e1c = {K(1), K(0), K(0)};
        const auto image = ad3.apply(e1c);
        for (int i = 0; i < 3; ++i) REQUIRE(image[i] == br.coords[i]);
        REQUIRE(image[1] == K(-2));
    }
}

TEST_CASE("canonical hyperquadric structures")
{
    SECTION("sphere n=1: eps = (-1,-1,+1), sign negative")
    {
        auto st = canonical_hyperquadric<K>(1, HyperquadricKind::sphere);
        REQUIRE(st.eps == std::array<int, 3>{-1, -1, 1});
        REQUIRE(st.sign == StructureSign::negative);
        REQUIRE(check_mixed3_axioms(st).empty());
    }
    SECTION("hyperbolic n=1: eps = (+1,+1,-1), sign positive")
    {
        auto st = canonical_hyperquadric<K>(1, HyperquadricKind::hyperbolic);
        REQUIRE(st.eps == std::array<int, 3>{1, 1, -1});
        REQUIRE(st.sign == StructureSign::positive);
        REQUIRE(check_mixed3_axioms(st).empty());
    }
    SECTION("n=2 passes exactly for both kinds")
    {
        for (auto w : {HyperquadricKind::sphere, HyperquadricKind::hyperbolic}) {
            auto st = canonical_hyperquadric<K>(2, w);
            REQUIRE(st.dim == 11);
            REQUIRE(check_mixed3_axioms(st).empty());
        }
    }
    SECTION("eta_a(xi_a) = 1 by normalization")
    {
        auto st = canonical_hyperquadric<K>(1, HyperquadricKind::sphere);
        for (int a = 0; a < 3; ++a) {
            K acc(0);
            for (std::size_t i = 0; i < st.dim; ++i) acc += st.eta[a][i] * st.xi[a][i];
            REQUIRE(acc == K(1));
        }
    }
    SECTION("negating xi_3 is caught, naming the phi(xi) relation first")
    {
        auto st = canonical_hyperquadric<K>(1, HyperquadricKind::sphere);
        for (auto& v : st.xi[2]) v = K(-1) * v;
        const auto rep = check_mixed3_axioms(st);
        REQUIRE_FALSE(rep.empty());
        REQUIRE(rep.front().axiom == "phi_a(xi_b) = tau_b xi_g");
    }
    SECTION("degenerate and non-unit points are rejected")
    {
        std::vector<K> zero(8, K(0));
        REQUIRE_THROWS_AS(canonical_hyperquadric<K>(1, HyperquadricKind::sphere, zero),
                          std::invalid_argument);
        std::vector<K> two(8, K(0));
        two[4] = K(2);  // <p,p> = 4
        REQUIRE_THROWS_AS(canonical_hyperquadric<K>(1, HyperquadricKind::sphere, two),
                          std::invalid_argument);
        std::vector<K> wrong(8, K(0));
        wrong[0] = K(1);  // <p,p> = -1 but sphere requested
        REQUIRE_THROWS_AS(canonical_hyperquadric<K>(1, HyperquadricKind::sphere, wrong),
                          std::invalid_argument);
    }
    SECTION("a non-axis rational point works: p = (5/3, 0, ..., 4/3, 0...)")
    {
        std::vector<K> p(8, K(0));
        p[0] = K(5) / K(3);   // minus direction
        p[4] = K(4) / K(3);   // plus direction; <p,p> = -25/9 + 16/9 = -1
        auto st = canonical_hyperquadric<K>(1, HyperquadricKind::hyperbolic, p);
        REQUIRE(st.sign == StructureSign::positive);
        REQUIRE(check_mixed3_axioms(st).empty());
        const auto R = hyperquadric_gauss_tensor(st);
        REQUIRE(sasakian_curvature_identity_check(R, st).empty());
    }
}

TEST_CASE("Sasakian curvature identity")
{
    auto st = canonical_hyperquadric<K>(1, HyperquadricKind::sphere);
    const auto R = hyperquadric_gauss_tensor(st);

    SECTION("holds for the Gauss tensor") { REQUIRE(sasakian_curvature_identity_check(R, st).empty()); }
    SECTION("fails for the zero tensor")
    {
        Tensor4<K> z(st.dim);
        REQUIRE_FALSE(sasakian_curvature_identity_check(z, st).empty());
    }
    SECTION("fails when R is scaled by 2 (not scale-invariant)")
    {
        const Tensor4<K> r2 = K(2) * R;
        REQUIRE_FALSE(sasakian_curvature_identity_check(r2, st).empty());
    }
    SECTION("dimension mismatch throws")
    {
        Tensor4<K> z(4);
        REQUIRE_THROWS_AS(sasakian_curvature_identity_check(z, st), std::invalid_argument);
    }
}

TEST_CASE("Einstein data of the variation")
{
    SECTION("mixed3_einstein_constant")
    {
        REQUIRE(mixed3_einstein_constant<K>(1, StructureSign::negative) == K(6));
        REQUIRE(mixed3_einstein_constant<K>(1, StructureSign::positive) == K(-6));
        REQUIRE(mixed3_einstein_constant<K>(2, StructureSign::negative) == K(10));
    }
    SECTION("canonical_variation_ricci values")
    {
        for (std::size_t n : {std::size_t(1), std::size_t(2), std::size_t(3)})
            for (int eps : {1, -1}) {
                const auto r = canonical_variation_ricci<K>(n, eps, K(1));
                const K want = K(int(4 * n + 2) * eps);
                REQUIRE(r.vertical == want);
                REQUIRE(r.horizontal == want);
                REQUIRE(r.mixed == K(0));
            }
        const auto r = canonical_variation_ricci<K>(2, 1, K(2));
        REQUIRE(r.vertical == K(6));
        REQUIRE(r.horizontal == K(4));
        REQUIRE(r.mixed == K(0));
        REQUIRE_THROWS_AS(canonical_variation_ricci<K>(2, 1, K(0)), std::invalid_argument);
        REQUIRE_THROWS_AS(canonical_variation_ricci<K>(2, 1, K(-1)), std::invalid_argument);
    }
    SECTION("einstein_t_values, paper convention")
    {
        const auto r2 = einstein_t_values<K>(2, EinsteinConvention::paper);
        REQUIRE(r2.roots == std::vector<K>{K(1), K(9) / K(4)});
        const auto r3 = einstein_t_values<K>(3, EinsteinConvention::paper);
        REQUIRE(r3.roots == std::vector<K>{K(1), K(11) / K(6)});
        // both roots satisfy coefficient equality by substitution
        for (const auto& t : r2.roots) {
            const auto rr = canonical_variation_ricci<K>(2, 1, t);
            REQUIRE(rr.vertical == rr.horizontal);
        }
    }
    SECTION("einstein_t_values, metric-weighted convention")
    {
        const auto r2 = einstein_t_values<K>(2, EinsteinConvention::metric_weighted);
        REQUIRE(r2.roots == std::vector<K>{K(1)});
        REQUIRE_FALSE(r2.note.empty());
        const auto r3 = einstein_t_values<K>(3, EinsteinConvention::metric_weighted);
        REQUIRE(r3.roots == std::vector<K>{K(1), K(1) / K(3)});
        for (const auto& t : r3.roots) {
            const auto rr = canonical_variation_ricci<K>(3, 1, t);
            REQUIRE(rr.vertical == rr.horizontal * t);
        }
        const auto r1 = einstein_t_values<K>(1, EinsteinConvention::metric_weighted);
        REQUIRE(r1.roots == std::vector<K>{K(1)});
        REQUIRE_FALSE(r1.note.empty());
    }
    SECTION("submersion_base_ricci")
    {
        REQUIRE(submersion_base_ricci<K>(2, -1) == K(-16));
        REQUIRE(submersion_base_ricci<K>(1, 1) == K(12));
    }
}
