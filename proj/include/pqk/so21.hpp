#pragma once

// so(2,1) structure data: the two bases B+ = {e1,e2,e3}, B- = {-e1,-e2,-e3},
// brackets, adjoint matrices, and closed-form one-parameter subgroups.
//
//   e1 = [0 0 0; 0 0 2; 0 2 0]   e2 = [0 0 2; 0 0 0; 2 0 0]
//   e3 = [0 -2 0; 2 0 0; 0 0 0]
//   [e1,e2] = 2e3   [e2,e3] = -2e1   [e3,e1] = -2e2
//
// All generators are skew w.r.t. the quadratic form x^2 + y^2 - z^2.

#include "pqk/error.hpp"
#include "pqk/matrix.hpp"
#include "pqk/scalar.hpp"

#include <array>
#include <cmath>
#include <cstddef>

namespace pqk {

enum class So21Basis { plus, minus };

struct So21Element {
    std::array<Rational, 3> coords{};  // w.r.t. B+ = {e1, e2, e3}
    Matrix<Rational> matrix;
};

inline std::array<Matrix<Rational>, 3> so21_generators()
{
    std::array<Matrix<Rational>, 3> e{Matrix<Rational>(3), Matrix<Rational>(3),
                                      Matrix<Rational>(3)};
    e[0](1, 2) = 2;
    e[0](2, 1) = 2;
    e[1](0, 2) = 2;
    e[1](2, 0) = 2;
    e[2](0, 1) = -2;
    e[2](1, 0) = 2;
    return e;
}

inline std::array<So21Element, 3> so21_basis(So21Basis which)
{
    const auto gen = so21_generators();
    const Rational s = which == So21Basis::plus ? 1 : -1;
    std::array<So21Element, 3> out;
    for (int i = 0; i < 3; ++i) {
        out[i].coords[i] = s;
        out[i].matrix = s * gen[i];
    }
    return out;
}

// Matrix commutator, re-expressed in B+. The generators occupy disjoint
// matrix positions, so coordinates read off directly; anything left over
// means the commutator escaped the span, which is a transcription defect.
inline So21Element bracket(const So21Element& A, const So21Element& B)
{
    const Matrix<Rational> M = A.matrix * B.matrix - B.matrix * A.matrix;
    So21Element out;
    out.coords = {M(1, 2) / 2, M(0, 2) / 2, M(1, 0) / 2};
    const auto gen = so21_generators();
    out.matrix = out.coords[0] * gen[0] + out.coords[1] * gen[1] + out.coords[2] * gen[2];
    if (out.matrix != M)
        throw VerificationError("so21 bracket: commutator is not in the span of e1,e2,e3");
    return out;
}

// Closed-form exp(s * e_which). The e1, e2 subgroups are hyperbolic
// rotations, the e3 subgroup is an ordinary rotation, all with angle 2s.
inline Matrix<double> exp_generator(double s, int which)
{
    Matrix<double> m = Matrix<double>::identity(3);
    const double c2 = std::cosh(2 * s), s2 = std::sinh(2 * s);
    switch (which) {
        case 1:
            m(1, 1) = c2;
            m(1, 2) = s2;
            m(2, 1) = s2;
            m(2, 2) = c2;
            break;
        case 2:
            m(0, 0) = c2;
            m(0, 2) = s2;
            m(2, 0) = s2;
            m(2, 2) = c2;
            break;
        case 3:
            m(0, 0) = std::cos(2 * s);
            m(0, 1) = -std::sin(2 * s);
            m(1, 0) = std::sin(2 * s);
            m(1, 1) = std::cos(2 * s);
            break;
        default: throw std::invalid_argument("exp_generator: which must be 1, 2 or 3");
    }
    return m;
}

// Truncated series sum_{k<terms} (s e_which)^k / k!, for cross-checking the
// closed forms in float mode.
inline Matrix<double> exp_generator_series(double s, int which, int terms = 20)
{
    if (which < 1 || which > 3)
        throw std::invalid_argument("exp_generator_series: which must be 1, 2 or 3");
    const auto gen = so21_generators();
    Matrix<double> x(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) x(i, j) = s * to_double(gen[which - 1](i, j));
    Matrix<double> acc = Matrix<double>::identity(3);
    Matrix<double> term = Matrix<double>::identity(3);
    for (int k = 1; k < terms; ++k) {
        term = (1.0 / k) * (term * x);
        acc = acc + term;
    }
    return acc;
}

// ad(b_which) w.r.t. the chosen basis, columns computed from brackets.
inline Matrix<Rational> ad_matrix(int which, So21Basis basis)
{
    if (which < 1 || which > 3) throw std::invalid_argument("ad_matrix: which must be 1, 2 or 3");
    const auto b = so21_basis(basis);
    const Rational s = basis == So21Basis::plus ? 1 : -1;
    Matrix<Rational> ad(3);
    for (int j = 0; j < 3; ++j) {
        const So21Element br = bracket(b[which - 1], b[j]);
        // coords of br w.r.t. the chosen basis differ from B+ coords by s
        for (int i = 0; i < 3; ++i) ad(i, j) = s * br.coords[i];
    }
    return ad;
}

}  // namespace pqk
