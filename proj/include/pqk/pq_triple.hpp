#pragma once

// The concrete paraquaternionic triple (J1, J2, J3) on R^{4n}, the gl(4n,R)
// inner product in its two adjoint readings, and the vertical model spaces
// m3 = span{J1,J2} and m1 = span{J2,J3}.
//
// Representation (per 4-dim block, minus pair (a,b), plus pair (c,d)):
//   J1: a<->c, b<->d                      (symmetric,  J1^2 = +Id)
//   J2: a->d, d->a, b->-c, c->-b          (symmetric,  J2^2 = +Id)
//   J3: a->b, b->-a, c->-d, d->c          (antisymmetric, J3^2 = -Id)
// tau = (-1,-1,+1) throughout; J1 J2 = J3 and the even-permutation products
// J_a J_b = tau_c J_c all hold exactly (asserted at construction).

#include "pqk/matrix.hpp"
#include "pqk/space.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace pqk {

inline constexpr std::array<int, 3> kTau = {-1, -1, 1};

enum class AdjointMode {
    frame_transpose,  // (A,B) = Trace(A B^t), plain transpose
    metric_adjoint,   // (A,B) = Trace(A B^#), g(Bx,y) = g(x, B^# y)
};

// Default pinned by the requirement that the assembled bundle tensors
// reproduce the Ricci displays for both kinds; frame_transpose cannot
// (its gram on m1 is positive definite). Both stay selectable.
inline constexpr AdjointMode kDefaultAdjointMode = AdjointMode::metric_adjoint;

inline const char* to_string(AdjointMode m)
{
    return m == AdjointMode::frame_transpose ? "frame-transpose" : "metric-adjoint";
}

template <class K>
struct ParaHypercomplexTriple {
    std::size_t n = 0;
    std::array<Matrix<K>, 3> J;

    std::size_t dim() const { return 4 * n; }
};

template <class K>
K gl_inner(const Matrix<K>& A, const Matrix<K>& B, AdjointMode mode)
{
    const std::size_t dim = A.dim();
    if (B.dim() != dim) throw std::invalid_argument("gl_inner: dimension mismatch");
    if (mode == AdjointMode::frame_transpose) return (A * B.transposed()).trace();
    if (dim % 4 != 0) throw std::invalid_argument("gl_inner: metric adjoint needs dim = 4n");
    const NeutralSpace space = make_neutral_space(dim / 4);
    // B^#(i,j) = eps_i B(j,i) eps_j for the diagonal neutral metric
    Matrix<K> Bs(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            Bs(i, j) = K(space.sign(i) * space.sign(j)) * B(j, i);
    return (A * Bs).trace();
}

template <class K>
ParaHypercomplexTriple<K> standard_triple(std::size_t n)
{
    if (n == 0) throw std::invalid_argument("standard_triple: n must be >= 1");
    const std::size_t dim = 4 * n;
    ParaHypercomplexTriple<K> t;
    t.n = n;
    for (auto& m : t.J) m = Matrix<K>(dim);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t a = 2 * k, b = 2 * k + 1, c = 2 * n + 2 * k, d = 2 * n + 2 * k + 1;
        t.J[0](c, a) = t.J[0](a, c) = K(1);
        t.J[0](d, b) = t.J[0](b, d) = K(1);
        t.J[1](d, a) = t.J[1](a, d) = K(1);
        t.J[1](c, b) = t.J[1](b, c) = K(-1);
        t.J[2](b, a) = K(1);
        t.J[2](a, b) = K(-1);
        t.J[2](d, c) = K(-1);
        t.J[2](c, d) = K(1);
    }

    // Build-time invariant checks; failure here is a construction defect.
    const Matrix<K> id = Matrix<K>::identity(dim);
    for (int a = 0; a < 3; ++a)
        if (t.J[a] * t.J[a] != K(-kTau[a]) * id)
            throw std::logic_error("standard_triple: J_a^2 != -tau_a Id");
    constexpr std::array<std::array<int, 3>, 3> perms = {{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
    for (auto [a, b, g] : perms) {
        if (t.J[a] * t.J[b] != K(kTau[g]) * t.J[g])
            throw std::logic_error("standard_triple: J_a J_b != tau_g J_g");
        if (t.J[b] * t.J[a] != K(-kTau[g]) * t.J[g])
            throw std::logic_error("standard_triple: J_b J_a != -tau_g J_g");
    }
    const NeutralSpace space = make_neutral_space(n);
    for (int a = 0; a < 3; ++a)
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                K lhs(0);
                for (std::size_t k = 0; k < dim; ++k)
                    lhs += K(space.sign(k)) * t.J[a](k, i) * t.J[a](k, j);
                if (lhs != K(kTau[a]) * K(space.metric_sign(i, j)))
                    throw std::logic_error("standard_triple: metric compatibility failed");
            }
    return t;
}

enum class BundleKind { twistor, reflector };

inline const char* to_string(BundleKind k)
{
    return k == BundleKind::twistor ? "twistor" : "reflector";
}

template <class K>
struct VerticalSubspace {
    BundleKind kind{};
    std::array<Matrix<K>, 2> basis;  // {J1,J2} on m3, {J2,J3} on m1
    Matrix<K> gram;                  // 2x2, diagonal and invertible in both modes
    AdjointMode mode{};
};

template <class K>
VerticalSubspace<K> vertical_subspace(const ParaHypercomplexTriple<K>& triple, BundleKind kind,
                                      AdjointMode mode = kDefaultAdjointMode)
{
    VerticalSubspace<K> v;
    v.kind = kind;
    v.mode = mode;
    v.basis = kind == BundleKind::twistor ? std::array{triple.J[0], triple.J[1]}
                                          : std::array{triple.J[1], triple.J[2]};
    const Matrix<K>& anchor = kind == BundleKind::twistor ? triple.J[2] : triple.J[0];
    const std::size_t dim = triple.dim();
    const Matrix<K> zero(dim);
    for (const auto& b : v.basis)
        if (b * anchor + anchor * b != zero)
            throw std::logic_error("vertical_subspace: basis element does not anticommute");
    v.gram = Matrix<K>(2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            v.gram(i, j) = gl_inner(v.basis[i], v.basis[j], mode);
    if (v.gram(0, 1) != K(0) || v.gram(1, 0) != K(0) || v.gram(0, 0) == K(0) ||
        v.gram(1, 1) == K(0))
        throw std::logic_error("vertical_subspace: gram is not diagonal invertible");
    return v;
}

}  // namespace pqk
