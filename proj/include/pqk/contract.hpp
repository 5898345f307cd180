#pragma once

// Metric-weighted tensor contractions.
//
// Ricci convention. The contraction is
//     rho(X,Y) = sum_i eps_i R(X, E_i, Y, E_i),
// pinned by requiring the space-form model to satisfy rho = (Sc/4n) g; this
// is the opposite sign of the first-guess sum_i eps_i R(E_i,X,Y,E_i), and
// kRicciSignFlipped records that choice for reports. With an orthogonal but
// unnormalized frame B_i (h(B_i,B_j) = c_i delta_ij, c_i rational) the same
// sum reads  sum_i R(X, B_i, Y, B_i) / c_i,  which keeps every contraction
// inside the scalar field — no square roots are ever taken.

#include "pqk/matrix.hpp"
#include "pqk/space.hpp"
#include "pqk/tensor4.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pqk {

inline constexpr bool kRicciSignFlipped = true;

template <class K>
using BilinearForm = Matrix<K>;

template <class K>
BilinearForm<K> ricci_contract(const Tensor4<K>& R, const std::vector<K>& weights)
{
    const std::size_t n = R.dim();
    if (weights.size() != n) throw std::invalid_argument("ricci_contract: dimension mismatch");
    BilinearForm<K> rho(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) {
            K acc(0);
            for (std::size_t i = 0; i < n; ++i) acc += R(a, i, c, i) / weights[i];
            rho(a, c) = acc;
        }
    return rho;
}

template <class K>
BilinearForm<K> ricci_contract(const Tensor4<K>& R, const NeutralSpace& space)
{
    if (R.dim() != space.dim) throw std::invalid_argument("ricci_contract: dimension mismatch");
    return ricci_contract(R, frame_weights<K>(space));
}

template <class K>
K scalar_curvature(const BilinearForm<K>& rho, const std::vector<K>& weights)
{
    if (rho.dim() != weights.size())
        throw std::invalid_argument("scalar_curvature: dimension mismatch");
    K acc(0);
    for (std::size_t i = 0; i < rho.dim(); ++i) acc += rho(i, i) / weights[i];
    return acc;
}

template <class K>
K scalar_curvature(const BilinearForm<K>& rho, const NeutralSpace& space)
{
    return scalar_curvature(rho, frame_weights<K>(space));
}

// Signed permutation view of an endomorphism: M e_j = sign[j] e_[perm[j]].
// All structure endomorphisms in the pinned representations have this shape,
// which turns J-twisted scans into single lookups.
template <class K>
struct SignedPerm {
    std::vector<std::size_t> perm;
    std::vector<int> sign;
};

template <class K>
std::optional<SignedPerm<K>> as_signed_perm(const Matrix<K>& M)
{
    const std::size_t n = M.dim();
    SignedPerm<K> sp;
    sp.perm.resize(n);
    sp.sign.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t hits = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const K& v = M(i, j);
            if (v == K(0)) continue;
            if (v == K(1))
                sp.sign[j] = 1;
            else if (v == K(-1))
                sp.sign[j] = -1;
            else
                return std::nullopt;
            sp.perm[j] = i;
            ++hits;
        }
        if (hits != 1) return std::nullopt;
    }
    return sp;
}

// rho*(X,Y) = sum_i eps_i R(X, E_i, J Y, J E_i); weighted form as above.
// Requires J^2 = +-Id (complex or para-complex structure).
template <class K>
BilinearForm<K> star_ricci_contract(const Tensor4<K>& R, const Matrix<K>& J,
                                    const std::vector<K>& weights)
{
    const std::size_t n = R.dim();
    if (J.dim() != n || weights.size() != n)
        throw std::invalid_argument("star_ricci_contract: dimension mismatch");
    const Matrix<K> J2 = J * J;
    if (J2 != Matrix<K>::identity(n) && J2 != (K(-1) * Matrix<K>::identity(n)))
        throw std::invalid_argument("star_ricci_contract: J^2 is not +-Id");

    BilinearForm<K> rho(n);
    if (auto sp = as_signed_perm(J)) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                K acc(0);
                for (std::size_t i = 0; i < n; ++i) {
                    K term = R(a, i, sp->perm[b], sp->perm[i]) / weights[i];
                    if (sp->sign[b] * sp->sign[i] < 0) term = -term;
                    acc += term;
                }
                rho(a, b) = acc;
            }
        return rho;
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            K acc(0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k) {
                    if (J(k, b) == K(0)) continue;
                    for (std::size_t l = 0; l < n; ++l) {
                        if (J(l, i) == K(0)) continue;
                        acc += J(k, b) * J(l, i) * R(a, i, k, l) / weights[i];
                    }
                }
            rho(a, b) = acc;
        }
    return rho;
}

template <class K>
BilinearForm<K> star_ricci_contract(const Tensor4<K>& R, const Matrix<K>& J,
                                    const NeutralSpace& space)
{
    return star_ricci_contract(R, J, frame_weights<K>(space));
}

}  // namespace pqk
