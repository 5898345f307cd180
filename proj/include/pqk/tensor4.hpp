#pragma once

// Dense (0,4) tensors with curvature-symmetry validation. Storage is the
// full dim^4 array; the symmetry checks below are genuine tests of filled
// entries, not construction artifacts.

#include "pqk/scalar.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace pqk {

template <class K>
class Tensor4 {
public:
    Tensor4() = default;
    explicit Tensor4(std::size_t dim) : n_(dim), e_(dim * dim * dim * dim, K(0)) {}

    std::size_t dim() const { return n_; }

    K& operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t d)
    {
        return e_[((a * n_ + b) * n_ + c) * n_ + d];
    }
    const K& operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const
    {
        return e_[((a * n_ + b) * n_ + c) * n_ + d];
    }

    friend bool operator==(const Tensor4& x, const Tensor4& y)
    {
        return x.n_ == y.n_ && x.e_ == y.e_;
    }

    friend Tensor4 operator*(const K& s, const Tensor4& t)
    {
        Tensor4 out(t.n_);
        for (std::size_t i = 0; i < t.e_.size(); ++i) out.e_[i] = s * t.e_[i];
        return out;
    }

    friend Tensor4 operator+(const Tensor4& x, const Tensor4& y)
    {
        Tensor4 out(x.n_);
        for (std::size_t i = 0; i < x.e_.size(); ++i) out.e_[i] = x.e_[i] + y.e_[i];
        return out;
    }

private:
    std::size_t n_ = 0;
    std::vector<K> e_;
};

struct SymmetryViolation {
    std::string identity;            // "antisymmetry(1,2)", "antisymmetry(3,4)",
                                     // "pair-symmetry", "first-Bianchi"
    std::array<std::size_t, 4> witness{};
};

using SymmetryReport = std::vector<SymmetryViolation>;

// Checks, over every index quadruple:
//   R(a,b,c,d) = -R(b,a,c,d) = -R(a,b,d,c),  R(a,b,c,d) = R(c,d,a,b),
//   R(a,b,c,d) + R(b,c,a,d) + R(c,a,b,d) = 0.
// One witness is reported per violated identity family; the report is empty
// iff all hold.
template <class K>
SymmetryReport validate_curvature_symmetries(const Tensor4<K>& R)
{
    const std::size_t n = R.dim();
    SymmetryReport report;
    bool bad12 = false, bad34 = false, badpair = false, badbianchi = false;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    const K& v = R(a, b, c, d);
                    if (!bad12 && !scalar_eq(v, K(-R(b, a, c, d)))) {
                        report.push_back({"antisymmetry(1,2)", {a, b, c, d}});
                        bad12 = true;
                    }
                    if (!bad34 && !scalar_eq(v, K(-R(a, b, d, c)))) {
                        report.push_back({"antisymmetry(3,4)", {a, b, c, d}});
                        bad34 = true;
                    }
                    if (!badpair && !scalar_eq(v, R(c, d, a, b))) {
                        report.push_back({"pair-symmetry", {a, b, c, d}});
                        badpair = true;
                    }
                    if (!badbianchi &&
                        !scalar_is_zero(K(v + R(b, c, a, d) + R(c, a, b, d)))) {
                        report.push_back({"first-Bianchi", {a, b, c, d}});
                        badbianchi = true;
                    }
                }
    return report;
}

}  // namespace pqk
