#pragma once

// Pseudo-Euclidean frame spaces. A NeutralSpace is R^{4n} with the diagonal
// metric diag(-1,...,-1,+1,...,+1), 2n of each sign, and the standard basis
// as pseudo-orthonormal frame.

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace pqk {

struct NeutralSpace {
    std::size_t dim = 0;
    std::vector<int> frame_signs;  // eps_i = g(e_i, e_i)

    int sign(std::size_t i) const { return frame_signs[i]; }
    int metric_sign(std::size_t i, std::size_t j) const { return i == j ? frame_signs[i] : 0; }
};

inline NeutralSpace make_neutral_space(std::size_t n)
{
    if (n == 0) throw std::invalid_argument("make_neutral_space: n must be >= 1");
    NeutralSpace s;
    s.dim = 4 * n;
    s.frame_signs.assign(s.dim, 1);
    for (std::size_t i = 0; i < 2 * n; ++i) s.frame_signs[i] = -1;
    return s;
}

// Frame weights for metric-weighted contractions: c_i = g(e_i, e_i).
template <class K>
std::vector<K> frame_weights(const NeutralSpace& s)
{
    std::vector<K> w;
    w.reserve(s.dim);
    for (int sg : s.frame_signs) w.emplace_back(sg);
    return w;
}

}  // namespace pqk
