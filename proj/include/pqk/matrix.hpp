#pragma once

// Dense square matrices over an exact field, sized for pointwise models
// (dim <= 16). Row-major; (M*v)_i = sum_j M(i,j) v_j.

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace pqk {

template <class K>
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), e_(n * n, K(0)) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    std::size_t dim() const { return n_; }

    K& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.n_ != b.n_) throw std::invalid_argument("Matrix: dimension mismatch");
        Matrix c(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                const K& aik = a(i, k);
                if (aik == K(0)) continue;
                for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b)
    {
        if (a.n_ != b.n_) throw std::invalid_argument("Matrix: dimension mismatch");
        Matrix c(a.n_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] + b.e_[i];
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b)
    {
        if (a.n_ != b.n_) throw std::invalid_argument("Matrix: dimension mismatch");
        Matrix c(a.n_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] - b.e_[i];
        return c;
    }

    friend Matrix operator*(const K& s, const Matrix& a)
    {
        Matrix c(a.n_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = s * a.e_[i];
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix transposed() const
    {
        Matrix c(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) c(j, i) = (*this)(i, j);
        return c;
    }

    K trace() const
    {
        K t(0);
        for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    std::vector<K> apply(const std::vector<K>& v) const
    {
        if (v.size() != n_) throw std::invalid_argument("Matrix: vector dimension mismatch");
        std::vector<K> out(n_, K(0));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (!(v[j] == K(0))) out[i] += (*this)(i, j) * v[j];
        return out;
    }

private:
    std::size_t n_ = 0;
    std::vector<K> e_;
};

}  // namespace pqk
