#pragma once

#include "quatcong/arith.hpp"

#include <optional>
#include <vector>

namespace quatcong {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    void set_row(size_t i, const std::vector<T>& v) {
        for (size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }
    void append_row(const std::vector<T>& v) {
        if (rows_ == 0 && cols_ == 0) cols_ = v.size();
        data_.insert(data_.end(), v.begin(), v.end());
        ++rows_;
    }
    void swap_rows(size_t a, size_t b) {
        if (a == b) return;
        for (size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        Matrix r(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                if ((*this)(i, k) == 0) continue;
                for (size_t j = 0; j < o.cols_; ++j) r(i, j) += (*this)(i, k) * o(k, j);
            }
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        Matrix r(*this);
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
        return r;
    }
    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    const std::vector<T>& data() const { return data_; }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// Row-style Hermite normal form: nonzero rows only, echelon with positive
// pivots, entries above each pivot reduced into [0, pivot).
IntMatrix hnf(const IntMatrix& a);

// Basis (rows) of {x in Z^n : c * x = 0} where c is m x n. The result is
// saturated and in Hermite normal form.
IntMatrix integer_kernel(const IntMatrix& c);

// Basis of the saturation of the row lattice of a, in Hermite normal form.
IntMatrix saturation(const IntMatrix& a);
bool is_saturated(const IntMatrix& a);

// Rational row space computations.
size_t rank(const RatMatrix& a);
size_t rank(const IntMatrix& a);
RatMatrix nullspace(const RatMatrix& a);  // rows span {x : a * x = 0}
RatMatrix to_rational(const IntMatrix& a);

// Coordinates c with c * basis = v (basis rows independent), if v lies in
// the rational row span.
std::optional<RatVector> solve_in_row_span(const RatMatrix& basis, const RatVector& v);

// Clears denominators of a rational vector and divides by the content.
IntVector primitive_integer_vector(const RatVector& v);

}  // namespace quatcong

namespace quatcong {

// Small dense linear algebra over Z/p (p prime, entries kept in [0, p)).
using ModPMatrix = std::vector<std::vector<long>>;

long mod_p(long x, long p);
long inverse_mod(long x, long p);
ModPMatrix rref_mod_p(ModPMatrix rows, long p);     // nonzero rows only
ModPMatrix kernel_mod_p(const ModPMatrix& a, long p);  // {x : a x = 0}

}  // namespace quatcong
