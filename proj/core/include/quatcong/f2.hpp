#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace quatcong {

class F2Vec {
public:
    F2Vec() = default;
    explicit F2Vec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    size_t size() const { return n_; }
    bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(size_t i, bool v) {
        if (v) w_[i >> 6] |= (uint64_t(1) << (i & 63));
        else w_[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }
    void flip(size_t i) { w_[i >> 6] ^= (uint64_t(1) << (i & 63)); }
    F2Vec& operator^=(const F2Vec& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    F2Vec operator^(const F2Vec& o) const {
        F2Vec r(*this);
        r ^= o;
        return r;
    }
    bool dot(const F2Vec& o) const;
    bool is_zero() const;
    long first_set() const;  // -1 if zero
    bool operator==(const F2Vec& o) const = default;
    std::string to_string() const;

private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

// Matrices act on column vectors: y = A x.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(size_t rows, size_t cols) : rows_(rows, F2Vec(cols)), cols_(cols) {}
    static F2Matrix identity(size_t n);
    static F2Matrix from_columns(const std::vector<F2Vec>& cols, size_t nrows);

    size_t rows() const { return rows_.size(); }
    size_t cols() const { return cols_; }
    bool get(size_t i, size_t j) const { return rows_[i].get(j); }
    void set(size_t i, size_t j, bool v) { rows_[i].set(j, v); }
    const F2Vec& row(size_t i) const { return rows_[i]; }
    F2Vec column(size_t j) const;

    F2Vec apply(const F2Vec& x) const;
    F2Matrix operator*(const F2Matrix& o) const;
    F2Matrix operator+(const F2Matrix& o) const;
    bool operator==(const F2Matrix& o) const = default;
    bool is_zero() const;

    // Flatten to a single vector (row-major), for linear independence tests
    // inside matrix algebras.
    F2Vec flatten() const;
    static F2Matrix unflatten(const F2Vec& v, size_t n);

    size_t rank() const;
    std::vector<F2Vec> kernel() const;        // basis of {x : A x = 0}
    std::vector<F2Vec> column_space() const;  // basis of the image, reduced echelon

private:
    std::vector<F2Vec> rows_;
    size_t cols_ = 0;
};

// Incremental echelon basis that remembers how each stored vector was built
// from the inserted ones.
class F2Echelon {
public:
    // n: vector length; max_inserts: bound on the number of insert() calls.
    F2Echelon(size_t n, size_t max_inserts) : n_(n), max_(max_inserts) {}
    // Returns true if v was independent of the current span (and adds it).
    bool insert(const F2Vec& v);
    // Reduces v against the basis; returns the combination of inserted
    // vectors (by insertion index) used. v becomes the residue.
    F2Vec reduce(F2Vec& v) const;
    bool contains(const F2Vec& v) const;
    size_t dim() const { return basis_.size(); }

private:
    size_t n_, max_;
    size_t inserted_ = 0;
    std::vector<F2Vec> basis_;
    std::vector<size_t> pivot_;
    std::vector<F2Vec> combo_;
};

class F2Poly {
public:
    F2Poly() = default;
    explicit F2Poly(std::vector<bool> coeffs);  // low degree first
    static F2Poly x_plus(bool c);               // x + c
    static F2Poly monomial(size_t d);
    static F2Poly one();

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool coeff(size_t i) const { return i < c_.size() && c_[i]; }
    bool is_zero() const { return c_.empty(); }

    F2Poly operator+(const F2Poly& o) const;
    F2Poly operator*(const F2Poly& o) const;
    F2Poly operator%(const F2Poly& o) const;
    F2Poly operator/(const F2Poly& o) const;
    bool operator==(const F2Poly& o) const = default;
    bool operator<(const F2Poly& o) const;

    F2Poly derivative() const;
    F2Poly sqrt() const;  // requires all odd coefficients zero
    bool is_irreducible() const;
    F2Matrix evaluate(const F2Matrix& a) const;
    std::string to_string() const;  // e.g. "x^2+x+1"

    static F2Poly gcd(F2Poly a, F2Poly b);
    static F2Poly lcm(const F2Poly& a, const F2Poly& b);
    static F2Poly radical(const F2Poly& f);

private:
    void trim();
    std::vector<bool> c_;
};

F2Poly minimal_polynomial(const F2Matrix& a);

}  // namespace quatcong
