#include "quatcong/linalg.hpp"

#include <utility>

namespace quatcong {

namespace {

// Echelonize rows of a, pivoting only within the first pivot_cols columns.
// Returns the number of pivot rows; rows below are zero on those columns.
size_t echelonize(IntMatrix& a, size_t pivot_cols, bool reduce_above) {
    size_t r = 0;
    for (size_t c = 0; c < pivot_cols && r < a.rows(); ++c) {
        while (true) {
            size_t best = a.rows();
            for (size_t i = r; i < a.rows(); ++i) {
                if (a(i, c) == 0) continue;
                if (best == a.rows() || abs(a(i, c)) < abs(a(best, c))) best = i;
            }
            if (best == a.rows()) break;
            a.swap_rows(r, best);
            bool done = true;
            for (size_t i = r + 1; i < a.rows(); ++i) {
                if (a(i, c) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
                for (size_t j = c; j < a.cols(); ++j) a(i, j) -= q * a(r, j);
                if (a(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (r < a.rows() && a(r, c) != 0) {
            if (a(r, c) < 0)
                for (size_t j = c; j < a.cols(); ++j) a(r, j) = -a(r, j);
            if (reduce_above) {
                for (size_t i = 0; i < r; ++i) {
                    Integer q;
                    mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
                    if (q == 0) continue;
                    for (size_t j = c; j < a.cols(); ++j) a(i, j) -= q * a(r, j);
                }
            }
            ++r;
        }
    }
    return r;
}

}  // namespace

IntMatrix hnf(const IntMatrix& a) {
    IntMatrix m(a);
    size_t r = echelonize(m, m.cols(), true);
    IntMatrix out(r, m.cols());
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

IntMatrix integer_kernel(const IntMatrix& c) {
    size_t m = c.rows(), n = c.cols();
    IntMatrix aug(n, m + n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < m; ++j) aug(i, j) = c(j, i);
        aug(i, m + i) = 1;
    }
    size_t r = echelonize(aug, m, false);
    IntMatrix k(n - r, n);
    for (size_t i = r; i < n; ++i)
        for (size_t j = 0; j < n; ++j) k(i - r, j) = aug(i, m + j);
    return hnf(k);
}

RatMatrix to_rational(const IntMatrix& a) {
    RatMatrix r(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(RatMatrix& a) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(r, p);
        Rational inv = 1 / a(r, c);
        for (size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rational f = a(i, c);
            for (size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

size_t rank(const RatMatrix& a) {
    RatMatrix m(a);
    return rref(m).size();
}

size_t rank(const IntMatrix& a) { return hnf(a).rows(); }

RatMatrix nullspace(const RatMatrix& a) {
    RatMatrix m(a);
    auto pivots = rref(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    RatMatrix out(a.cols() - pivots.size(), a.cols());
    size_t k = 0;
    for (size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        out(k, f) = 1;
        for (size_t i = 0; i < pivots.size(); ++i) out(k, pivots[i]) = -m(i, f);
        ++k;
    }
    return out;
}

IntMatrix saturation(const IntMatrix& a) {
    RatMatrix comp = nullspace(to_rational(a));
    if (comp.rows() == 0) {
        return IntMatrix::identity(a.cols());
    }
    IntMatrix c(comp.rows(), comp.cols());
    for (size_t i = 0; i < comp.rows(); ++i) c.set_row(i, primitive_integer_vector(comp.row(i)));
    return integer_kernel(c);
}

bool is_saturated(const IntMatrix& a) { return hnf(a) == saturation(a); }

std::optional<RatVector> solve_in_row_span(const RatMatrix& basis, const RatVector& v) {
    // Solve c * basis = v, i.e. basis^T c^T = v^T.
    size_t r = basis.rows(), n = basis.cols();
    RatMatrix aug(n, r + 1);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < r; ++j) aug(i, j) = basis(j, i);
        aug(i, r) = v[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == r) return std::nullopt;
    RatVector c(r);
    for (size_t i = 0; i < pivots.size(); ++i) c[pivots[i]] = aug(i, r);
    return c;
}

IntVector primitive_integer_vector(const RatVector& v) {
    Integer l(1);
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVector out(v.size());
    Integer g(0);
    for (size_t i = 0; i < v.size(); ++i) {
        Rational s = v[i] * l;
        out[i] = s.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
    }
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

}  // namespace quatcong

namespace quatcong {

long mod_p(long x, long p) {
    x %= p;
    return x < 0 ? x + p : x;
}

long inverse_mod(long x, long p) {
    long a = mod_p(x, p), m = p, u = 1, v = 0;
    while (m != 0) {
        long q = a / m;
        a -= q * m;
        std::swap(a, m);
        u -= q * v;
        std::swap(u, v);
    }
    check(a == 1, "inverse_mod: not invertible");
    return mod_p(u, p);
}

namespace {

std::vector<size_t> rref_mod_p_inplace(ModPMatrix& a, long p) {
    std::vector<size_t> pivots;
    if (a.empty()) return pivots;
    size_t cols = a[0].size(), r = 0;
    for (auto& row : a)
        for (auto& x : row) x = mod_p(x, p);
    for (size_t c = 0; c < cols && r < a.size(); ++c) {
        size_t piv = r;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[r], a[piv]);
        long inv = inverse_mod(a[r][c], p);
        for (auto& x : a[r]) x = x * inv % p;
        for (size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            long f = a[i][c];
            for (size_t j = 0; j < cols; ++j) a[i][j] = mod_p(a[i][j] - f * a[r][j], p);
        }
        pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    return pivots;
}

}  // namespace

ModPMatrix rref_mod_p(ModPMatrix rows, long p) {
    rref_mod_p_inplace(rows, p);
    return rows;
}

ModPMatrix kernel_mod_p(const ModPMatrix& a, long p) {
    if (a.empty()) return {};
    size_t cols = a[0].size();
    ModPMatrix m(a);
    auto pivots = rref_mod_p_inplace(m, p);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    ModPMatrix out;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<long> v(cols, 0);
        v[f] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = mod_p(-m[i][f], p);
        out.push_back(v);
    }
    return out;
}

}  // namespace quatcong
