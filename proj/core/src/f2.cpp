#include "quatcong/f2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace quatcong {

bool F2Vec::dot(const F2Vec& o) const {
    uint64_t acc = 0;
    for (size_t k = 0; k < w_.size(); ++k) acc ^= (w_[k] & o.w_[k]);
    return std::popcount(acc) % 2 == 1;
}

bool F2Vec::is_zero() const {
    return std::all_of(w_.begin(), w_.end(), [](uint64_t x) { return x == 0; });
}

long F2Vec::first_set() const {
    for (size_t k = 0; k < w_.size(); ++k)
        if (w_[k]) return static_cast<long>(k * 64 + std::countr_zero(w_[k]));
    return -1;
}

std::string F2Vec::to_string() const {
    std::string s(n_, '0');
    for (size_t i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

F2Matrix F2Matrix::identity(size_t n) {
    F2Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

F2Matrix F2Matrix::from_columns(const std::vector<F2Vec>& cols, size_t nrows) {
    F2Matrix m(nrows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < nrows; ++i)
            if (cols[j].get(i)) m.set(i, j, true);
    return m;
}

F2Vec F2Matrix::column(size_t j) const {
    F2Vec v(rows());
    for (size_t i = 0; i < rows(); ++i)
        if (get(i, j)) v.set(i, true);
    return v;
}

F2Vec F2Matrix::apply(const F2Vec& x) const {
    F2Vec y(rows());
    for (size_t i = 0; i < rows(); ++i)
        if (rows_[i].dot(x)) y.set(i, true);
    return y;
}

F2Matrix F2Matrix::operator*(const F2Matrix& o) const {
    F2Matrix r(rows(), o.cols());
    for (size_t i = 0; i < rows(); ++i)
        for (size_t k = 0; k < cols_; ++k)
            if (get(i, k)) r.rows_[i] ^= o.rows_[k];
    return r;
}

F2Matrix F2Matrix::operator+(const F2Matrix& o) const {
    F2Matrix r(*this);
    for (size_t i = 0; i < rows(); ++i) r.rows_[i] ^= o.rows_[i];
    return r;
}

bool F2Matrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const F2Vec& v) { return v.is_zero(); });
}

F2Vec F2Matrix::flatten() const {
    F2Vec v(rows() * cols_);
    for (size_t i = 0; i < rows(); ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (get(i, j)) v.set(i * cols_ + j, true);
    return v;
}

F2Matrix F2Matrix::unflatten(const F2Vec& v, size_t n) {
    F2Matrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (v.get(i * n + j)) m.set(i, j, true);
    return m;
}

namespace {

// Gaussian elimination on rows; returns pivot columns, rows reduced echelon.
std::vector<size_t> rref_rows(std::vector<F2Vec>& rows, size_t ncols) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
        size_t p = r;
        while (p < rows.size() && !rows[p].get(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        for (size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

}  // namespace

size_t F2Matrix::rank() const {
    std::vector<F2Vec> r(rows_);
    return rref_rows(r, cols_).size();
}

std::vector<F2Vec> F2Matrix::kernel() const {
    std::vector<F2Vec> r(rows_);
    auto pivots = rref_rows(r, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<F2Vec> out;
    for (size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        F2Vec v(cols_);
        v.set(f, true);
        for (size_t i = 0; i < pivots.size(); ++i)
            if (r[i].get(f)) v.set(pivots[i], true);
        out.push_back(v);
    }
    return out;
}

std::vector<F2Vec> F2Matrix::column_space() const {
    std::vector<F2Vec> cols;
    for (size_t j = 0; j < cols_; ++j) cols.push_back(column(j));
    rref_rows(cols, rows());
    return cols;
}

bool F2Echelon::insert(const F2Vec& v) {
    if (inserted_ >= max_) throw std::length_error("F2Echelon: too many inserts");
    F2Vec w(v);
    F2Vec combo = reduce(w);
    size_t idx = inserted_++;
    long p = w.first_set();
    if (p < 0) return false;
    combo.set(idx, true);
    basis_.push_back(w);
    pivot_.push_back(static_cast<size_t>(p));
    combo_.push_back(combo);
    return true;
}

F2Vec F2Echelon::reduce(F2Vec& v) const {
    F2Vec combo(max_);
    for (size_t k = 0; k < basis_.size(); ++k) {
        if (!v.get(pivot_[k])) continue;
        v ^= basis_[k];
        combo ^= combo_[k];
    }
    return combo;
}

bool F2Echelon::contains(const F2Vec& v) const {
    F2Vec w(v);
    reduce(w);
    return w.is_zero();
}

F2Poly::F2Poly(std::vector<bool> coeffs) : c_(std::move(coeffs)) { trim(); }

void F2Poly::trim() {
    while (!c_.empty() && !c_.back()) c_.pop_back();
}

F2Poly F2Poly::x_plus(bool c) { return F2Poly({c, true}); }

F2Poly F2Poly::monomial(size_t d) {
    std::vector<bool> c(d + 1, false);
    c[d] = true;
    return F2Poly(c);
}

F2Poly F2Poly::one() { return F2Poly({true}); }

F2Poly F2Poly::operator+(const F2Poly& o) const {
    std::vector<bool> c(std::max(c_.size(), o.c_.size()), false);
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) != o.coeff(i);
    return F2Poly(c);
}

F2Poly F2Poly::operator*(const F2Poly& o) const {
    if (is_zero() || o.is_zero()) return F2Poly();
    std::vector<bool> c(c_.size() + o.c_.size() - 1, false);
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i])
            for (size_t j = 0; j < o.c_.size(); ++j)
                if (o.c_[j]) c[i + j] = !c[i + j];
    return F2Poly(c);
}

namespace {

void divmod(const F2Poly& a, const F2Poly& b, F2Poly& q, F2Poly& r) {
    if (b.is_zero()) throw std::domain_error("F2Poly division by zero");
    std::vector<bool> rem(static_cast<size_t>(std::max(a.degree() + 1, 0)), false);
    for (size_t i = 0; i < rem.size(); ++i) rem[i] = a.coeff(i);
    int db = b.degree();
    std::vector<bool> quo(rem.size() > static_cast<size_t>(db) ? rem.size() - db : 1, false);
    for (int d = static_cast<int>(rem.size()) - 1; d >= db; --d) {
        if (!rem[d]) continue;
        quo[d - db] = true;
        for (int j = 0; j <= db; ++j)
            if (b.coeff(j)) rem[d - db + j] = !rem[d - db + j];
    }
    q = F2Poly(quo);
    r = F2Poly(rem);
}

}  // namespace

F2Poly F2Poly::operator%(const F2Poly& o) const {
    F2Poly q, r;
    divmod(*this, o, q, r);
    return r;
}

F2Poly F2Poly::operator/(const F2Poly& o) const {
    F2Poly q, r;
    divmod(*this, o, q, r);
    return q;
}

bool F2Poly::operator<(const F2Poly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    for (int i = degree(); i >= 0; --i)
        if (coeff(i) != o.coeff(i)) return !coeff(i);
    return false;
}

F2Poly F2Poly::derivative() const {
    std::vector<bool> c(c_.size() > 1 ? c_.size() - 1 : 0, false);
    for (size_t i = 1; i < c_.size(); i += 2) c[i - 1] = c_[i];
    return F2Poly(c);
}

F2Poly F2Poly::sqrt() const {
    std::vector<bool> c((c_.size() + 1) / 2, false);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        if (i % 2 == 1) throw std::domain_error("F2Poly::sqrt of a non-square");
        c[i / 2] = true;
    }
    return F2Poly(c);
}

F2Poly F2Poly::gcd(F2Poly a, F2Poly b) {
    while (!b.is_zero()) {
        F2Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

F2Poly F2Poly::lcm(const F2Poly& a, const F2Poly& b) {
    if (a.is_zero() || b.is_zero()) return F2Poly();
    return (a * b) / gcd(a, b);
}

F2Poly F2Poly::radical(const F2Poly& f) {
    if (f.degree() <= 0) return f;
    F2Poly d = f.derivative();
    if (d.is_zero()) return radical(f.sqrt());
    F2Poly g = gcd(f, d);
    return lcm(f / g, radical(g));
}

bool F2Poly::is_irreducible() const {
    int n = degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    // x^(2^i) mod f for i = 1..n/2; f irreducible iff gcd(x^(2^i) - x, f) = 1 for all such i
    F2Poly x = monomial(1);
    F2Poly pw = x;
    for (int i = 1; i <= n / 2; ++i) {
        pw = (pw * pw) % *this;
        if (gcd(*this, pw + x).degree() != 0) return false;
    }
    return true;
}

F2Matrix F2Poly::evaluate(const F2Matrix& a) const {
    size_t n = a.rows();
    F2Matrix r(n, n);
    for (int i = degree(); i >= 0; --i) {
        r = r * a;
        if (coeff(i)) r = r + F2Matrix::identity(n);
    }
    return r;
}

std::string F2Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (!coeff(i)) continue;
        if (!s.empty()) s += "+";
        if (i == 0) s += "1";
        else if (i == 1) s += "x";
        else s += "x^" + std::to_string(i);
    }
    return s;
}

F2Poly minimal_polynomial(const F2Matrix& a) {
    size_t n = a.rows();
    F2Poly result = F2Poly::one();
    for (size_t j = 0; j < n; ++j) {
        F2Vec v(n);
        v.set(j, true);
        // Skip vectors already killed by the current polynomial.
        if (result.evaluate(a).apply(v).is_zero()) continue;
        F2Echelon krylov(n, n + 1);
        F2Vec cur = v;
        size_t d = 0;
        while (true) {
            F2Vec w(cur);
            F2Vec combo = krylov.reduce(w);
            if (w.is_zero()) {
                std::vector<bool> c(d + 1, false);
                c[d] = true;
                for (size_t i = 0; i < d; ++i) c[i] = combo.get(i);
                result = F2Poly::lcm(result, F2Poly(c));
                break;
            }
            krylov.insert(cur);
            cur = a.apply(cur);
            ++d;
        }
    }
    return result;
}

}  // namespace quatcong
