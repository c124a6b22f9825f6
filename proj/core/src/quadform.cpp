#include "quatcong/quadform.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

namespace quatcong {

LLLResult lll_gram(const IntMatrix& gram_in) {
    const size_t n = gram_in.rows();
    IntMatrix g(gram_in);
    IntMatrix h = IntMatrix::identity(n);
    if (n <= 1) return {g, h};

    const Rational delta(99, 100);
    RatMatrix mu(n, n);
    std::vector<Rational> b(n);

    auto red = [&](size_t k, size_t l) {
        Rational m = mu(k, l);
        if (2 * abs(m) <= 1) return;
        Integer q = floor_of(m + Rational(1, 2));
        for (size_t j = 0; j < n; ++j) h(k, j) -= q * h(l, j);
        Integer gkl = g(k, l);
        g(k, k) = g(k, k) - 2 * q * gkl + q * q * g(l, l);
        for (size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            g(k, i) -= q * g(l, i);
            g(i, k) = g(k, i);
        }
        mu(k, l) -= q;
        for (size_t i = 0; i < l; ++i) mu(k, i) -= q * mu(l, i);
    };

    auto gs_row = [&](size_t k) {
        for (size_t j = 0; j < k; ++j) {
            Rational s = g(k, j);
            for (size_t i = 0; i < j; ++i) s -= mu(j, i) * mu(k, i) * b[i];
            mu(k, j) = s / b[j];
        }
        Rational s = g(k, k);
        for (size_t j = 0; j < k; ++j) s -= mu(k, j) * mu(k, j) * b[j];
        b[k] = s;
        check(b[k] > 0, "lll_gram: form is not positive definite");
    };

    b[0] = g(0, 0);
    check(b[0] > 0, "lll_gram: form is not positive definite");
    size_t k = 1, kmax = 0;
    while (k < n) {
        if (k > kmax) {
            kmax = k;
            gs_row(k);
        }
        red(k, k - 1);
        if (b[k] < (delta - mu(k, k - 1) * mu(k, k - 1)) * b[k - 1]) {
            // swap k and k-1
            for (size_t j = 0; j < n; ++j) std::swap(h(k, j), h(k - 1, j));
            g.swap_rows(k, k - 1);
            for (size_t i = 0; i < n; ++i) std::swap(g(i, k), g(i, k - 1));
            for (size_t j = 0; j + 1 < k; ++j) std::swap(mu(k, j), mu(k - 1, j));
            Rational m = mu(k, k - 1);
            Rational bb = b[k] + m * m * b[k - 1];
            mu(k, k - 1) = m * b[k - 1] / bb;
            b[k] = b[k - 1] * b[k] / bb;
            b[k - 1] = bb;
            for (size_t i = k + 1; i <= kmax; ++i) {
                Rational t = mu(i, k);
                mu(i, k) = mu(i, k - 1) - m * t;
                mu(i, k - 1) = t + mu(k, k - 1) * mu(i, k);
            }
            if (k > 1) --k;
        } else {
            for (size_t l = k - 1; l-- > 0;) red(k, l);
            ++k;
        }
    }
    return {g, h};
}

namespace {

// Largest integer m with m <= u + sqrt(r), r >= 0.
Integer upper_end(const Rational& u, const Rational& r) {
    auto ok = [&](const Integer& m) {
        Rational d = Rational(m) - u;
        return d <= 0 || d * d <= r;
    };
    Integer m(static_cast<long>(std::floor(u.get_d() + std::sqrt(r.get_d()))));
    while (ok(m + 1)) ++m;
    while (!ok(m)) --m;
    return m;
}

// Smallest integer m with m >= u - sqrt(r), r >= 0.
Integer lower_end(const Rational& u, const Rational& r) {
    auto ok = [&](const Integer& m) {
        Rational d = u - Rational(m);
        return d <= 0 || d * d <= r;
    };
    Integer m(static_cast<long>(std::ceil(u.get_d() - std::sqrt(r.get_d()))));
    while (ok(m - 1)) --m;
    while (!ok(m)) ++m;
    return m;
}

struct Enumerator {
    size_t n;
    std::vector<std::vector<long>> g;  // Gram as int64
    RatMatrix q;                            // Cholesky-type coefficients
    long bound;
    const std::function<bool(const std::vector<long>&, long)>& f;
    std::vector<long> x;
    bool stopped = false;

    Enumerator(const IntMatrix& gram, long bnd,
               const std::function<bool(const std::vector<long>&, long)>& fn)
        : n(gram.rows()), g(n, std::vector<long>(n)), q(n, n), bound(bnd), f(fn), x(n, 0) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                check(gram(i, j).fits_slong_p() && abs(gram(i, j)) < (Integer(1) << 30),
                      "short vector enumeration: Gram entry too large");
                g[i][j] = gram(i, j).get_si();
                q(i, j) = Rational(gram(i, j)) / 2;
            }
        for (size_t i = 0; i < n; ++i) {
            check(q(i, i) > 0, "short vector enumeration: form is not positive definite");
            for (size_t j = i + 1; j < n; ++j) {
                q(j, i) = q(i, j);
                q(i, j) /= q(i, i);
            }
            for (size_t k = i + 1; k < n; ++k)
                for (size_t l = k; l < n; ++l) q(k, l) -= q(k, i) * q(i, l);
        }
    }

    void leaf() {
        // Q(x) = (g00 x0^2 + 2 x0 L + R) / 2 with L, R from the fixed coordinates
        long lin = 0, rest = 0;
        for (size_t j = 1; j < n; ++j) {
            lin += g[0][j] * x[j];
            for (size_t l = 1; l < n; ++l) rest += x[j] * g[j][l] * x[l];
        }
        Rational u = 0;
        for (size_t j = 1; j < n; ++j) u -= q(0, j) * x[j];
        // remaining budget: 2*bound >= g00 x0^2 + 2 x0 lin + rest, solve exactly
        // via the completed square around u with r = (2*bound - rest)/g00 + u^2
        Rational r = (Rational(2 * bound - rest)) / g[0][0] + u * u;
        if (r < 0) return;
        long lo = lower_end(u, r).get_si();
        long hi = upper_end(u, r).get_si();
        for (long v = lo; v <= hi; ++v) {
            long twice = g[0][0] * v * v + 2 * v * lin + rest;
            if (twice == 0 || twice > 2 * bound) continue;
            x[0] = v;
            if (!f(x, twice / 2)) {
                stopped = true;
                return;
            }
        }
        x[0] = 0;
    }

    void level(size_t i, const Rational& t) {
        if (stopped) return;
        if (i == 0) {
            leaf();
            return;
        }
        Rational u = 0;
        for (size_t j = i + 1; j < n; ++j) u -= q(i, j) * x[j];
        Rational r = t / q(i, i);
        Integer lo = lower_end(u, r), hi = upper_end(u, r);
        for (Integer v = lo; v <= hi && !stopped; ++v) {
            x[i] = v.get_si();
            Rational d = Rational(v) - u;
            Rational rem = t - q(i, i) * d * d;
            if (rem < 0) continue;
            level(i - 1, rem);
        }
        x[i] = 0;
    }
};

}  // namespace

bool for_each_short_vector(const IntMatrix& gram, long bound,
                           const std::function<bool(const std::vector<long>&, long)>& f) {
    if (bound < 1 || gram.rows() == 0) return true;
    Enumerator e(gram, bound, f);
    e.level(gram.rows() - 1, Rational(bound));
    return !e.stopped;
}

std::vector<long> theta_series(const IntMatrix& gram, long bound) {
    std::vector<long> theta(static_cast<size_t>(bound + 1), 0);
    theta[0] = 1;
    LLLResult red = lll_gram(gram);
    for_each_short_vector(red.gram, bound, [&](const std::vector<long>&, long v) {
        ++theta[static_cast<size_t>(v)];
        return true;
    });
    return theta;
}

namespace {

IntVector to_original(const std::vector<long>& x, const IntMatrix& transform) {
    IntVector out(transform.cols(), Integer(0));
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < transform.cols(); ++j) out[j] += Integer(x[i]) * transform(i, j);
    }
    return out;
}

}  // namespace

std::vector<IntVector> vectors_of_value(const IntMatrix& gram, long value) {
    std::vector<IntVector> out;
    LLLResult red = lll_gram(gram);
    for_each_short_vector(red.gram, value, [&](const std::vector<long>& x, long v) {
        if (v == value) out.push_back(to_original(x, red.transform));
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<IntVector> find_vector_of_value(const IntMatrix& gram, long value) {
    auto all = vectors_of_value(gram, value);
    if (all.empty()) return std::nullopt;
    return all.front();
}

std::pair<long, IntVector> minimal_vector(const IntMatrix& gram) {
    LLLResult red = lll_gram(gram);
    // the first reduced basis vector bounds the minimum
    long bound = Integer(red.gram(0, 0) / 2).get_si();
    long best = LONG_MAX;
    std::vector<IntVector> found;
    for_each_short_vector(red.gram, bound, [&](const std::vector<long>& x, long v) {
        if (v < best) {
            best = v;
            found.clear();
        }
        if (v == best) found.push_back(to_original(x, red.transform));
        return true;
    });
    std::sort(found.begin(), found.end());
    return {best, found.front()};
}

}  // namespace quatcong
