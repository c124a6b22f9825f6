#include "quatcong/f2.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace quatcong;

namespace {

F2Poly random_poly(std::mt19937& rng, int deg) {
    std::vector<bool> c(deg + 1);
    for (int i = 0; i < deg; ++i) c[i] = rng() & 1;
    c[deg] = true;
    return F2Poly(c);
}

F2Matrix random_matrix(std::mt19937& rng, size_t n) {
    F2Matrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m.set(i, j, rng() & 1);
    return m;
}

int mobius(int n) {
    int r = 1;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            r = -r;
        }
    return n > 1 ? -r : r;
}

}  // namespace

TEST(F2Poly, DivisionIdentity) {
    std::mt19937 rng(1);
    for (int t = 0; t < 200; ++t) {
        F2Poly a = random_poly(rng, 1 + rng() % 12), b = random_poly(rng, 1 + rng() % 6);
        F2Poly q = a / b, r = a % b;
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.degree(), b.degree());
        F2Poly g = F2Poly::gcd(a, b);
        EXPECT_TRUE((a % g).is_zero());
        EXPECT_TRUE((b % g).is_zero());
    }
}

TEST(F2Poly, IrreducibleCountsMatchNecklaceFormula) {
    for (int d = 1; d <= 10; ++d) {
        long expect = 0;
        for (int e = 1; e <= d; ++e)
            if (d % e == 0) expect += mobius(d / e) * (1l << e);
        expect /= d;
        long count = 0;
        for (long bits = 0; bits < (1l << d); ++bits) {
            std::vector<bool> c(d + 1);
            for (int i = 0; i < d; ++i) c[i] = (bits >> i) & 1;
            c[d] = true;
            if (F2Poly(c).is_irreducible()) ++count;
        }
        EXPECT_EQ(count, expect) << d;
    }
}

TEST(F2Poly, RadicalAndSqrt) {
    F2Poly f = F2Poly::x_plus(true);
    F2Poly g = F2Poly({true, true, true});
    F2Poly h = f * f * f * g * g;
    EXPECT_EQ(F2Poly::radical(h), f * g);
    EXPECT_EQ((g * g).sqrt(), g);
    EXPECT_EQ(g.to_string(), "x^2+x+1");
}

TEST(MinimalPolynomial, AnnihilatesAndIsMinimal) {
    std::mt19937 rng(4);
    for (int t = 0; t < 60; ++t) {
        size_t n = 1 + rng() % 7;
        F2Matrix a = random_matrix(rng, n);
        F2Poly m = minimal_polynomial(a);
        EXPECT_TRUE(m.evaluate(a).is_zero());
        // No proper divisor m / q with q irreducible annihilates a.
        for (long bits = 2; bits < (1l << 5); ++bits) {
            std::vector<bool> c;
            for (long b = bits; b; b >>= 1) c.push_back(b & 1);
            F2Poly q(c);
            if (!q.is_irreducible() || !(m % q).is_zero()) continue;
            EXPECT_FALSE((m / q).evaluate(a).is_zero());
        }
    }
}

TEST(F2Matrix, RankNullity) {
    std::mt19937 rng(8);
    for (int t = 0; t < 60; ++t) {
        size_t n = 1 + rng() % 9;
        F2Matrix a = random_matrix(rng, n);
        auto k = a.kernel();
        EXPECT_EQ(a.rank() + k.size(), n);
        for (const auto& v : k) EXPECT_TRUE(a.apply(v).is_zero());
        EXPECT_EQ(a.column_space().size(), a.rank());
        EXPECT_EQ(F2Matrix::unflatten(a.flatten(), n), a);
    }
}

TEST(F2Echelon, ReduceReturnsCombination) {
    std::mt19937 rng(2);
    const size_t n = 12;
    std::vector<F2Vec> inserted;
    F2Echelon e(n, 20);
    for (int t = 0; t < 20; ++t) {
        F2Vec v(n);
        for (size_t i = 0; i < n; ++i) v.set(i, rng() % 3 == 0);
        e.insert(v);
        inserted.push_back(v);
    }
    for (int t = 0; t < 30; ++t) {
        F2Vec v(n);
        for (size_t i = 0; i < n; ++i) v.set(i, rng() & 1);
        F2Vec residue(v);
        F2Vec combo = e.reduce(residue);
        F2Vec rebuilt(residue);
        for (size_t k = 0; k < inserted.size(); ++k)
            if (combo.get(k)) rebuilt ^= inserted[k];
        EXPECT_EQ(rebuilt, v);
        EXPECT_EQ(e.contains(v), residue.is_zero());
    }
}
