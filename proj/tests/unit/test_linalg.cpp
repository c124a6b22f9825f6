#include "quatcong/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace quatcong;

namespace {

IntMatrix random_matrix(std::mt19937& rng, size_t r, size_t c, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    IntMatrix m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

bool in_row_lattice(const IntMatrix& basis, const IntVector& v) {
    auto c = solve_in_row_span(to_rational(basis), RatVector(v.begin(), v.end()));
    if (!c) return false;
    for (const auto& x : *c)
        if (!is_integral(x)) return false;
    return true;
}

}  // namespace

TEST(Hnf, SameLatticeAndEchelonShape) {
    std::mt19937 rng(11);
    for (int t = 0; t < 40; ++t) {
        IntMatrix a = random_matrix(rng, 5, 4, -6, 6);
        IntMatrix h = hnf(a);
        EXPECT_EQ(h.rows(), rank(a));
        for (size_t i = 0; i < a.rows(); ++i) EXPECT_TRUE(in_row_lattice(h, a.row(i)));
        long last = -1;
        for (size_t i = 0; i < h.rows(); ++i) {
            size_t p = 0;
            while (h(i, p) == 0) ++p;
            EXPECT_GT(static_cast<long>(p), last);
            EXPECT_GT(h(i, p), 0);
            for (size_t k = 0; k < i; ++k) {
                EXPECT_GE(h(k, p), 0);
                EXPECT_LT(h(k, p), h(i, p));
            }
            last = static_cast<long>(p);
        }
        EXPECT_EQ(hnf(h), h);
    }
}

TEST(IntegerKernel, AnnihilatesAndIsSaturated) {
    std::mt19937 rng(3);
    for (int t = 0; t < 40; ++t) {
        IntMatrix c = random_matrix(rng, 2, 5, -5, 5);
        IntMatrix k = integer_kernel(c);
        EXPECT_EQ(k.rows(), 5 - rank(c));
        IntMatrix prod = c * k.transpose();
        for (const auto& x : prod.data()) EXPECT_EQ(x, 0);
        if (k.rows() > 0) EXPECT_TRUE(is_saturated(k));
    }
}

TEST(Saturation, ContainsOriginalAndIsSaturated) {
    IntMatrix a(2, 3);
    a(0, 0) = 2; a(0, 1) = 4; a(0, 2) = 6;
    a(1, 0) = 0; a(1, 1) = 3; a(1, 2) = 3;
    EXPECT_FALSE(is_saturated(a));
    IntMatrix s = saturation(a);
    EXPECT_TRUE(is_saturated(s));
    EXPECT_TRUE(in_row_lattice(s, a.row(0)));
    IntVector half{1, 2, 3};
    EXPECT_TRUE(in_row_lattice(s, half));
}

TEST(Nullspace, RationalDimension) {
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        RatMatrix a = to_rational(random_matrix(rng, 3, 6, -4, 4));
        RatMatrix n = nullspace(a);
        EXPECT_EQ(n.rows() + rank(a), 6u);
        RatMatrix prod = a * n.transpose();
        for (const auto& x : prod.data()) EXPECT_EQ(x, 0);
    }
}

TEST(PrimitiveVector, ClearsDenominators) {
    RatVector v{ratio(1, 2), ratio(-1, 3), Rational(0)};
    EXPECT_EQ(primitive_integer_vector(v), (IntVector{3, -2, 0}));
}

TEST(ModP, KernelAndRref) {
    std::mt19937 rng(9);
    for (long p : {2l, 3l, 7l}) {
        for (int t = 0; t < 20; ++t) {
            ModPMatrix a(3, std::vector<long>(5));
            for (auto& row : a)
                for (auto& x : row) x = static_cast<long>(rng() % p);
            ModPMatrix r = rref_mod_p(a, p);
            ModPMatrix k = kernel_mod_p(a, p);
            EXPECT_EQ(r.size() + k.size(), 5u);
            for (const auto& v : k)
                for (const auto& row : a) {
                    long s = 0;
                    for (size_t j = 0; j < 5; ++j) s += row[j] * v[j];
                    EXPECT_EQ(mod_p(s, p), 0);
                }
        }
        for (long x = 1; x < p; ++x) EXPECT_EQ(mod_p(x * inverse_mod(x, p), p), 1);
    }
}
