#include "quatcong/quadform.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

using namespace quatcong;

namespace {

long q_of(const IntMatrix& g, const std::vector<long>& x) {
    Integer s(0);
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) s += g(i, j) * x[i] * x[j];
    return Integer(s / 2).get_si();
}

IntMatrix random_even_gram(std::mt19937& rng, size_t n) {
    // B^T B scaled by 2 with a unimodular-ish random B.
    std::uniform_int_distribution<long> d(-2, 2);
    IntMatrix b(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) b(i, j) = (i == j) ? static_cast<long>(1 + rng() % 2) : d(rng);
    IntMatrix g = b.transpose() * b;
    for (auto i = 0u; i < n; ++i)
        for (auto j = 0u; j < n; ++j) g(i, j) *= 2;
    return g;
}

long sigma(long n) {
    long s = 0;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) s += d;
    return s;
}

}  // namespace

TEST(ShortVectors, MatchesBoxEnumeration) {
    std::mt19937 rng(12);
    for (int t = 0; t < 15; ++t) {
        const size_t n = 3 + t % 2;
        IntMatrix g = random_even_gram(rng, n);
        if (rank(g) != n) continue;
        const long bound = 12;
        std::map<std::vector<long>, long> found;
        for_each_short_vector(g, bound, [&](const std::vector<long>& x, long q) {
            found[x] = q;
            return true;
        });
        // |x_i|^2 <= 2 Q(x) (G^-1)_ii gives an exact search box.
        std::vector<long> r(n);
        for (size_t i = 0; i < n; ++i) {
            RatVector e(n, Rational(0));
            e[i] = 1;
            auto row = solve_in_row_span(to_rational(g), e);
            ASSERT_TRUE(row.has_value());
            Rational lim = 2 * bound * (*row)[i];
            r[i] = isqrt(floor_of(lim).get_si()) + 1;
        }
        std::map<std::vector<long>, long> brute;
        std::vector<long> x(n);
        for (size_t i = 0; i < n; ++i) x[i] = -r[i];
        while (true) {
            bool zero = true;
            for (long v : x) zero = zero && v == 0;
            long q = q_of(g, x);
            if (!zero && q <= bound) brute[x] = q;
            size_t i = 0;
            while (i < n && x[i] == r[i]) {
                x[i] = -r[i];
                ++i;
            }
            if (i == n) break;
            ++x[i];
        }
        EXPECT_EQ(found, brute);
    }
}

TEST(ThetaSeries, SumOfFourSquaresJacobi) {
    IntMatrix g = IntMatrix::identity(4);
    for (size_t i = 0; i < 4; ++i) g(i, i) = 2;
    auto th = theta_series(g, 30);
    EXPECT_EQ(th[0], 1);
    for (long n = 1; n <= 30; ++n) {
        long expect = 8 * sigma(n) - (n % 4 == 0 ? 32 * sigma(n / 4) : 0);
        EXPECT_EQ(th[n], expect) << n;
    }
}

TEST(Lll, UnimodularAndConsistent) {
    std::mt19937 rng(6);
    for (int t = 0; t < 20; ++t) {
        IntMatrix g = random_even_gram(rng, 4);
        if (rank(g) != 4) continue;
        auto r = lll_gram(g);
        EXPECT_EQ(r.transform * g * r.transform.transpose(), r.gram);
        RatMatrix tr = to_rational(r.transform);
        EXPECT_EQ(rank(r.transform), 4u);
        // |det| = 1 via the Gram determinants matching.
        EXPECT_EQ(theta_series(g, 10), theta_series(r.gram, 10));
    }
}

TEST(VectorsOfValue, SortedAndExact) {
    IntMatrix g(2, 2);
    g(0, 0) = 2; g(0, 1) = 1; g(1, 0) = 1; g(1, 1) = 2;  // hexagonal
    auto v = vectors_of_value(g, 1);
    EXPECT_EQ(v.size(), 6u);
    EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
    auto m = minimal_vector(g);
    EXPECT_EQ(m.first, 1);
    EXPECT_FALSE(find_vector_of_value(g, 2).has_value());
    EXPECT_TRUE(find_vector_of_value(g, 3).has_value());
}
