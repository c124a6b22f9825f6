#include "quatcong/algebra.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace quatcong;

namespace {

QuatElement random_element(std::mt19937& rng) {
    std::uniform_int_distribution<long> d(-5, 5), den(1, 3);
    return QuatElement(ratio(d(rng), den(rng)), ratio(d(rng), den(rng)), ratio(d(rng), den(rng)), ratio(d(rng), den(rng)));
}

}  // namespace

TEST(Quaternion, RingAxiomsAndNorms) {
    std::mt19937 rng(21);
    for (long n : {2l, 11l, 30l}) {
        QuaternionAlgebra alg = build_algebra(n);
        for (int t = 0; t < 50; ++t) {
            QuatElement x = random_element(rng), y = random_element(rng), z = random_element(rng);
            EXPECT_EQ(mul(alg, mul(alg, x, y), z), mul(alg, x, mul(alg, y, z)));
            EXPECT_EQ(nrd(alg, mul(alg, x, y)), nrd(alg, x) * nrd(alg, y));
            EXPECT_EQ(conj(mul(alg, x, y)), mul(alg, conj(y), conj(x)));
            EXPECT_EQ(mul(alg, x, conj(x)), QuatElement::scalar(nrd(alg, x)));
            EXPECT_EQ(trd(x + conj(x)), 2 * trd(x));
            if (!x.is_zero()) EXPECT_EQ(mul(alg, x, inverse(alg, x)), QuatElement::scalar(1));
            if (!x.is_zero()) EXPECT_GT(nrd(alg, x), 0);  // definite
        }
    }
}

TEST(BuildAlgebra, RamificationExamples) {
    EXPECT_EQ(build_algebra(2).ramified_primes, (std::vector<long>{2}));
    EXPECT_EQ(build_algebra(11).ramified_primes, (std::vector<long>{11}));
    EXPECT_EQ(build_algebra(30).ramified_primes, (std::vector<long>{2, 3, 5}));
    for (long n = 2; n <= 400; ++n) {
        if (!is_admissible_level(n)) continue;
        QuaternionAlgebra alg = build_algebra(n);
        EXPECT_LT(alg.a, 0);
        EXPECT_LT(alg.b, 0);
        int prod = hilbert_symbol(alg.a, alg.b, -1);
        EXPECT_EQ(prod, -1);
        std::vector<long> ram;
        for (long p : primes_up_to(2 * std::abs(alg.a * alg.b) + 2)) {
            int h = hilbert_symbol(alg.a, alg.b, p);
            prod *= h;
            if (h == -1) ram.push_back(p);
        }
        EXPECT_EQ(prod, 1) << n;
        EXPECT_EQ(ram, prime_factors(n)) << n;
    }
}

TEST(MaximalOrder, DiscriminantAndUnits) {
    for (long n = 2; n <= 120; ++n) {
        if (!is_admissible_level(n)) continue;
        QuaternionAlgebra alg = build_algebra(n);
        OrderLattice o = maximal_order(alg);
        EXPECT_TRUE(is_order(alg, o)) << n;
        EXPECT_EQ(reduced_discriminant(alg, o), n) << n;
        EXPECT_TRUE(o.contains(QuatElement::scalar(1)));
    }
    auto units = [](long n) {
        auto alg = build_algebra(n);
        return unit_group(alg, maximal_order(alg)).size();
    };
    EXPECT_EQ(units(2), 24u);
    EXPECT_EQ(units(3), 12u);
    EXPECT_EQ(units(5), 6u);
}

TEST(TwoSidedPrime, SquaresToP) {
    for (long n : {2l, 11l, 30l, 42l, 105l}) {
        QuaternionAlgebra alg = build_algebra(n);
        OrderLattice o = maximal_order(alg);
        for (long p : prime_factors(n)) {
            TwoSidedPrime pp = two_sided_prime(alg, o, p);
            EXPECT_EQ(product(alg, pp.lattice, pp.lattice), o.scaled(Rational(p)));
            EXPECT_EQ(pp.lattice.covolume(), o.covolume() * p * p);
            EXPECT_EQ(lattice_nrd(alg, pp.lattice), Rational(p));
        }
    }
}

TEST(OrderLattice, CanonicalForm) {
    QuaternionAlgebra alg = build_algebra(11);
    OrderLattice o = maximal_order(alg);
    auto b = o.basis();
    std::vector<QuatElement> shuffled{b[2] + b[0], b[1], b[0], b[3] - b[1]};
    EXPECT_EQ(OrderLattice::from_generators(shuffled), o);
    EXPECT_EQ(left_order(alg, o), o);
    EXPECT_EQ(right_order(alg, o), o);
    EXPECT_EQ(conjugate(o), o);
}
