#pragma once

#include "quatcong/linalg.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace quatcong {

// B = (a, b / Q) with basis 1, i, j, k = ij; i^2 = a, j^2 = b, ij = -ji.
struct QuaternionAlgebra {
    long a = -1;
    long b = -1;
    long discriminant = 2;
    std::vector<long> ramified_primes;  // finite ones, ascending
};

struct QuatElement {
    std::array<Rational, 4> c{};

    QuatElement() = default;
    QuatElement(Rational x0, Rational x1, Rational x2, Rational x3) : c{x0, x1, x2, x3} {}
    static QuatElement scalar(const Rational& s) { return QuatElement(s, 0, 0, 0); }

    QuatElement operator+(const QuatElement& o) const;
    QuatElement operator-(const QuatElement& o) const;
    QuatElement operator*(const Rational& s) const;
    QuatElement operator/(const Rational& s) const;
    bool operator==(const QuatElement& o) const = default;
    bool is_zero() const;
};

QuatElement mul(const QuaternionAlgebra& alg, const QuatElement& x, const QuatElement& y);
QuatElement conj(const QuatElement& x);
Rational nrd(const QuaternionAlgebra& alg, const QuatElement& x);
Rational trd(const QuatElement& x);
QuatElement inverse(const QuaternionAlgebra& alg, const QuatElement& x);

QuaternionAlgebra build_algebra(long n);
std::vector<long> ramified_places(long a, long b);  // finite primes, ascending

// A full-rank lattice in B, stored canonically as (1/den) * rows of an
// integer matrix in Hermite normal form with den minimal.
class OrderLattice {
public:
    OrderLattice() = default;
    static OrderLattice from_generators(const std::vector<QuatElement>& gens);
    static OrderLattice from_parts(IntMatrix num, Integer den);  // re-canonicalizes

    const IntMatrix& numerators() const { return num_; }
    const Integer& denominator() const { return den_; }
    QuatElement basis(size_t i) const;
    std::vector<QuatElement> basis() const;

    std::optional<IntVector> coordinates(const QuatElement& x) const;
    bool contains(const QuatElement& x) const { return coordinates(x).has_value(); }
    bool contains(const OrderLattice& o) const;
    Rational covolume() const;  // |det| of the basis in the 1, i, j, k coordinates

    OrderLattice scaled(const Rational& s) const;
    bool operator==(const OrderLattice& o) const { return den_ == o.den_ && num_ == o.num_; }
    bool operator<(const OrderLattice& o) const;
    std::string key() const;  // canonical text form

private:
    IntMatrix num_;
    Integer den_{1};
};

OrderLattice standard_order(const QuaternionAlgebra& alg);  // Z<1, i, j, ij>
OrderLattice product(const QuaternionAlgebra& alg, const OrderLattice& x, const OrderLattice& y);
OrderLattice conjugate(const OrderLattice& x);
OrderLattice left_multiply(const QuaternionAlgebra& alg, const QuatElement& g, const OrderLattice& x);

RatMatrix gram(const QuaternionAlgebra& alg, const OrderLattice& l);  // trd(e_i conj(e_j))
// Gram of nrd/scale; must be integral (throws otherwise). Q(x) = x^T G x / 2.
IntMatrix normalized_gram(const QuaternionAlgebra& alg, const OrderLattice& l, const Rational& scale);

Rational lattice_nrd(const QuaternionAlgebra& alg, const OrderLattice& l);
bool is_order(const QuaternionAlgebra& alg, const OrderLattice& l);
Integer reduced_discriminant(const QuaternionAlgebra& alg, const OrderLattice& order);

OrderLattice left_order(const QuaternionAlgebra& alg, const OrderLattice& ideal);
OrderLattice right_order(const QuaternionAlgebra& alg, const OrderLattice& ideal);

OrderLattice maximal_order(const QuaternionAlgebra& alg);
std::vector<QuatElement> unit_group(const QuaternionAlgebra& alg, const OrderLattice& order);

struct TwoSidedPrime {
    long prime = 0;
    OrderLattice lattice;
};

TwoSidedPrime two_sided_prime(const QuaternionAlgebra& alg, const OrderLattice& order, long p);

std::string to_string(const QuatElement& x);

}  // namespace quatcong
