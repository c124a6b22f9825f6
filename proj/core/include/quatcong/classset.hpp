#pragma once

#include "quatcong/algebra.hpp"

#include <optional>
#include <vector>

namespace quatcong {

constexpr long kThetaKeyLength = 20;

struct RightIdealClass {
    OrderLattice representative;  // integral right O-ideal
    Rational nrd_ideal;
    OrderLattice left_order;
    long unit_group_order = 0;
    std::vector<QuatElement> units;  // unit group of the left order
    std::vector<long> theta;         // theta[0..20] of the left order's norm form

    // (|Gamma|, theta prefix); ties are broken by discovery order.
    bool key_less(const RightIdealClass& o) const;
    bool same_key(const RightIdealClass& o) const;
};

struct ClassSet {
    QuaternionAlgebra algebra;
    OrderLattice order;
    std::vector<RightIdealClass> classes;
    Rational mass;
    long bfs_prime = 0;

    size_t size() const { return classes.size(); }
    long level() const { return algebra.discriminant; }
};

// Left order, unit group and theta key of a right ideal.
RightIdealClass describe_ideal(const QuaternionAlgebra& alg, const OrderLattice& ideal);

// The p + 1 right O-ideals J of index p^2 in I, ordered by the point of the
// projective line they correspond to.
std::vector<OrderLattice> neighbors(const QuaternionAlgebra& alg, const OrderLattice& order,
                                    const OrderLattice& ideal, long p);

bool same_class(const QuaternionAlgebra& alg, const OrderLattice& i, const OrderLattice& j);

// Left-multiplies the ideal into an integral representative of small norm.
OrderLattice reduce_ideal(const QuaternionAlgebra& alg, const OrderLattice& ideal);

ClassSet class_set(const QuaternionAlgebra& alg, const OrderLattice& order);
ClassSet class_set(const QuaternionAlgebra& alg);

Rational mass(const ClassSet& cs);
Rational expected_mass(long level);  // phi(N)/12

// Index of the class of a right O-ideal. The key is recomputed unless given.
size_t class_index(const ClassSet& cs, const OrderLattice& ideal, const RightIdealClass* described = nullptr);

}  // namespace quatcong
