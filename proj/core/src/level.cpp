#include "quatcong/level.hpp"

#include <stdexcept>

namespace quatcong {

const BrandtMatrix& LevelData::brandt_for(long p) const {
    for (const auto& b : brandt)
        if (b.prime == p) return b;
    throw std::out_of_range("no Brandt matrix for p = " + std::to_string(p));
}

LevelData assemble_level(ClassSet cs, long bound) {
    LevelData d;
    d.level = cs.level();
    d.bound = std::max(bound, sturm_bound(d.level));
    for (long p : prime_factors(d.level)) d.involutions.push_back(ramified_involution(cs, p));
    d.brandt = brandt_matrices(cs, hecke_primes(d.level, d.bound));
    d.classes = std::move(cs);
    return d;
}

LevelData compute_level(long n, long bound) {
    require_admissible_level(n);
    QuaternionAlgebra alg = build_algebra(n);
    OrderLattice order = maximal_order(alg);
    return assemble_level(class_set(alg, order), bound);
}

}  // namespace quatcong
