#pragma once

#include "quatcong/classset.hpp"

#include <vector>

namespace quatcong {

using LongMatrix = Matrix<long>;

// Entry (i, j) counts the p-neighbors of I_i lying in class j. Acts on
// column vectors: (T_p phi)(x_i) = sum_j B(i, j) phi(x_j).
struct BrandtMatrix {
    long prime = 0;
    long level = 0;
    LongMatrix entries;

    size_t size() const { return entries.rows(); }
    long operator()(size_t i, size_t j) const { return entries(i, j); }
};

struct Involution {
    long prime = 0;
    std::vector<size_t> permutation;
    long fixed_count = 0;

    size_t size() const { return permutation.size(); }
};

using Weight0Form = std::vector<Rational>;

long sturm_bound(long level);  // max(20, ceil(psi(N)/6))
std::vector<long> hecke_primes(long level, long bound);  // p <= bound, p not dividing N

BrandtMatrix brandt_matrix(const ClassSet& cs, long p);
// One theta computation per pair of classes, shared by all primes.
std::vector<BrandtMatrix> brandt_matrices(const ClassSet& cs, const std::vector<long>& primes);
// Independent route: enumerate the neighbors of each representative.
BrandtMatrix brandt_matrix_by_neighbors(const ClassSet& cs, long p);

Involution ramified_involution(const ClassSet& cs, long p);

std::vector<Rational> class_weights(const ClassSet& cs);  // 2/|Gamma_i|
Rational inner_product(const Weight0Form& phi, const Weight0Form& psi, const ClassSet& cs);

struct EisensteinCuspidalSplit {
    Weight0Form eisenstein;
    std::vector<Weight0Form> cuspidal_basis;  // integral, spans the orthogonal complement of 1
};
EisensteinCuspidalSplit eisenstein_cuspidal_split(const ClassSet& cs);

Weight0Form apply(const BrandtMatrix& b, const Weight0Form& phi);
Weight0Form apply(const Involution& s, const Weight0Form& phi);  // phi o sigma

LongMatrix permutation_matrix(const Involution& s);
bool commute(const LongMatrix& x, const LongMatrix& y);

}  // namespace quatcong
