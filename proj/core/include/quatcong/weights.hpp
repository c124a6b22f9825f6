#pragma once

#include "quatcong/sgraph.hpp"

#include <optional>
#include <vector>

namespace quatcong {

// Quaternionic weight k (even, >= 0); the matching modular weight is k + 2.
struct WeightData {
    int k = 0;
    explicit WeightData(int weight);
};

long invariant_dim(const std::vector<QuatElement>& units, int k);
long dim_Mk(const ClassSet& cs, int k);

struct GammaSigmaElement {
    size_t class_index = 0;
    size_t image_index = 0;  // sigma_p(class_index)
    long prime = 0;
    QuatElement element;     // xi with I_i P_p = xi I_image
};

GammaSigmaElement gamma_sigma_element(const ClassSet& cs, size_t i, long p, const Involution& sigma);
GammaSigmaElement gamma_sigma_element(const ClassSet& cs, size_t i, long p);

// Trace of rho_k(xi) on the Gamma_i-invariants, for a fixed point i.
Rational twisted_invariant_trace(const ClassSet& cs, const GammaSigmaElement& g, int k);

long dim_Mk_chi_single(const ClassSet& cs, const Involution& sigma, int k, SignValue sign);
long dim_Mk_chi_single(const ClassSet& cs, int k, long p, SignValue sign);

// Multi-prime refined dimension. Only computed when every S-class is
// admissible for every sign pattern of the modulus at weight 0; otherwise
// nullopt ("not computed").
std::optional<long> dim_Mk_chi(const ClassSet& cs, const std::vector<Involution>& involutions, int k,
                               const SignPattern& chi);

long b_constant(long p, long n_prime);
long trace_Wp_formula(long p, long n);
bool fixedpoint_free_criteria(long p, long n);
bool equidist_criteria(long m, long n);

long dim_Sk_oracle(long n, int k_mod);      // dim S_k(Gamma_0(N)), N squarefree
long dim_Sk_new_oracle(long n, int k_mod);  // new subspace

}  // namespace quatcong
