#include "quatcong/weights.hpp"

#include "quatcong/quadform.hpp"

#include <stdexcept>

namespace quatcong {

namespace {

void require_weight(int k) {
    if (k < 0 || k % 2 != 0) throw std::invalid_argument("weight k must be even and nonnegative");
}

}  // namespace

WeightData::WeightData(int weight) : k(weight) { require_weight(weight); }

long invariant_dim(const std::vector<QuatElement>& units, int k) {
    require_weight(k);
    if (units.empty()) throw std::invalid_argument("invariant_dim: empty group");
    Rational s(0);
    for (const auto& g : units) {
        Rational t = trd(g);
        check(is_integral(t), "invariant_dim: non-integral trace");
        s += sym_power_char(t.get_num().get_si(), 1, k);
    }
    s /= static_cast<long>(units.size());
    check(is_integral(s) && s >= 0, "invariant_dim: non-integral average " + to_string(s));
    return s.get_num().get_si();
}

long dim_Mk(const ClassSet& cs, int k) {
    long d = 0;
    for (const auto& c : cs.classes) d += invariant_dim(c.units, k);
    return d;
}

GammaSigmaElement gamma_sigma_element(const ClassSet& cs, size_t i, long p, const Involution& sigma) {
    if (sigma.prime != p) throw std::invalid_argument("gamma_sigma_element: involution for the wrong prime");
    const auto& alg = cs.algebra;
    const size_t j = sigma.permutation.at(i);
    const auto& ci = cs.classes[i];
    const auto& cj = cs.classes[j];
    TwoSidedPrime pp = two_sided_prime(alg, cs.order, p);
    OrderLattice ip = product(alg, ci.representative, pp.lattice);
    OrderLattice l = product(alg, ip, conjugate(cj.representative));
    Rational scale = ci.nrd_ideal * cj.nrd_ideal * p;
    auto x = find_vector_of_value(normalized_gram(alg, l, scale), 1);
    if (!x) throw InternalError("gamma_sigma_element: no element of the expected norm");
    auto b = l.basis();
    QuatElement xi;
    for (size_t t = 0; t < 4; ++t) xi = xi + b[t] * Rational((*x)[t]);
    xi = xi / cj.nrd_ideal;
    check(left_multiply(alg, xi, cj.representative) == ip, "gamma_sigma_element: xi I_j != I_i P");
    check(nrd(alg, xi) == ci.nrd_ideal * p / cj.nrd_ideal, "gamma_sigma_element: wrong norm");
    if (i == j) {
        QuatElement u = mul(alg, xi, xi) / Rational(p);
        check(nrd(alg, u) == 1 && ci.left_order.contains(u), "gamma_sigma_element: xi^2 / p is not a unit");
    }
    return {i, j, p, xi};
}

GammaSigmaElement gamma_sigma_element(const ClassSet& cs, size_t i, long p) {
    return gamma_sigma_element(cs, i, p, ramified_involution(cs, p));
}

Rational twisted_invariant_trace(const ClassSet& cs, const GammaSigmaElement& g, int k) {
    require_weight(k);
    const auto& alg = cs.algebra;
    const auto& units = cs.classes[g.class_index].units;
    Rational s(0);
    for (const auto& u : units) {
        QuatElement y = mul(alg, g.element, u);
        Rational t = trd(y), n = nrd(alg, y);
        check(is_integral(t) && is_integral(n), "twisted_invariant_trace: non-integral element");
        s += sym_power_char(t.get_num().get_si(), n.get_num().get_si(), k);
    }
    return s / static_cast<long>(units.size());
}

long dim_Mk_chi_single(const ClassSet& cs, const Involution& sigma, int k, SignValue sign) {
    require_weight(k);
    long total = 0;
    for (size_t i = 0; i < cs.size(); ++i) {
        size_t j = sigma.permutation[i];
        if (j < i) continue;
        long d = invariant_dim(cs.classes[i].units, k);
        if (j != i) {
            total += d;
            continue;
        }
        Rational tr = twisted_invariant_trace(cs, gamma_sigma_element(cs, i, sigma.prime, sigma), k);
        Rational half = (Rational(d) + sign.value() * tr) / 2;
        check(is_integral(half) && half >= 0, "dim_Mk_chi_single: non-integral dimension " + to_string(half));
        total += half.get_num().get_si();
    }
    return total;
}

long dim_Mk_chi_single(const ClassSet& cs, int k, long p, SignValue sign) {
    return dim_Mk_chi_single(cs, ramified_involution(cs, p), k, sign);
}

std::optional<long> dim_Mk_chi(const ClassSet& cs, const std::vector<Involution>& involutions, int k,
                               const SignPattern& chi) {
    require_weight(k);
    SClassNumbers counts = sclass_numbers(cs, involutions, chi.modulus);
    for (const auto& [pattern, count] : counts.admissible_counts)
        if (count != counts.h_bs) return std::nullopt;
    SIdealClassSet comps = components(build_graph(cs, involutions, chi));
    long total = 0;
    for (const auto& c : comps.components) total += invariant_dim(cs.classes[c.front()].units, k);
    return total;
}

long b_constant(long p, long n_prime) {
    const bool odd = n_prime % 2 != 0;
    switch (mod_p(p, 8)) {
        case 1:
        case 2:
        case 5:
        case 6:
            return odd ? 1 : -1;
        case 3:
            return odd ? 4 : -2;
        case 7:
            return odd ? 2 : 0;
        default:
            throw std::invalid_argument("b_constant: p must not be divisible by 4");
    }
}

long trace_Wp_formula(long p, long n) {
    require_admissible_level(n);
    if (!is_prime(p) || n % p != 0) throw std::invalid_argument("trace_Wp_formula: p must be a prime dividing N");
    const long np = n / p;
    long odd = np;
    while (odd % 2 == 0) odd /= 2;
    auto product = [&](long d, long m) {
        Integer r(1);
        for (long q : prime_factors(m)) r *= kronecker(d, q) - 1;
        return r;
    };
    Rational t;
    if (p > 3) {
        Integer prod = product(-p, odd);
        t = Rational(1) - Rational(class_number_imag_quadratic(p) * b_constant(p, np) * prod) / 2;
    } else if (p == 3) {
        long sign = valuation(np, 2) % 2 == 0 ? 1 : -1;
        t = Rational(1) - Rational(sign * product(-3, odd));
    } else {
        t = Rational(1) - Rational(product(-2, np) + product(-1, np)) / 2;
    }
    check(is_integral(t), "trace_Wp_formula: non-integral value");
    return t.get_num().get_si();
}

bool fixedpoint_free_criteria(long p, long n) {
    require_admissible_level(n);
    if (!is_prime(p) || n % p != 0) throw std::invalid_argument("fixedpoint_free_criteria: p must be a prime dividing N");
    auto primes = prime_factors(n);
    if (p > 2) {
        for (long q : primes)
            if (q != 2 && kronecker(-p, q) == 1) return true;
        return n % 2 == 0 && p % 8 == 7;
    }
    bool one_mod_4 = false, minus_two_square = false;
    for (long q : primes) {
        if (q % 4 == 1) one_mod_4 = true;
        if (kronecker(-2, q) == 1) minus_two_square = true;
    }
    return one_mod_4 && minus_two_square;
}

bool equidist_criteria(long m, long n) {
    require_admissible_level(n);
    if (m < 1 || n % m != 0) throw std::invalid_argument("equidist_criteria: M must divide N");
    if (is_prime(m) && m % 8 == 7 && n % 2 == 0) return true;
    const long rest = n / m;
    auto rest_primes = prime_factors(rest);
    for (long d : divisors(m)) {
        if (d == 1) continue;
        bool found = false;
        for (long q : rest_primes)
            if (q != 2 && kronecker(-d, q) == 1) found = true;
        if (!found) return false;
    }
    if (m % 2 == 0) {
        bool one_mod_4 = false;
        for (long q : rest_primes)
            if (q % 4 == 1) one_mod_4 = true;
        if (!one_mod_4) return false;
    }
    return true;
}

long dim_Sk_oracle(long n, int k) {
    if (n < 1 || !is_squarefree(n)) throw std::invalid_argument("dim_Sk_oracle: N must be squarefree");
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("dim_Sk_oracle: weight must be even and >= 2");
    long mu = dedekind_psi(n);
    long nu2 = 1, nu3 = 1;
    for (long p : prime_factors(n)) {
        nu2 *= 1 + kronecker(-4, p);
        nu3 *= 1 + kronecker(-3, p);
    }
    long cusps = 1l << omega(n);
    Rational d = ratio((k - 1) * mu, 12) + (Rational(k / 4) - ratio(k - 1, 4)) * nu2 +
                 (Rational(k / 3) - ratio(k - 1, 3)) * nu3 - ratio(cusps, 2) + (k == 2 ? 1 : 0);
    check(is_integral(d) && d >= 0, "dim_Sk_oracle: non-integral dimension");
    return d.get_num().get_si();
}

long dim_Sk_new_oracle(long n, int k) {
    long total = 0;
    for (long d : divisors(n)) {
        long w = omega(n / d);
        long coeff = (w % 2 == 0 ? 1 : -1) * (1l << w);
        total += coeff * dim_Sk_oracle(d, k);
    }
    check(total >= 0, "dim_Sk_new_oracle: negative dimension");
    return total;
}

}  // namespace quatcong
