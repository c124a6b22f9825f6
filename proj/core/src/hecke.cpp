#include "quatcong/hecke.hpp"

#include "quatcong/quadform.hpp"

#include <algorithm>

namespace quatcong {

long sturm_bound(long level) {
    long psi = dedekind_psi(level);
    return std::max<long>(20, (psi + 5) / 6);
}

std::vector<long> hecke_primes(long level, long bound) {
    std::vector<long> out;
    for (long p : primes_up_to(bound))
        if (level % p != 0) out.push_back(p);
    return out;
}

std::vector<BrandtMatrix> brandt_matrices(const ClassSet& cs, const std::vector<long>& primes) {
    const size_t h = cs.size();
    const long n = cs.level();
    for (long p : primes)
        if (!is_prime(p) || n % p == 0) throw std::invalid_argument("brandt_matrix: p must be a prime not dividing N");
    std::vector<BrandtMatrix> out;
    for (long p : primes) out.push_back({p, n, LongMatrix(h, h)});
    if (primes.empty()) return out;
    const long top = *std::max_element(primes.begin(), primes.end());
    const auto& alg = cs.algebra;
    for (size_t i = 0; i < h; ++i) {
        for (size_t j = i; j < h; ++j) {
            const auto& ci = cs.classes[i];
            const auto& cj = cs.classes[j];
            OrderLattice l = product(alg, ci.representative, conjugate(cj.representative));
            auto theta = theta_series(normalized_gram(alg, l, ci.nrd_ideal * cj.nrd_ideal), top);
            for (size_t k = 0; k < primes.size(); ++k) {
                long c = theta[static_cast<size_t>(primes[k])];
                check(c % cj.unit_group_order == 0 && c % ci.unit_group_order == 0,
                      "brandt_matrix: representation count not divisible by unit order");
                out[k].entries(i, j) = c / cj.unit_group_order;
                out[k].entries(j, i) = c / ci.unit_group_order;
            }
        }
    }
    for (const auto& b : out)
        for (size_t i = 0; i < h; ++i) {
            long s = 0;
            for (size_t j = 0; j < h; ++j) s += b.entries(i, j);
            check(s == b.prime + 1, "brandt_matrix: row sum is not p + 1");
        }
    return out;
}

BrandtMatrix brandt_matrix(const ClassSet& cs, long p) { return brandt_matrices(cs, {p}).front(); }

BrandtMatrix brandt_matrix_by_neighbors(const ClassSet& cs, long p) {
    const size_t h = cs.size();
    BrandtMatrix b{p, cs.level(), LongMatrix(h, h)};
    for (size_t i = 0; i < h; ++i)
        for (const auto& j : neighbors(cs.algebra, cs.order, cs.classes[i].representative, p))
            ++b.entries(i, class_index(cs, j));
    return b;
}

Involution ramified_involution(const ClassSet& cs, long p) {
    if (cs.level() % p != 0 || !is_prime(p)) throw std::invalid_argument("ramified_involution: p must be a prime dividing N");
    const auto& alg = cs.algebra;
    TwoSidedPrime pp = two_sided_prime(alg, cs.order, p);
    Involution s{p, std::vector<size_t>(cs.size()), 0};
    for (size_t i = 0; i < cs.size(); ++i) {
        OrderLattice j = product(alg, cs.classes[i].representative, pp.lattice);
        // I P has the same left order as I, hence the same key
        s.permutation[i] = class_index(cs, j, &cs.classes[i]);
    }
    for (size_t i = 0; i < cs.size(); ++i) {
        size_t k = s.permutation[i];
        check(s.permutation[k] == i, "ramified_involution: not an involution");
        check(cs.classes[k].unit_group_order == cs.classes[i].unit_group_order,
              "ramified_involution: unit orders differ along an orbit");
        if (k == i) ++s.fixed_count;
    }
    return s;
}

std::vector<Rational> class_weights(const ClassSet& cs) {
    std::vector<Rational> w;
    for (const auto& c : cs.classes) w.push_back(ratio(2, c.unit_group_order));
    return w;
}

Rational inner_product(const Weight0Form& phi, const Weight0Form& psi, const ClassSet& cs) {
    if (phi.size() != cs.size() || psi.size() != cs.size()) throw std::invalid_argument("inner_product: length mismatch");
    Rational s(0);
    for (size_t i = 0; i < cs.size(); ++i) s += ratio(2, cs.classes[i].unit_group_order) * phi[i] * psi[i];
    return s;
}

EisensteinCuspidalSplit eisenstein_cuspidal_split(const ClassSet& cs) {
    const size_t h = cs.size();
    EisensteinCuspidalSplit out;
    out.eisenstein.assign(h, Rational(1));
    IntMatrix functional(1, h);
    IntVector w = primitive_integer_vector(class_weights(cs));
    functional.set_row(0, w);
    IntMatrix k = integer_kernel(functional);
    for (size_t r = 0; r < k.rows(); ++r) {
        Weight0Form v;
        for (size_t j = 0; j < h; ++j) v.push_back(Rational(k(r, j)));
        check(inner_product(v, out.eisenstein, cs) == 0, "eisenstein_cuspidal_split: not orthogonal");
        out.cuspidal_basis.push_back(std::move(v));
    }
    return out;
}

Weight0Form apply(const BrandtMatrix& b, const Weight0Form& phi) {
    Weight0Form out(phi.size(), Rational(0));
    for (size_t i = 0; i < phi.size(); ++i)
        for (size_t j = 0; j < phi.size(); ++j)
            if (b.entries(i, j) != 0) out[i] += Rational(b.entries(i, j)) * phi[j];
    return out;
}

Weight0Form apply(const Involution& s, const Weight0Form& phi) {
    Weight0Form out(phi.size());
    for (size_t i = 0; i < phi.size(); ++i) out[i] = phi[s.permutation[i]];
    return out;
}

LongMatrix permutation_matrix(const Involution& s) {
    LongMatrix m(s.size(), s.size());
    for (size_t i = 0; i < s.size(); ++i) m(i, s.permutation[i]) = 1;
    return m;
}

bool commute(const LongMatrix& x, const LongMatrix& y) { return x * y == y * x; }

}  // namespace quatcong
