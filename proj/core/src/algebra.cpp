#include "quatcong/algebra.hpp"

#include "quatcong/quadform.hpp"

#include <algorithm>
#include <set>

namespace quatcong {

QuatElement QuatElement::operator+(const QuatElement& o) const {
    return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]};
}

QuatElement QuatElement::operator-(const QuatElement& o) const {
    return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]};
}

QuatElement QuatElement::operator*(const Rational& s) const {
    return {c[0] * s, c[1] * s, c[2] * s, c[3] * s};
}

QuatElement QuatElement::operator/(const Rational& s) const {
    return {c[0] / s, c[1] / s, c[2] / s, c[3] / s};
}

bool QuatElement::is_zero() const {
    return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0;
}

QuatElement mul(const QuaternionAlgebra& alg, const QuatElement& x, const QuatElement& y) {
    const Rational a(alg.a), b(alg.b), ab(alg.a * alg.b);
    const auto& p = x.c;
    const auto& q = y.c;
    return {p[0] * q[0] + a * p[1] * q[1] + b * p[2] * q[2] - ab * p[3] * q[3],
            p[0] * q[1] + p[1] * q[0] - b * p[2] * q[3] + b * p[3] * q[2],
            p[0] * q[2] + p[2] * q[0] + a * p[1] * q[3] - a * p[3] * q[1],
            p[0] * q[3] + p[3] * q[0] + p[1] * q[2] - p[2] * q[1]};
}

QuatElement conj(const QuatElement& x) { return {x.c[0], -x.c[1], -x.c[2], -x.c[3]}; }

Rational nrd(const QuaternionAlgebra& alg, const QuatElement& x) {
    const auto& p = x.c;
    return p[0] * p[0] - Rational(alg.a) * p[1] * p[1] - Rational(alg.b) * p[2] * p[2] +
           Rational(alg.a * alg.b) * p[3] * p[3];
}

Rational trd(const QuatElement& x) { return 2 * x.c[0]; }

QuatElement inverse(const QuaternionAlgebra& alg, const QuatElement& x) {
    Rational n = nrd(alg, x);
    if (n == 0) throw std::domain_error("inverse of zero quaternion");
    return conj(x) / n;
}

std::string to_string(const QuatElement& x) {
    return "[" + to_string(x.c[0]) + ", " + to_string(x.c[1]) + ", " + to_string(x.c[2]) + ", " +
           to_string(x.c[3]) + "]";
}

std::vector<long> ramified_places(long a, long b) {
    std::set<long> candidates{2};
    for (long p : prime_factors(a)) candidates.insert(p);
    for (long p : prime_factors(b)) candidates.insert(p);
    std::vector<long> out;
    int product = hilbert_symbol(a, b, -1);
    for (long p : candidates) {
        int s = hilbert_symbol(a, b, p);
        product *= s;
        if (s == -1) out.push_back(p);
    }
    check(product == 1, "Hilbert reciprocity failed for (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    return out;
}

QuaternionAlgebra build_algebra(long n) {
    require_admissible_level(n);
    const auto primes = prime_factors(n);
    for (long x = 1; x < 100000000; ++x) {
        bool ok = true;
        for (long p : primes)
            if (p != 2 && x % p != 0) ok = false;
        if (!ok) continue;
        for (long s = 1; s * s <= x; ++s) {
            if (x % s != 0) continue;
            long t = x / s;
            if (!is_squarefree(s) || !is_squarefree(t)) continue;
            if (ramified_places(-s, -t) == primes) return {-s, -t, n, primes};
        }
    }
    throw InternalError("build_algebra: search exhausted");
}

namespace {

Integer lcm_of_denominators(const std::vector<QuatElement>& gens) {
    Integer l(1);
    for (const auto& g : gens)
        for (const auto& x : g.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

}  // namespace

OrderLattice OrderLattice::from_parts(IntMatrix num, Integer den) {
    check(den > 0, "OrderLattice: denominator must be positive");
    IntMatrix h = hnf(num);
    if (h.rows() != 4 || h.cols() != 4) throw std::invalid_argument("OrderLattice: generators do not span a full-rank lattice");
    Integer g = den;
    for (const auto& x : h.data()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    OrderLattice l;
    if (g > 1) {
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j) h(i, j) /= g;
        den /= g;
    }
    l.num_ = std::move(h);
    l.den_ = std::move(den);
    return l;
}

OrderLattice OrderLattice::from_generators(const std::vector<QuatElement>& gens) {
    Integer d = lcm_of_denominators(gens);
    IntMatrix m(gens.size(), 4);
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = 0; j < 4; ++j) {
            Rational v = gens[i].c[j] * d;
            m(i, j) = v.get_num();
        }
    return from_parts(std::move(m), d);
}

QuatElement OrderLattice::basis(size_t i) const {
    QuatElement e;
    for (size_t j = 0; j < 4; ++j) e.c[j] = make_rational(num_(i, j), den_);
    return e;
}

std::vector<QuatElement> OrderLattice::basis() const {
    std::vector<QuatElement> out;
    for (size_t i = 0; i < 4; ++i) out.push_back(basis(i));
    return out;
}

std::optional<IntVector> OrderLattice::coordinates(const QuatElement& x) const {
    // num_ is upper triangular with positive diagonal.
    IntVector c(4);
    for (size_t j = 0; j < 4; ++j) {
        Rational t = x.c[j] * den_;
        for (size_t i = 0; i < j; ++i) t -= Rational(c[i] * num_(i, j));
        t /= num_(j, j);
        if (!is_integral(t)) return std::nullopt;
        c[j] = t.get_num();
    }
    return c;
}

bool OrderLattice::contains(const OrderLattice& o) const {
    for (size_t i = 0; i < 4; ++i)
        if (!contains(o.basis(i))) return false;
    return true;
}

Rational OrderLattice::covolume() const {
    Integer det(1);
    for (size_t i = 0; i < 4; ++i) det *= num_(i, i);
    Integer d4 = den_ * den_ * den_ * den_;
    return make_rational(det, d4);
}

OrderLattice OrderLattice::scaled(const Rational& s) const {
    if (s == 0) throw std::invalid_argument("OrderLattice::scaled by zero");
    IntMatrix m(num_);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) m(i, j) *= s.get_num();
    return from_parts(std::move(m), den_ * s.get_den());
}

bool OrderLattice::operator<(const OrderLattice& o) const {
    if (den_ != o.den_) return den_ < o.den_;
    return num_.data() < o.num_.data();
}

std::string OrderLattice::key() const {
    std::string s = den_.get_str() + ":";
    for (const auto& x : num_.data()) s += x.get_str() + ",";
    return s;
}

OrderLattice standard_order(const QuaternionAlgebra&) {
    return OrderLattice::from_parts(IntMatrix::identity(4), Integer(1));
}

OrderLattice product(const QuaternionAlgebra& alg, const OrderLattice& x, const OrderLattice& y) {
    std::vector<QuatElement> gens;
    gens.reserve(16);
    auto bx = x.basis(), by = y.basis();
    for (const auto& u : bx)
        for (const auto& v : by) gens.push_back(mul(alg, u, v));
    return OrderLattice::from_generators(gens);
}

OrderLattice conjugate(const OrderLattice& x) {
    std::vector<QuatElement> gens;
    for (const auto& e : x.basis()) gens.push_back(conj(e));
    return OrderLattice::from_generators(gens);
}

OrderLattice left_multiply(const QuaternionAlgebra& alg, const QuatElement& g, const OrderLattice& x) {
    std::vector<QuatElement> gens;
    for (const auto& e : x.basis()) gens.push_back(mul(alg, g, e));
    return OrderLattice::from_generators(gens);
}

RatMatrix gram(const QuaternionAlgebra& alg, const OrderLattice& l) {
    auto e = l.basis();
    RatMatrix g(4, 4);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i; j < 4; ++j) {
            g(i, j) = trd(mul(alg, e[i], conj(e[j])));
            g(j, i) = g(i, j);
        }
    return g;
}

IntMatrix normalized_gram(const QuaternionAlgebra& alg, const OrderLattice& l, const Rational& scale) {
    RatMatrix g = gram(alg, l);
    IntMatrix out(4, 4);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            Rational v = g(i, j) / scale;
            check(is_integral(v), "normalized_gram: non-integral entry " + to_string(v));
            out(i, j) = v.get_num();
        }
    for (size_t i = 0; i < 4; ++i) check(out(i, i) % 2 == 0, "normalized_gram: odd diagonal entry");
    return out;
}

Rational lattice_nrd(const QuaternionAlgebra& alg, const OrderLattice& l) {
    RatMatrix g = gram(alg, l);
    std::vector<Rational> vals;
    for (size_t i = 0; i < 4; ++i) {
        vals.push_back(g(i, i) / 2);
        for (size_t j = i + 1; j < 4; ++j) vals.push_back(g(i, j));
    }
    Integer den(1);
    for (const auto& v : vals) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    Integer g0(0);
    for (const auto& v : vals) {
        Rational s = v * den;
        mpz_gcd(g0.get_mpz_t(), g0.get_mpz_t(), s.get_num_mpz_t());
    }
    return make_rational(g0, den);
}

namespace {

bool integral_lattice(const QuaternionAlgebra& alg, const OrderLattice& l) {
    RatMatrix g = gram(alg, l);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j)
            if (!is_integral(g(i, j))) return false;
    for (size_t i = 0; i < 4; ++i)
        if (g(i, i).get_num() % 2 != 0) return false;
    return true;
}

// Smallest ring containing l (which must contain 1), if every element of it
// is integral.
std::optional<OrderLattice> ring_closure(const QuaternionAlgebra& alg, OrderLattice l) {
    while (true) {
        if (!integral_lattice(alg, l)) return std::nullopt;
        auto e = l.basis();
        std::vector<QuatElement> gens(e);
        for (const auto& u : e)
            for (const auto& v : e) gens.push_back(mul(alg, u, v));
        OrderLattice next = OrderLattice::from_generators(gens);
        if (next == l) return l;
        l = std::move(next);
    }
}

}  // namespace

bool is_order(const QuaternionAlgebra& alg, const OrderLattice& l) {
    if (!l.contains(QuatElement::scalar(1))) return false;
    if (!integral_lattice(alg, l)) return false;
    auto e = l.basis();
    for (const auto& u : e)
        for (const auto& v : e)
            if (!l.contains(mul(alg, u, v))) return false;
    return true;
}

Integer reduced_discriminant(const QuaternionAlgebra& alg, const OrderLattice& order) {
    RatMatrix g = gram(alg, order);
    // 4x4 determinant by cofactor-free elimination
    RatMatrix m(g);
    Rational det(1);
    for (size_t c = 0; c < 4; ++c) {
        size_t p = c;
        while (p < 4 && m(p, c) == 0) ++p;
        if (p == 4) return Integer(0);
        if (p != c) {
            m.swap_rows(p, c);
            det = -det;
        }
        det *= m(c, c);
        for (size_t i = c + 1; i < 4; ++i) {
            Rational f = m(i, c) / m(c, c);
            for (size_t j = c; j < 4; ++j) m(i, j) -= f * m(c, j);
        }
    }
    check(is_integral(det), "reduced_discriminant: lattice is not integral");
    Integer d = abs(det.get_num());
    Integer r = sqrt(d);
    check(r * r == d, "reduced_discriminant: Gram determinant is not a square");
    return r;
}

OrderLattice left_order(const QuaternionAlgebra& alg, const OrderLattice& ideal) {
    return product(alg, ideal, conjugate(ideal)).scaled(1 / lattice_nrd(alg, ideal));
}

OrderLattice right_order(const QuaternionAlgebra& alg, const OrderLattice& ideal) {
    return product(alg, conjugate(ideal), ideal).scaled(1 / lattice_nrd(alg, ideal));
}

OrderLattice maximal_order(const QuaternionAlgebra& alg) {
    OrderLattice o = standard_order(alg);
    Integer d = reduced_discriminant(alg, o);
    std::set<long> primes;
    for (long p : prime_factors(d.get_si())) primes.insert(p);
    for (long p : primes) {
        const int target = alg.discriminant % p == 0 ? 1 : 0;
        while (valuation(reduced_discriminant(alg, o).get_si(), p) > target) {
            // Look for y in O \ pO with y/p integral whose ring closure with O
            // is again an order.
            IntMatrix g = normalized_gram(alg, o, Rational(1));
            auto e = o.basis();
            std::vector<long> tr(4);
            for (size_t i = 0; i < 4; ++i) tr[i] = trd(e[i]).get_num().get_si();
            std::vector<std::vector<long>> gg(4, std::vector<long>(4));
            for (size_t i = 0; i < 4; ++i)
                for (size_t j = 0; j < 4; ++j) gg[i][j] = mod_p(g(i, j).get_si(), p * p * 2);
            bool enlarged = false;
            std::vector<long> c(4, 0);
            long total = p * p * p * p;
            for (long idx = 1; idx < total && !enlarged; ++idx) {
                long t = idx;
                for (size_t i = 0; i < 4; ++i) {
                    c[i] = t % p;
                    t /= p;
                }
                long trace = 0;
                for (size_t i = 0; i < 4; ++i) trace += c[i] * tr[i];
                if (mod_p(trace, p) != 0) continue;
                long twice_norm = 0;
                for (size_t i = 0; i < 4; ++i)
                    for (size_t j = 0; j < 4; ++j) twice_norm += c[i] * gg[i][j] * c[j];
                if (mod_p(twice_norm, 2 * p * p) != 0) continue;
                QuatElement y;
                for (size_t i = 0; i < 4; ++i) y = y + e[i] * Rational(c[i]);
                auto gens = e;
                gens.push_back(y / Rational(p));
                auto closed = ring_closure(alg, OrderLattice::from_generators(gens));
                if (!closed) continue;
                o = *closed;
                enlarged = true;
            }
            if (!enlarged) throw InternalError("maximal_order: saturation stalled at p = " + std::to_string(p));
        }
    }
    check(reduced_discriminant(alg, o) == alg.discriminant, "maximal_order: wrong discriminant");
    check(is_order(alg, o), "maximal_order: result is not an order");
    return o;
}

std::vector<QuatElement> unit_group(const QuaternionAlgebra& alg, const OrderLattice& order) {
    IntMatrix g = normalized_gram(alg, order, Rational(1));
    auto e = order.basis();
    std::vector<QuatElement> units;
    for (const auto& x : vectors_of_value(g, 1)) {
        QuatElement u;
        for (size_t i = 0; i < 4; ++i) u = u + e[i] * Rational(x[i]);
        units.push_back(u);
    }
    std::set<std::string> keys;
    for (const auto& u : units) keys.insert(to_string(u));
    check(keys.count(to_string(QuatElement::scalar(1))) && keys.count(to_string(QuatElement::scalar(-1))),
          "unit_group: missing +-1");
    for (const auto& u : units)
        for (const auto& v : units)
            check(keys.count(to_string(mul(alg, u, v))) == 1, "unit_group: not closed under multiplication");
    return units;
}

TwoSidedPrime two_sided_prime(const QuaternionAlgebra& alg, const OrderLattice& order, long p) {
    if (alg.discriminant % p != 0) throw std::invalid_argument("two_sided_prime: p must divide the discriminant");
    IntMatrix g = normalized_gram(alg, order, Rational(1));
    ModPMatrix gm(4, std::vector<long>(4));
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) gm[i][j] = mod_p(g(i, j).get_si(), p);
    ModPMatrix ker = kernel_mod_p(gm, p);
    if (ker.empty()) throw InternalError("two_sided_prime: O/pO is semisimple");
    auto e = order.basis();
    std::vector<QuatElement> gens;
    for (const auto& x : e) gens.push_back(x * Rational(p));
    for (const auto& k : ker) {
        QuatElement v;
        for (size_t i = 0; i < 4; ++i) v = v + e[i] * Rational(k[i]);
        gens.push_back(v);
    }
    OrderLattice pp = OrderLattice::from_generators(gens);
    check(product(alg, pp, pp) == order.scaled(Rational(p)), "two_sided_prime: P^2 != pO");
    check(pp.covolume() / order.covolume() == Rational(p * p), "two_sided_prime: index is not p^2");
    check(product(alg, order, pp) == pp && product(alg, pp, order) == pp, "two_sided_prime: not two-sided");
    return {p, pp};
}

}  // namespace quatcong
