#include "quatcong/classset.hpp"

#include "quatcong/quadform.hpp"

#include <algorithm>
#include <deque>

namespace quatcong {

bool RightIdealClass::key_less(const RightIdealClass& o) const {
    if (unit_group_order != o.unit_group_order) return unit_group_order < o.unit_group_order;
    return theta < o.theta;
}

bool RightIdealClass::same_key(const RightIdealClass& o) const {
    return unit_group_order == o.unit_group_order && theta == o.theta;
}

RightIdealClass describe_ideal(const QuaternionAlgebra& alg, const OrderLattice& ideal) {
    RightIdealClass c;
    c.representative = ideal;
    c.nrd_ideal = lattice_nrd(alg, ideal);
    c.left_order = left_order(alg, ideal);
    c.theta = theta_series(normalized_gram(alg, c.left_order, Rational(1)), kThetaKeyLength);
    c.units = unit_group(alg, c.left_order);
    c.unit_group_order = static_cast<long>(c.units.size());
    check(c.theta[1] == c.unit_group_order, "describe_ideal: theta and unit count disagree");
    return c;
}

namespace {

QuatElement combination(const std::vector<QuatElement>& basis, const std::vector<long>& c) {
    QuatElement x;
    for (size_t i = 0; i < basis.size(); ++i)
        if (c[i] != 0) x = x + basis[i] * Rational(c[i]);
    return x;
}

std::vector<long> coords_mod_p(const OrderLattice& l, const QuatElement& x, long p) {
    auto c = l.coordinates(x);
    check(c.has_value(), "coords_mod_p: element not in lattice");
    std::vector<long> out(4);
    for (size_t i = 0; i < 4; ++i) {
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), (*c)[i].get_mpz_t(), static_cast<unsigned long>(p));
        out[i] = r.get_si();
    }
    return out;
}

// Coordinates (in the basis of the order) of a rank-one idempotent of O/pO.
std::vector<long> split_idempotent(const QuaternionAlgebra& alg, const OrderLattice& order, long p) {
    auto e = order.basis();
    IntMatrix g = normalized_gram(alg, order, Rational(1));
    auto norm_mod = [&](const std::vector<long>& c) {
        Integer twice(0);
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j) twice += g(i, j) * c[i] * c[j];
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), Integer(twice / 2).get_mpz_t(), static_cast<unsigned long>(p));
        return r.get_si();
    };
    auto trace_mod = [&](const QuatElement& x) {
        Integer t = trd(x).get_num();
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(p));
        return r.get_si();
    };
    for (long m = 1; m <= p; ++m) {
        const long side = 2 * m + 1;
        long total = side * side * side * side;
        for (long idx = 0; idx < total; ++idx) {
            std::vector<long> c(4);
            long t = idx, mx = 0;
            for (size_t i = 0; i < 4; ++i) {
                c[i] = t % side - m;
                t /= side;
                mx = std::max(mx, std::labs(c[i]));
            }
            if (mx != m) continue;
            bool zero_mod_p = std::all_of(c.begin(), c.end(), [&](long v) { return mod_p(v, p) == 0; });
            if (zero_mod_p || norm_mod(c) != 0) continue;
            QuatElement r = combination(e, c);
            long tr = trace_mod(r);
            if (tr == 0) {
                // r is nilpotent mod p; r * e_k has invertible trace for some k
                for (size_t k = 0; k < 4 && tr == 0; ++k) {
                    QuatElement s = mul(alg, r, e[k]);
                    if (trace_mod(s) != 0) {
                        r = s;
                        tr = trace_mod(s);
                    }
                }
                if (tr == 0) continue;
            }
            auto rc = coords_mod_p(order, r, p);
            long inv = inverse_mod(tr, p);
            for (auto& v : rc) v = v * inv % p;
            // verify e^2 = e mod pO
            QuatElement idem = combination(e, rc);
            auto sq = coords_mod_p(order, mul(alg, idem, idem), p);
            check(sq == rc, "split_idempotent: not idempotent");
            return rc;
        }
    }
    throw std::invalid_argument("neighbors: O/pO is not split (p divides the discriminant?)");
}

}  // namespace

std::vector<OrderLattice> neighbors(const QuaternionAlgebra& alg, const OrderLattice& order,
                                    const OrderLattice& ideal, long p) {
    if (alg.discriminant % p == 0) throw std::invalid_argument("neighbors: p divides the discriminant");
    auto ob = order.basis();
    auto ib = ideal.basis();
    QuatElement idem = combination(ob, split_idempotent(alg, order, p));
    ModPMatrix r;
    for (const auto& f : ib) r.push_back(coords_mod_p(ideal, mul(alg, f, idem), p));
    ModPMatrix w = rref_mod_p(r, p);
    check(w.size() == 2, "neighbors: image of the idempotent is not 2-dimensional");

    Rational n_ideal = lattice_nrd(alg, ideal);
    std::vector<OrderLattice> out;
    for (long t = 0; t <= p; ++t) {
        std::vector<long> line(4);
        for (size_t i = 0; i < 4; ++i) line[i] = t < p ? mod_p(w[0][i] + t * w[1][i], p) : w[1][i];
        QuatElement x = combination(ib, line);
        ModPMatrix span;
        for (const auto& o : ob) span.push_back(coords_mod_p(ideal, mul(alg, x, o), p));
        span = rref_mod_p(span, p);
        check(span.size() == 2, "neighbors: line generates a submodule of the wrong size");
        std::vector<QuatElement> gens;
        for (const auto& f : ib) gens.push_back(f * Rational(p));
        for (const auto& row : span) gens.push_back(combination(ib, row));
        OrderLattice j = OrderLattice::from_generators(gens);
        check(j.covolume() / ideal.covolume() == Rational(p * p), "neighbors: wrong index");
        check(lattice_nrd(alg, j) == n_ideal * p, "neighbors: wrong norm");
        out.push_back(std::move(j));
    }
    return out;
}

bool same_class(const QuaternionAlgebra& alg, const OrderLattice& i, const OrderLattice& j) {
    Rational s = lattice_nrd(alg, i) * lattice_nrd(alg, j);
    OrderLattice l = product(alg, i, conjugate(j));
    return find_vector_of_value(normalized_gram(alg, l, s), 1).has_value();
}

OrderLattice reduce_ideal(const QuaternionAlgebra& alg, const OrderLattice& ideal) {
    Rational n = lattice_nrd(alg, ideal);
    auto [value, x] = minimal_vector(normalized_gram(alg, ideal, n));
    (void)value;
    auto b = ideal.basis();
    QuatElement v;
    for (size_t i = 0; i < 4; ++i) v = v + b[i] * Rational(x[i]);
    return left_multiply(alg, conj(v) / n, ideal);
}

Rational expected_mass(long level) { return ratio(euler_phi(level), 12); }

Rational mass(const ClassSet& cs) {
    Rational m(0);
    for (const auto& c : cs.classes) m += ratio(2, c.unit_group_order);
    return m;
}

size_t class_index(const ClassSet& cs, const OrderLattice& ideal, const RightIdealClass* described) {
    RightIdealClass local;
    if (!described) {
        local = describe_ideal(cs.algebra, ideal);
        described = &local;
    }
    for (size_t k = 0; k < cs.classes.size(); ++k) {
        if (!cs.classes[k].same_key(*described)) continue;
        if (same_class(cs.algebra, ideal, cs.classes[k].representative)) return k;
    }
    throw InternalError("class_index: ideal matches no class");
}

ClassSet class_set(const QuaternionAlgebra& alg, const OrderLattice& order) {
    const long n = alg.discriminant;
    long p0 = 2;
    while (!is_prime(p0) || n % p0 == 0) ++p0;

    const Rational target = expected_mass(n);
    std::vector<RightIdealClass> found;
    found.push_back(describe_ideal(alg, order));
    Rational acc = ratio(2, found[0].unit_group_order);
    std::deque<size_t> queue{0};
    while (acc < target && !queue.empty()) {
        size_t i = queue.front();
        queue.pop_front();
        for (const auto& j : neighbors(alg, order, found[i].representative, p0)) {
            RightIdealClass d = describe_ideal(alg, j);
            bool known = false;
            for (const auto& c : found)
                if (c.same_key(d) && same_class(alg, j, c.representative)) {
                    known = true;
                    break;
                }
            if (known) continue;
            OrderLattice rep = reduce_ideal(alg, j);
            d.representative = rep;
            d.nrd_ideal = lattice_nrd(alg, rep);
            d.left_order = left_order(alg, rep);
            d.units = unit_group(alg, d.left_order);
            found.push_back(std::move(d));
            queue.push_back(found.size() - 1);
            acc += ratio(2, found.back().unit_group_order);
            if (acc == target) break;
            if (acc > target) throw InternalError("class_set: mass overshoot at N = " + std::to_string(n));
        }
    }
    if (acc != target) throw InternalError("class_set: neighbor search exhausted before reaching the mass");

    std::stable_sort(found.begin(), found.end(),
                     [](const RightIdealClass& x, const RightIdealClass& y) { return x.key_less(y); });
    ClassSet cs;
    cs.algebra = alg;
    cs.order = order;
    cs.classes = std::move(found);
    cs.mass = acc;
    cs.bfs_prime = p0;
    check(mass(cs) == target, "class_set: mass formula violated");
    return cs;
}

ClassSet class_set(const QuaternionAlgebra& alg) { return class_set(alg, maximal_order(alg)); }

}  // namespace quatcong
