#include "serialize.hpp"

#include <stdexcept>

namespace quatcong::cli {

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) { return parse_rational(j.get<std::string>()); }

json to_json(const QuatElement& x) {
    json out = json::array();
    for (const auto& c : x.c) out.push_back(to_json(c));
    return out;
}

QuatElement element_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw std::invalid_argument("quaternion: expected 4 coordinates");
    QuatElement x;
    for (size_t i = 0; i < 4; ++i) x.c[i] = rational_from_json(j[i]);
    return x;
}

json basis_to_json(const OrderLattice& l) {
    json out = json::array();
    for (const auto& b : l.basis())
        for (const auto& c : b.c) out.push_back(to_json(c));
    return out;
}

OrderLattice lattice_from_json(const QuaternionAlgebra&, const json& j) {
    if (!j.is_array() || j.size() != 16) throw std::invalid_argument("lattice: expected 16 rationals");
    std::vector<QuatElement> gens(4);
    for (size_t i = 0; i < 16; ++i) gens[i / 4].c[i % 4] = rational_from_json(j[i]);
    return OrderLattice::from_generators(gens);
}

json to_json(const CongruenceReport& r) {
    json w = json::array();
    for (const auto& x : r.witnesses) w.push_back({{"kind", x.kind}, {"detail", x.detail}, {"values", x.values}});
    return {{"level", r.level},
            {"modulus", r.modulus},
            {"statement", to_string(r.statement)},
            {"hypothesis_ok", r.hypothesis_ok},
            {"verified", r.verified},
            {"checks", r.checks},
            {"witnesses", w},
            {"notes", r.notes}};
}

json to_json(const LongMatrix& m) {
    json out = json::array();
    for (size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
    return out;
}

LongMatrix long_matrix_from_json(const json& j) {
    const size_t n = j.size();
    LongMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) {
        if (j[i].size() != n) throw std::invalid_argument("matrix: not square");
        for (size_t k = 0; k < n; ++k) m(i, k) = j[i][k].get<long>();
    }
    return m;
}

json to_json(const SignedEdge& e) {
    return {{"u", e.u}, {"v", e.v}, {"sign", std::string(1, e.sign.symbol())}, {"prime", e.prime}};
}

json classset_summary(const ClassSet& cs) {
    json classes = json::array();
    for (const auto& c : cs.classes)
        classes.push_back({{"unit_group_order", c.unit_group_order},
                           {"nrd", to_json(c.nrd_ideal)},
                           {"theta", c.theta},
                           {"key", c.representative.key()}});
    return {{"level", cs.level()},
            {"algebra", {{"a", cs.algebra.a}, {"b", cs.algebra.b}}},
            {"class_number", cs.size()},
            {"mass", to_json(cs.mass)},
            {"unit_orders", [&] {
                 std::vector<long> u;
                 for (const auto& c : cs.classes) u.push_back(c.unit_group_order);
                 return u;
             }()},
            {"classes", classes}};
}

}  // namespace quatcong::cli
