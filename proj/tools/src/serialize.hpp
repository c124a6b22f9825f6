#pragma once

#include "quatcong/congruence.hpp"

#include <nlohmann/json.hpp>

namespace quatcong::cli {

using nlohmann::json;

json to_json(const Rational& q);  // "num/den"
Rational rational_from_json(const json& j);

json to_json(const QuatElement& x);
QuatElement element_from_json(const json& j);
json basis_to_json(const OrderLattice& l);  // 16 rationals
OrderLattice lattice_from_json(const QuaternionAlgebra& alg, const json& j);

json to_json(const CongruenceReport& r);
json to_json(const LongMatrix& m);
LongMatrix long_matrix_from_json(const json& j);
json to_json(const SignedEdge& e);

json classset_summary(const ClassSet& cs);

}  // namespace quatcong::cli
