#pragma once

#include "quatcong/linalg.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace quatcong {

// Positive definite integral forms given by an even Gram matrix G, with
// Q(x) = x^T G x / 2. Everything here is exact.

struct LLLResult {
    IntMatrix gram;       // reduced Gram matrix
    IntMatrix transform;  // rows express the new basis in the old one
};

LLLResult lll_gram(const IntMatrix& gram);

// Calls f(x, Q(x)) for every nonzero x with Q(x) <= bound, coordinates in
// the basis of `gram`. f returns false to stop early. Returns false if
// stopped early.
bool for_each_short_vector(const IntMatrix& gram, long bound,
                           const std::function<bool(const std::vector<long>&, long)>& f);

// theta[n] = #{x : Q(x) = n} for 0 <= n <= bound.
std::vector<long> theta_series(const IntMatrix& gram, long bound);

// All x (in the original basis) with Q(x) == value, sorted lexicographically.
std::vector<IntVector> vectors_of_value(const IntMatrix& gram, long value);

// Lexicographically least vector of the given value, if any.
std::optional<IntVector> find_vector_of_value(const IntMatrix& gram, long value);

// Least nonzero value of Q and a vector attaining it (original basis).
std::pair<long, IntVector> minimal_vector(const IntMatrix& gram);

}  // namespace quatcong
