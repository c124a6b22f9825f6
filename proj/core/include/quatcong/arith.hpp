#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace quatcong {

static_assert(sizeof(long) == 8, "64-bit long required");

using Integer = mpz_class;
using Rational = mpq_class;

// Thrown when an internal consistency check fails. These indicate bugs or
// violated theory, never bad user input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void check(bool cond, const std::string& what) {
    if (!cond) throw InternalError(what);
}

class SignValue {
public:
    constexpr SignValue() = default;
    explicit SignValue(int v) : v_(v) {
        if (v != 1 && v != -1) throw std::invalid_argument("sign must be +1 or -1");
    }
    static SignValue plus() { return SignValue(1); }
    static SignValue minus() { return SignValue(-1); }

    int value() const { return v_; }
    bool is_plus() const { return v_ == 1; }
    SignValue operator-() const { return SignValue(-v_); }
    SignValue operator*(SignValue o) const { return SignValue(v_ * o.v_); }
    bool operator==(const SignValue&) const = default;
    char symbol() const { return v_ > 0 ? '+' : '-'; }

private:
    int v_ = 1;
};

// "num/den" in lowest terms; integers still carry "/1" so the format is uniform.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view s);
Rational make_rational(const Integer& num, const Integer& den);
inline Rational ratio(long num, long den) { return make_rational(Integer(num), Integer(den)); }

bool is_integral(const Rational& q);
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

int kronecker(long a, long n);
int hilbert_symbol(long a, long b, long p);  // p prime, or p = -1 for the real place

long class_number_imag_quadratic(long m);

Rational sym_power_char(long t, long n, int k);
long sym_power_char_integral(long t, long n, int k);

bool is_prime(long n);
std::vector<long> primes_up_to(long bound);
std::vector<long> prime_factors(long n);  // distinct, ascending
std::vector<long> divisors(long n);        // ascending
bool is_squarefree(long n);
int omega(long n);
int valuation(long n, long p);
long euler_phi(long n);
long dedekind_psi(long n);
long isqrt(long n);
long lcm_ll(long a, long b);

// Levels handled by the library: squarefree with an odd number of prime factors.
bool is_admissible_level(long n);
void require_admissible_level(long n);

}  // namespace quatcong
