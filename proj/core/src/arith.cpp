#include "quatcong/arith.hpp"

#include <cmath>
#include <numeric>

namespace quatcong {

std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view s) {
    auto slash = s.find('/');
    Integer num, den(1);
    try {
        if (slash == std::string_view::npos) {
            num = Integer(std::string(s));
        } else {
            num = Integer(std::string(s.substr(0, slash)));
            den = Integer(std::string(s.substr(slash + 1)));
        }
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: " + std::string(s));
    }
    if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
    return make_rational(num, den);
}

Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_of(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

int kronecker(long a, long b) {
    static const int tab[8] = {0, 1, 0, -1, 0, -1, 0, 1};
    if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a & 1) == 0 && (b & 1) == 0) return 0;
    int v = 0;
    while ((b & 1) == 0) {
        ++v;
        b /= 2;
    }
    int k = (v % 2 == 0) ? 1 : tab[a & 7];
    if (b < 0) {
        b = -b;
        if (a < 0) k = -k;
    }
    // b is odd and positive from here on
    a %= b;
    if (a < 0) a += b;
    while (a != 0) {
        v = 0;
        while ((a & 1) == 0) {
            ++v;
            a /= 2;
        }
        if (v % 2 == 1) k *= tab[b & 7];
        if (a & b & 2) k = -k;
        long r = a;
        a = b % r;
        b = r;
    }
    return b == 1 ? k : 0;
}

namespace {

// u is a unit at 2 (odd)
int eps2(long u) { return static_cast<int>((((u % 8) + 8) % 8 - 1) / 2 % 2); }
int omega2(long u) {
    long r = ((u % 8) + 8) % 8;
    return (r == 3 || r == 5) ? 1 : 0;
}

}  // namespace

int hilbert_symbol(long a, long b, long p) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol: zero argument");
    if (p == -1) return (a < 0 && b < 0) ? -1 : 1;
    int alpha = 0, beta = 0;
    long u = a, v = b;
    while (u % p == 0) {
        u /= p;
        ++alpha;
    }
    while (v % p == 0) {
        v /= p;
        ++beta;
    }
    if (p == 2) {
        int e = eps2(u) * eps2(v) + alpha * omega2(v) + beta * omega2(u);
        return (e % 2 == 0) ? 1 : -1;
    }
    int s = 1;
    if ((alpha * beta) % 2 == 1 && ((p - 1) / 2) % 2 == 1) s = -s;
    if (beta % 2 == 1) s *= kronecker(u, p);
    if (alpha % 2 == 1) s *= kronecker(v, p);
    return s;
}

long class_number_imag_quadratic(long m) {
    if (m < 1 || !is_squarefree(m)) throw std::invalid_argument("class number: m must be squarefree and positive");
    long d = ((-m) % 4 + 4) % 4 == 1 ? -m : -4 * m;
    long absd = -d;
    long count = 0;
    for (long a = 1; 3 * a * a <= absd; ++a) {
        for (long b = -a + 1; b <= a; ++b) {
            long num = b * b - d;
            if (num % (4 * a) != 0) continue;
            long c = num / (4 * a);
            if (c < a) continue;
            if (c == a && b < 0) continue;
            if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
            ++count;
        }
    }
    return count;
}

Rational sym_power_char(long t, long n, int k) {
    if (k < 0 || k % 2 != 0) throw std::invalid_argument("sym_power_char: k must be even and nonnegative");
    if (n <= 0) throw std::invalid_argument("sym_power_char: n must be positive");
    Integer s_prev(1), s(t);
    if (k == 0) return Rational(1);
    for (int m = 2; m <= k; ++m) {
        Integer next = Integer(t) * s - Integer(n) * s_prev;
        s_prev = s;
        s = next;
    }
    Integer denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k / 2));
    return make_rational(s, denom);
}

long sym_power_char_integral(long t, long n, int k) {
    Rational r = sym_power_char(t, n, k);
    check(is_integral(r), "sym_power_char: non-integral value " + to_string(r));
    return r.get_num().get_si();
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> primes_up_to(long bound) {
    std::vector<long> out;
    if (bound < 2) return out;
    std::vector<bool> sieve(static_cast<size_t>(bound + 1), true);
    for (long i = 2; i <= bound; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (long j = i * i; j <= bound; j += i) sieve[j] = false;
    }
    return out;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    if (n < 0) n = -n;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<long> divisors(long n) {
    std::vector<long> out;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

bool is_squarefree(long n) {
    if (n < 1) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0) return false;
    return true;
}

int omega(long n) { return static_cast<int>(prime_factors(n).size()); }

int valuation(long n, long p) {
    if (n == 0) throw std::invalid_argument("valuation of zero");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

long euler_phi(long n) {
    long r = n;
    for (long p : prime_factors(n)) r = r / p * (p - 1);
    return r;
}

long dedekind_psi(long n) {
    long r = n;
    for (long p : prime_factors(n)) r = r / p * (p + 1);
    return r;
}

long isqrt(long n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative");
    long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

long lcm_ll(long a, long b) { return a / std::gcd(a, b) * b; }

bool is_admissible_level(long n) { return n >= 2 && is_squarefree(n) && omega(n) % 2 == 1; }

void require_admissible_level(long n) {
    if (!is_admissible_level(n))
        throw std::invalid_argument("level " + std::to_string(n) +
                                    " must be squarefree with an odd number of prime factors");
}

}  // namespace quatcong
