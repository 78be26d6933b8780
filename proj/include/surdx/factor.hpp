#pragma once

#include <cstdint>
#include <map>

#include "surdx/rational.hpp"

namespace surdx {

inline integer isqrt_floor(const integer& n) {
    if (n < 0) throw domain_error("isqrt_floor: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const integer& n) {
    if (n < 0) return false;
    integer r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

// True iff q >= 0 and sqrt(q) is rational.
inline bool is_perfect_square(const rational& q) {
    if (q < 0) return false;
    return is_perfect_square(num(q)) && is_perfect_square(den(q));
}

// Exact rational square root of a perfect square.
inline rational sqrt_exact(const rational& q) {
    if (q < 0) throw negative_radicand();
    integer rn = isqrt_floor(num(q));
    integer rd = isqrt_floor(den(q));
    if (rn * rn != num(q) || rd * rd != den(q))
        throw domain_error("sqrt_exact: not a perfect rational square");
    return make_rational(rn, rd);
}

namespace detail {

// Deterministic Miller-Rabin for n < 3.317e24 with the first twelve prime
// bases; inputs here are desk-scale radicands, well inside that bound.
inline bool miller_rabin(const integer& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    integer d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        integer x = boost::multiprecision::powm(integer(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < r; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Floyd-cycle Pollard rho with a deterministic sequence of increments.
// Precondition: n is odd, composite and not divisible by small primes.
inline integer pollard_rho(const integer& n) {
    for (integer c = 1;; ++c) {
        integer x = 2, y = 2, d = 1;
        auto step = [&](const integer& v) { return (v * v + c) % n; };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = boost::multiprecision::gcd(x >= y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

inline void factor_recurse(integer n, std::map<integer, unsigned>& out) {
    if (n == 1) return;
    if (miller_rabin(n)) {
        ++out[n];
        return;
    }
    integer d = pollard_rho(n);
    factor_recurse(d, out);
    factor_recurse(n / d, out);
}

}  // namespace detail

inline bool is_probable_prime(const integer& n) { return detail::miller_rabin(n); }

// Prime factorization of n >= 1: trial division below 1e6, then Pollard rho.
inline std::map<integer, unsigned> factor_map(integer n) {
    if (n < 1) throw domain_error("factor_map: argument must be >= 1");
    std::map<integer, unsigned> out;
    while ((n & 1) == 0) {
        ++out[2];
        n >>= 1;
    }
    for (long long p = 3; p <= 1000000 && integer(p) * p <= n; p += 2) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) detail::factor_recurse(n, out);
    return out;
}

// q = square_part^2 * (squarefree_num / squarefree_den), the pair coprime and
// squarefree; (1,1) exactly when q is the square of a rational.
struct squarefree_decomposition {
    rational square_part;
    integer squarefree_num;
    integer squarefree_den;
};

inline squarefree_decomposition squarefree_decompose(const rational& q) {
    if (q <= 0) throw domain_error("squarefree_decompose: argument must be positive");
    integer sq_n = 1, sf_n = 1, sq_d = 1, sf_d = 1;
    for (const auto& [p, e] : factor_map(num(q))) {
        sq_n *= boost::multiprecision::pow(p, e / 2);
        if (e % 2) sf_n *= p;
    }
    for (const auto& [p, e] : factor_map(den(q))) {
        sq_d *= boost::multiprecision::pow(p, e / 2);
        if (e % 2) sf_d *= p;
    }
    return {make_rational(sq_n, sq_d), sf_n, sf_d};
}

}  // namespace surdx
