#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wrt {

using Integer = mpz_class;
using Rational = mpq_class;

// bad arguments from the caller
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// something that the math says cannot happen did happen
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

inline void require(bool ok, const std::string& what) {
    if (!ok) throw PreconditionError(what);
}

inline void ensure(bool ok, const std::string& what) {
    if (!ok) throw InternalError(what);
}

inline long sn(long x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline long labs_ll(long x) { return x < 0 ? -x : x; }

// non-negative remainder
inline long pmod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

inline long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline long ceil_div(long a, long b) { return -floor_div(-a, b); }

inline long gcd_ll(long a, long b) { return std::gcd(a, b); }

inline long lcm_ll(long a, long b) { return std::lcm(a, b); }

// a * x == g (mod m); returns x with g = gcd
inline long inverse_mod(long a, long m) {
    require(m >= 1, "inverse_mod: modulus must be positive");
    if (m == 1) return 0;
    long old_r = pmod(a, m), r = m, old_s = 1, s = 0;
    while (r != 0) {
        long q = old_r / r;
        long t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    require(old_r == 1, "inverse_mod: " + std::to_string(a) + " not invertible mod " + std::to_string(m));
    return pmod(old_s, m);
}

inline long mul_mod(long a, long b, long m) {
    return static_cast<long>((static_cast<__int128>(pmod(a, m)) * pmod(b, m)) % m);
}

inline std::vector<std::pair<long, int>> factorize(long n) {
    require(n >= 1, "factorize: n must be positive");
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        out.emplace_back(p, k);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline long euler_phi(long n) {
    long res = n;
    for (auto [p, k] : factorize(n)) res = res / p * (p - 1);
    return res;
}

inline std::vector<long> divisors(long n) {
    std::vector<long> d;
    for (long i = 1; i * i <= n; ++i)
        if (n % i == 0) {
            d.push_back(i);
            if (i * i != n) d.push_back(n / i);
        }
    std::sort(d.begin(), d.end());
    return d;
}

inline bool is_prime_power(long n, long* p = nullptr, int* k = nullptr) {
    if (n < 2) return false;
    auto f = factorize(n);
    if (f.size() != 1) return false;
    if (p) *p = f[0].first;
    if (k) *k = f[0].second;
    return true;
}

inline long ipow(long base, int e) {
    long r = 1;
    while (e-- > 0) r *= base;
    return r;
}

// true when every prime of den divides b
inline bool supported_by(const Integer& den, long b) {
    Integer d = abs(den);
    Integer bb = labs_ll(b);
    if (bb == 0) return false;
    while (d != 1) {
        Integer g = gcd(d, bb);
        if (g == 1) return false;
        while (d % g == 0) d /= g;
    }
    return true;
}

inline Rational make_rational(long n, long d = 1) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline long to_ll(const Integer& z) {
    ensure(z.fits_slong_p(), "integer does not fit in 64 bits");
    return z.get_si();
}

}  // namespace wrt
