#pragma once

#include "arith.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace wrt {

// integer polynomial, coefficient i is the q^i coefficient
using IntPoly = std::vector<Integer>;

inline void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    trim(c);
    return c;
}

// exact division by a monic polynomial; throws if the remainder is nonzero
inline IntPoly poly_div_exact(IntPoly num, const IntPoly& den) {
    trim(num);
    ensure(!den.empty() && den.back() == 1, "poly_div_exact: divisor must be monic");
    if (num.empty()) return {};
    size_t dn = den.size() - 1;
    ensure(num.size() - 1 >= dn, "poly_div_exact: degree too small");
    IntPoly quo(num.size() - dn, 0);
    for (size_t i = num.size(); i-- > dn;) {
        Integer c = num[i];
        if (c == 0) continue;
        quo[i - dn] = c;
        for (size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    trim(num);
    ensure(num.empty(), "poly_div_exact: nonzero remainder");
    return quo;
}

namespace detail {

template <class V>
class Cache {
public:
    template <class F>
    std::shared_ptr<const V> get(long key, F&& make) {
        {
            std::lock_guard<std::mutex> lk(m_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        auto v = std::make_shared<const V>(make());
        std::lock_guard<std::mutex> lk(m_);
        return map_.emplace(key, std::move(v)).first->second;
    }

private:
    std::mutex m_;
    std::map<long, std::shared_ptr<const V>> map_;
};

}  // namespace detail

inline const IntPoly& cyclotomic_poly(long n);

namespace detail {
inline IntPoly build_cyclotomic(long n) {
    IntPoly num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (long d : divisors(n))
        if (d < n) num = poly_div_exact(num, cyclotomic_poly(d));
    return num;
}
inline Cache<IntPoly>& cyclotomic_cache() {
    static Cache<IntPoly> c;
    return c;
}
}  // namespace detail

// Phi_n, by dividing q^n - 1 by Phi_d for the proper divisors d
inline const IntPoly& cyclotomic_poly(long n) {
    require(n >= 1, "cyclotomic_poly: n must be positive");
    return *detail::cyclotomic_cache().get(n, [n] { return detail::build_cyclotomic(n); });
}

// rows[k] = q^k mod Phi_N for 0 <= k < N, as small integers
struct ReductionTable {
    long modulus = 1;
    long phi = 1;
    std::vector<std::vector<long>> rows;
};

namespace detail {
inline ReductionTable build_table(long N) {
    ReductionTable t;
    t.modulus = N;
    t.phi = euler_phi(N);
    const IntPoly& P = cyclotomic_poly(N);
    std::vector<long> p(P.size());
    for (size_t i = 0; i < P.size(); ++i) p[i] = to_ll(P[i]);
    t.rows.assign(N, std::vector<long>(t.phi, 0));
    std::vector<long> cur(t.phi, 0);
    if (t.phi == 1) {
        // Q: q is the root itself, 1 for N = 1 and -1 for N = 2
        long root = -p[0];
        long v = 1;
        for (long k = 0; k < N; ++k) {
            t.rows[k][0] = v;
            v *= root;
        }
        return t;
    }
    cur[0] = 1;
    for (long k = 0; k < N; ++k) {
        t.rows[k] = cur;
        long top = cur[t.phi - 1];
        for (long i = t.phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (long i = 0; i < t.phi; ++i) {
                cur[i] -= top * p[i];
                ensure(labs_ll(cur[i]) < (1LL << 50), "reduction table overflow");
            }
    }
    return t;
}
inline Cache<ReductionTable>& table_cache() {
    static Cache<ReductionTable> c;
    return c;
}
}  // namespace detail

inline std::shared_ptr<const ReductionTable> reduction_table(long N) {
    require(N >= 1, "reduction_table: modulus must be positive");
    return detail::table_cache().get(N, [N] { return detail::build_table(N); });
}

}  // namespace wrt
