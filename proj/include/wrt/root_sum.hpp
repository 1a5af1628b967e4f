#pragma once

#include "cyc_number.hpp"

#include <unordered_map>

namespace wrt {

using i128 = __int128;

inline Integer to_integer(i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    Integer hi = static_cast<unsigned long>(static_cast<unsigned long>(u >> 64));
    Integer lo = static_cast<unsigned long>(static_cast<unsigned long>(u));
    Integer z = (hi << 64) + lo;
    return neg ? Integer(-z) : z;
}

// Integer combination of N-th roots of unity, kept unreduced as an element of Z[Z/N].
class RootSum {
public:
    explicit RootSum(long modulus = 1) : n_(modulus), c_(modulus, 0) {
        require(modulus >= 1, "RootSum: modulus must be positive");
    }

    static RootSum monomial(long N, long e, i128 coeff = 1) {
        RootSum s(N);
        s.add(e, coeff);
        return s;
    }

    long modulus() const { return n_; }
    const std::vector<i128>& dense() const { return c_; }

    void add(long e, i128 coeff) { c_[pmod(e, n_)] += coeff; }

    RootSum& operator+=(const RootSum& o) {
        ensure(o.n_ == n_, "RootSum: modulus mismatch");
        for (long i = 0; i < n_; ++i) c_[i] += o.c_[i];
        return *this;
    }

    RootSum& operator-=(const RootSum& o) {
        ensure(o.n_ == n_, "RootSum: modulus mismatch");
        for (long i = 0; i < n_; ++i) c_[i] -= o.c_[i];
        return *this;
    }

    RootSum& operator*=(i128 k) {
        for (auto& x : c_) x *= k;
        return *this;
    }

    friend RootSum operator*(const RootSum& a, const RootSum& b) {
        ensure(a.n_ == b.n_, "RootSum: modulus mismatch");
        RootSum r(a.n_);
        for (long i = 0; i < a.n_; ++i) {
            if (!a.c_[i]) continue;
            for (long j = 0; j < a.n_; ++j)
                if (b.c_[j]) r.c_[(i + j) % a.n_] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    // multiply by the monomial x^e
    RootSum shifted(long e) const {
        RootSum r(n_);
        for (long i = 0; i < n_; ++i)
            if (c_[i]) r.c_[pmod(i + e, n_)] = c_[i];
        return r;
    }

    // x -> x^l on exponents, l coprime to N
    RootSum galois(long l) const {
        require(gcd_ll(l, n_) == 1, "RootSum::galois: exponent must be coprime to the modulus");
        RootSum r(n_);
        for (long i = 0; i < n_; ++i)
            if (c_[i]) r.c_[mul_mod(i, l, n_)] += c_[i];
        return r;
    }

    // same element viewed with a multiple M of the modulus
    RootSum lift(long M) const {
        require(M % n_ == 0, "RootSum::lift: target modulus must be a multiple");
        RootSum r(M);
        long step = M / n_;
        for (long i = 0; i < n_; ++i)
            if (c_[i]) r.c_[i * step] += c_[i];
        return r;
    }

    CycNumber to_cyc() const {
        auto t = reduction_table(n_);
        std::vector<i128> acc(t->phi, 0);
        for (long k = 0; k < n_; ++k) {
            if (!c_[k]) continue;
            const auto& row = t->rows[k];
            for (long i = 0; i < t->phi; ++i)
                if (row[i]) acc[i] += c_[k] * row[i];
        }
        std::vector<Rational> c(t->phi);
        for (long i = 0; i < t->phi; ++i) c[i] = Rational(to_integer(acc[i]));
        return CycNumber(n_, std::move(c));
    }

    // zero test in Q(e_N) without building a reduction table; see sparse_vanishes
    bool vanishes() const;

private:
    long n_;
    std::vector<i128> c_;
};

// Decide whether sum coeff * e_N^exp is zero in Q(e_N). Uses the integral basis
// obtained as the tensor product of the power bases of the prime-power parts
// of N, in which e_q^t for t >= phi(q) expands as minus a sum of p - 1 basis
// elements. Suitable for moduli far too large for a reduction table.
inline bool sparse_vanishes(long N, const std::vector<std::pair<long, i128>>& terms) {
    struct Part {
        long q, p, h, phi, crt;
    };
    std::vector<Part> parts;
    for (auto [p, k] : factorize(N)) {
        long q = ipow(p, k);
        long h = q / p;
        parts.push_back({q, p, h, (p - 1) * h, inverse_mod(N / q, q)});
    }
    std::unordered_map<long, i128> acc;
    acc.reserve(terms.size() * 4);
    // expansion of one term into (flat index, sign)
    std::vector<std::pair<long, int>> cur, next;
    for (const auto& [e, coeff] : terms) {
        if (!coeff) continue;
        cur.assign(1, {0, 1});
        for (const auto& part : parts) {
            long t = mul_mod(e, part.crt, part.q);
            next.clear();
            if (t < part.phi) {
                for (auto [idx, s] : cur) next.emplace_back(idx * part.phi + t, s);
            } else {
                long s0 = t - part.phi;
                for (auto [idx, s] : cur)
                    for (long i = 0; i + 1 < part.p; ++i) next.emplace_back(idx * part.phi + s0 + i * part.h, -s);
            }
            cur.swap(next);
        }
        for (auto [idx, s] : cur) acc[idx] += s > 0 ? coeff : -coeff;
    }
    for (const auto& kv : acc)
        if (kv.second) return false;
    return true;
}

inline bool RootSum::vanishes() const {
    std::vector<std::pair<long, i128>> terms;
    for (long i = 0; i < n_; ++i)
        if (c_[i]) terms.emplace_back(i, c_[i]);
    return sparse_vanishes(n_, terms);
}

}  // namespace wrt
