#pragma once

#include "cyclotomic.hpp"
#include "linalg.hpp"

#include <complex>
#include <sstream>

namespace wrt {

// Element of Q(e_N), stored as the remainder modulo Phi_N in the basis 1, e_N, ..., e_N^{phi(N)-1}.
class CycNumber {
public:
    CycNumber() : n_(1), c_(1, Rational(0)) {}

    CycNumber(long modulus, std::vector<Rational> coeffs) : n_(modulus), c_(std::move(coeffs)) {
        require(n_ >= 1, "CycNumber: modulus must be positive");
        require(static_cast<long>(c_.size()) == euler_phi(n_), "CycNumber: coefficient count must be phi(N)");
        for (auto& x : c_) x.canonicalize();
    }

    static CycNumber zero(long N) { return CycNumber(N, std::vector<Rational>(euler_phi(N))); }

    static CycNumber constant(const Rational& q, long N = 1) {
        CycNumber x = zero(N);
        x.c_[0] = q;
        return x;
    }

    // e_N^e
    static CycNumber root(long N, long e) {
        auto t = reduction_table(N);
        const auto& row = t->rows[pmod(e, N)];
        std::vector<Rational> c(t->phi);
        for (long i = 0; i < t->phi; ++i) c[i] = row[i];
        return CycNumber(N, std::move(c));
    }

    // sum_k dense[k] e_N^k, dense has length N
    static CycNumber from_dense(long N, const std::vector<Rational>& dense) {
        ensure(static_cast<long>(dense.size()) == N, "from_dense: length must equal modulus");
        auto t = reduction_table(N);
        std::vector<Rational> c(t->phi);
        for (long k = 0; k < N; ++k) {
            if (dense[k] == 0) continue;
            if (k < t->phi) {
                c[k] += dense[k];
                continue;
            }
            const auto& row = t->rows[k];
            for (long i = 0; i < t->phi; ++i)
                if (row[i]) c[i] += dense[k] * row[i];
        }
        return CycNumber(N, std::move(c));
    }

    long modulus() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    // the same number viewed in Q(e_M), M a multiple of N
    CycNumber lift(long M) const {
        require(M % n_ == 0, "CycNumber::lift: target modulus must be a multiple");
        if (M == n_) return *this;
        long step = M / n_;
        auto t = reduction_table(M);
        std::vector<Rational> c(t->phi);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            const auto& row = t->rows[static_cast<long>(i) * step];
            for (long j = 0; j < t->phi; ++j)
                if (row[j]) c[j] += c_[i] * row[j];
        }
        return CycNumber(M, std::move(c));
    }

    // the same number in Q(e_M) for a divisor M of N, if it lies there
    std::optional<CycNumber> descend(long M) const {
        require(M >= 1 && n_ % M == 0, "CycNumber::descend: target must divide the modulus");
        if (M == n_) return *this;
        long step = n_ / M;
        auto t = reduction_table(n_);
        long pm = euler_phi(M);
        RatMatrix A(t->phi, std::vector<Rational>(pm));
        for (long j = 0; j < pm; ++j) {
            const auto& row = t->rows[j * step];
            for (long i = 0; i < t->phi; ++i) A[i][j] = row[i];
        }
        auto sol = solve_linear(std::move(A), c_);
        if (!sol) return std::nullopt;
        return CycNumber(M, std::move(*sol));
    }

    // smallest modulus (among divisors of N) that holds this number
    CycNumber minimal() const {
        for (long d : divisors(n_)) {
            if (d == n_) break;
            auto x = descend(d);
            if (x) return *x;
        }
        return *this;
    }

    CycNumber galois(long l) const {
        require(gcd_ll(l, n_) == 1, "galois: exponent must be coprime to the modulus");
        auto t = reduction_table(n_);
        std::vector<Rational> c(t->phi);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            const auto& row = t->rows[mul_mod(static_cast<long>(i), l, n_)];
            for (long j = 0; j < t->phi; ++j)
                if (row[j]) c[j] += c_[i] * row[j];
        }
        return CycNumber(n_, std::move(c));
    }

    CycNumber conj() const { return galois(-1); }

    CycNumber inverse() const {
        require(!is_zero(), "CycNumber::inverse: division by zero");
        long phi = static_cast<long>(c_.size());
        // column j is this * e^j
        RatMatrix A(phi, std::vector<Rational>(phi));
        CycNumber col = *this;
        CycNumber e = root(n_, 1);
        for (long j = 0; j < phi; ++j) {
            for (long i = 0; i < phi; ++i) A[i][j] = col.c_[i];
            if (j + 1 < phi) col = col * e;
        }
        std::vector<Rational> rhs(phi);
        rhs[0] = 1;
        auto sol = solve_linear(std::move(A), std::move(rhs));
        ensure(sol.has_value(), "CycNumber::inverse: singular multiplication matrix");
        return CycNumber(n_, std::move(*sol));
    }

    // every coefficient denominator is a unit in Z[1/b]
    bool denominators_divide_power_of(long b) const {
        for (const auto& x : c_)
            if (!supported_by(x.get_den(), b)) return false;
        return true;
    }

    std::complex<double> to_complex() const {
        const long double tau = 6.283185307179586476925286766559L;
        std::complex<long double> s = 0;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            long double ang = tau * static_cast<long double>(i) / static_cast<long double>(n_);
            s += static_cast<long double>(c_[i].get_d()) * std::complex<long double>(std::cos(ang), std::sin(ang));
        }
        return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
    }

    std::string to_string() const {
        std::string s = std::to_string(n_) + ":[";
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ",";
            s += wrt::to_string(c_[i]);
        }
        return s + "]";
    }

    static CycNumber parse(const std::string& text) {
        auto colon = text.find(':');
        require(colon != std::string::npos && text.size() > colon + 2 && text[colon + 1] == '[' && text.back() == ']',
                "CycNumber::parse: expected N:[c0,...]");
        long N = std::stoll(text.substr(0, colon));
        std::string body = text.substr(colon + 2, text.size() - colon - 3);
        std::vector<Rational> c;
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            Rational q;
            require(q.set_str(item, 10) == 0, "CycNumber::parse: bad rational '" + item + "'");
            q.canonicalize();
            c.push_back(q);
        }
        return CycNumber(N, std::move(c));
    }

    friend CycNumber operator+(const CycNumber& a, const CycNumber& b) {
        if (a.n_ != b.n_) {
            long M = lcm_ll(a.n_, b.n_);
            return a.lift(M) + b.lift(M);
        }
        CycNumber r = a;
        for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }

    friend CycNumber operator-(const CycNumber& a) {
        CycNumber r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend CycNumber operator-(const CycNumber& a, const CycNumber& b) { return a + (-b); }

    friend CycNumber operator*(const CycNumber& a, const CycNumber& b) {
        if (a.n_ != b.n_) {
            long M = lcm_ll(a.n_, b.n_);
            return a.lift(M) * b.lift(M);
        }
        const long N = a.n_;
        const size_t phi = a.c_.size();
        if (phi == 1) {
            CycNumber r = a;
            r.c_[0] *= b.c_[0];
            return r;
        }
        std::vector<Rational> prod(2 * phi - 1);
        for (size_t i = 0; i < phi; ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < phi; ++j)
                if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
        }
        auto t = reduction_table(N);
        std::vector<Rational> c(prod.begin(), prod.begin() + phi);
        for (size_t k = phi; k < prod.size(); ++k) {
            if (prod[k] == 0) continue;
            const auto& row = t->rows[k % N];
            for (size_t i = 0; i < phi; ++i)
                if (row[i]) c[i] += prod[k] * row[i];
        }
        return CycNumber(N, std::move(c));
    }

    friend CycNumber operator*(const CycNumber& a, const Rational& q) {
        CycNumber r = a;
        for (auto& x : r.c_) x *= q;
        return r;
    }

    friend CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inverse(); }

    CycNumber& operator+=(const CycNumber& b) { return *this = *this + b; }
    CycNumber& operator*=(const CycNumber& b) { return *this = *this * b; }

    CycNumber pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        CycNumber r = constant(1, n_), base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const CycNumber& a, const CycNumber& b) {
        if (a.n_ != b.n_) {
            long M = lcm_ll(a.n_, b.n_);
            return a.lift(M).c_ == b.lift(M).c_;
        }
        return a.c_ == b.c_;
    }
    friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

private:
    long n_;
    std::vector<Rational> c_;
};

inline std::ostream& operator<<(std::ostream& os, const CycNumber& x) { return os << x.to_string(); }

}  // namespace wrt
