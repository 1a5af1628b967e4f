#pragma once

#include "brational.hpp"

#include <map>
#include <optional>

namespace wrt {

// Laurent polynomial in u = q^{1/4} with rational coefficients.
// Dense storage: coefficient of u^{lo + i} is c[i]; zero is the empty vector.
class QuarterLaurent {
public:
    QuarterLaurent() = default;

    explicit QuarterLaurent(const Rational& constant) {
        if (constant != 0) c_.assign(1, constant);
    }

    static QuarterLaurent u_power(long e, const Rational& coeff = 1) {
        QuarterLaurent f;
        if (coeff != 0) {
            f.lo_ = e;
            f.c_.assign(1, coeff);
        }
        return f;
    }

    // q^e for e with 4e integral
    static QuarterLaurent q_power(const Rational& e, const Rational& coeff = 1) {
        Rational four_e = 4 * e;
        require(four_e.get_den() == 1, "q_power: exponent must be a quarter integer");
        return u_power(to_ll(four_e.get_num()), coeff);
    }

    static QuarterLaurent from_terms(const std::map<long, Rational>& terms) {
        QuarterLaurent f;
        for (const auto& [e, c] : terms) f.add_term(e, c);
        return f;
    }

    bool is_zero() const { return c_.empty(); }
    long low() const { return lo_; }
    long high() const { return lo_ + static_cast<long>(c_.size()) - 1; }

    Rational coeff(long e) const {
        if (c_.empty() || e < lo_ || e > high()) return 0;
        return c_[e - lo_];
    }

    std::map<long, Rational> terms() const {
        std::map<long, Rational> m;
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) m.emplace(lo_ + static_cast<long>(i), c_[i]);
        return m;
    }

    template <class F>
    void for_each_term(F&& f) const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) f(lo_ + static_cast<long>(i), c_[i]);
    }

    void add_term(long e, const Rational& c) {
        if (c == 0) return;
        if (c_.empty()) {
            lo_ = e;
            c_.assign(1, c);
            return;
        }
        if (e < lo_) {
            c_.insert(c_.begin(), lo_ - e, Rational(0));
            lo_ = e;
        } else if (e > high()) {
            c_.resize(e - lo_ + 1);
        }
        c_[e - lo_] += c;
        normalize();
    }

    // all exponents of u divisible by 4, i.e. a Laurent polynomial in q
    bool integral_q_powers() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0 && pmod(lo_ + static_cast<long>(i), 4) != 0) return false;
        return true;
    }

    bool integer_coefficients() const {
        for (const auto& x : c_)
            if (x.get_den() != 1) return false;
        return true;
    }

    // coefficients lie in Z[1/b]
    bool in_ring(long b) const {
        for (const auto& x : c_)
            if (!supported_by(x.get_den(), b)) return false;
        return true;
    }

    std::vector<BRational> b_coeffs(long b) const {
        std::vector<BRational> out;
        for (const auto& x : c_)
            if (x != 0) out.emplace_back(x, b);
        return out;
    }

    QuarterLaurent shifted(long e) const {
        QuarterLaurent r = *this;
        if (!r.c_.empty()) r.lo_ += e;
        return r;
    }

    // substitute u -> u^k (k != 0)
    QuarterLaurent substitute_power(long k) const {
        require(k != 0, "substitute_power: k must be nonzero");
        QuarterLaurent r;
        for_each_term([&](long e, const Rational& c) { r.add_term(e * k, c); });
        return r;
    }

    friend QuarterLaurent operator+(const QuarterLaurent& a, const QuarterLaurent& b) {
        if (a.c_.empty()) return b;
        if (b.c_.empty()) return a;
        QuarterLaurent r;
        r.lo_ = std::min(a.lo_, b.lo_);
        long hi = std::max(a.high(), b.high());
        r.c_.assign(hi - r.lo_ + 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[a.lo_ - r.lo_ + i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[b.lo_ - r.lo_ + i] += b.c_[i];
        r.normalize();
        return r;
    }

    friend QuarterLaurent operator-(const QuarterLaurent& a) {
        QuarterLaurent r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend QuarterLaurent operator-(const QuarterLaurent& a, const QuarterLaurent& b) { return a + (-b); }

    friend QuarterLaurent operator*(const QuarterLaurent& a, const QuarterLaurent& b) {
        if (a.c_.empty() || b.c_.empty()) return {};
        QuarterLaurent r;
        r.lo_ = a.lo_ + b.lo_;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
        std::vector<size_t> nzb;
        for (size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j] != 0) nzb.push_back(j);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j : nzb) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.normalize();
        return r;
    }

    friend QuarterLaurent operator*(const QuarterLaurent& a, const Rational& k) {
        if (k == 0) return {};
        QuarterLaurent r = a;
        for (auto& x : r.c_) x *= k;
        return r;
    }

    QuarterLaurent& operator+=(const QuarterLaurent& b) { return *this = *this + b; }
    QuarterLaurent& operator-=(const QuarterLaurent& b) { return *this = *this - b; }
    QuarterLaurent& operator*=(const QuarterLaurent& b) { return *this = *this * b; }

    QuarterLaurent pow(unsigned e) const {
        QuarterLaurent r(1), base = *this;
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    // Laurent division: quotient and remainder with the remainder supported
    // strictly above the quotient's reach. Exact iff remainder is zero.
    static std::pair<QuarterLaurent, QuarterLaurent> divmod(const QuarterLaurent& a, const QuarterLaurent& b) {
        require(!b.is_zero(), "QuarterLaurent: division by zero");
        if (a.is_zero()) return {{}, {}};
        // write a = u^{a.lo} A(u), b = u^{b.lo} B(u) with A(0), B(0) != 0 and divide polynomials
        std::vector<Rational> rem = a.c_;
        const auto& den = b.c_;
        const long db = static_cast<long>(den.size()) - 1;
        const long da = static_cast<long>(rem.size()) - 1;
        QuarterLaurent q;
        if (da < db) return {q, a};
        std::vector<std::pair<long, Rational>> nzden;
        for (long j = 0; j <= db; ++j)
            if (den[j] != 0) nzden.emplace_back(j, den[j]);
        const Rational lead_inv = 1 / den[db];
        std::vector<Rational> quo(da - db + 1);
        for (long i = da; i >= db; --i) {
            if (rem[i] == 0) continue;
            Rational c = rem[i] * lead_inv;
            quo[i - db] = c;
            for (const auto& [j, dj] : nzden) rem[i - db + j] -= c * dj;
        }
        q.lo_ = a.lo_ - b.lo_;
        q.c_ = std::move(quo);
        q.normalize();
        QuarterLaurent r;
        r.lo_ = a.lo_;
        r.c_ = std::move(rem);
        r.normalize();
        return {q, r};
    }

    // exact division; a nonzero remainder means an upstream inconsistency
    friend QuarterLaurent operator/(const QuarterLaurent& a, const QuarterLaurent& b) {
        auto [q, r] = divmod(a, b);
        ensure(r.is_zero(), "QuarterLaurent: inexact division");
        return q;
    }

    std::optional<QuarterLaurent> try_divide(const QuarterLaurent& b) const {
        auto [q, r] = divmod(*this, b);
        if (!r.is_zero()) return std::nullopt;
        return q;
    }

    friend bool operator==(const QuarterLaurent& a, const QuarterLaurent& b) {
        return (a.lo_ == b.lo_ && a.c_ == b.c_) || (a.c_.empty() && b.c_.empty());
    }
    friend bool operator!=(const QuarterLaurent& a, const QuarterLaurent& b) { return !(a == b); }

    // readable form in u (q^{1/4})
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            long e = lo_ + static_cast<long>(i);
            std::string c = wrt::to_string(c_[i]);
            if (!s.empty()) s += (c[0] == '-') ? " - " : " + ";
            else if (c[0] == '-') s += "-";
            if (c[0] == '-') c = c.substr(1);
            if (e == 0) s += c;
            else {
                if (c != "1") s += c + "*";
                s += "u^" + std::to_string(e);
            }
        }
        return s;
    }

private:
    void normalize() {
        size_t first = 0;
        while (first < c_.size() && c_[first] == 0) ++first;
        if (first == c_.size()) {
            c_.clear();
            lo_ = 0;
            return;
        }
        size_t last = c_.size();
        while (c_[last - 1] == 0) --last;
        if (first > 0 || last < c_.size()) {
            c_ = std::vector<Rational>(c_.begin() + first, c_.begin() + last);
            lo_ += static_cast<long>(first);
        }
    }

    long lo_ = 0;
    std::vector<Rational> c_;
};

}  // namespace wrt
