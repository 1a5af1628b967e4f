#pragma once

#include "cyclotomic.hpp"
#include "qcalc.hpp"

namespace wrt {

struct JonesFamily {
    enum class Tag { Unknot, HopfChain };
    Tag tag = Tag::Unknot;
    std::vector<long> framings;  // one per chain component; the unknot uses framings[0]
    long d = 1;                  // colour of the knot linked to the last chain component

    static JonesFamily unknot(long framing = 0) { return {Tag::Unknot, {framing}, 1}; }

    static JonesFamily hopf_chain(std::vector<long> framings, long d) {
        require(!framings.empty(), "hopf chain needs at least one component");
        require(d >= 1, "hopf chain: knot colour must be positive");
        return {Tag::HopfChain, std::move(framings), d};
    }

    size_t components() const { return tag == Tag::Unknot ? 1 : framings.size(); }
};

// q^{f (n^2 - 1)/4}
inline QuarterLaurent framing_factor(long f, long n) { return QuarterLaurent::u_power(f * (n * n - 1)); }

inline QuarterLaurent jones_unknot(long n, long framing = 0) {
    require(n >= 1, "jones_unknot: colour must be positive");
    return framing_factor(framing, n) * qint(n);
}

// [j_1] prod [j_i j_{i+1}] [j_n d] * prod q^{m_i (j_i^2-1)/4}; this is J * prod [j_i] and is
// defined for every colour, including 0
inline QuarterLaurent hopf_chain_bracket_product(const std::vector<long>& colors, long d,
                                                 const std::vector<long>& framings) {
    require(colors.size() == framings.size() && !colors.empty(), "hopf chain: colour/framing count mismatch");
    QuarterLaurent f = qint(colors[0]);
    for (size_t i = 0; i + 1 < colors.size(); ++i) f *= qint(colors[i] * colors[i + 1]);
    f *= qint(colors.back() * d);
    for (size_t i = 0; i < colors.size(); ++i) f *= framing_factor(framings[i], colors[i]);
    return f;
}

inline QuarterLaurent jones_hopf_chain(const std::vector<long>& colors, long d,
                                       const std::vector<long>& framings) {
    for (long j : colors) require(j >= 1, "jones_hopf_chain: colours must be positive");
    require(d >= 1, "jones_hopf_chain: knot colour must be positive");
    QuarterLaurent den(1);
    for (long j : colors) den *= qint(j);
    return hopf_chain_bracket_product(colors, d, framings) / den;
}

inline QuarterLaurent jones_value(const JonesFamily& fam, const std::vector<long>& colors) {
    if (fam.tag == JonesFamily::Tag::Unknot) {
        require(colors.size() == 1, "unknot takes one colour");
        return jones_unknot(colors[0], fam.framings[0]);
    }
    return jones_hopf_chain(colors, fam.d, fam.framings);
}

namespace detail {
inline QuarterLaurent build_A(long n, long k) {
    QuarterLaurent num(1);
    for (long i = 0; i <= k; ++i) num *= q_pow(n) + q_pow(-n) - q_pow(i) - q_pow(-i);
    if (num.is_zero()) return num;
    QuarterLaurent den = (QuarterLaurent(1) - q_pow(1)) * qpoch(k + 1, k + 1);
    return num / den;
}
inline Cache<QuarterLaurent>& A_cache() {
    static Cache<QuarterLaurent> c;
    return c;
}
}  // namespace detail

// A(n,k) = prod_{i=0}^k (q^n + q^{-n} - q^i - q^{-i}) / ((1-q)(q^{k+1};q)_{k+1})
inline const QuarterLaurent& cyclotomic_A(long n, long k) {
    require(k >= 0 && k < 100000, "cyclotomic_A: k out of range");
    n = labs_ll(n);
    // lives as long as the process; cached per (n, k)
    auto p = detail::A_cache().get(n * 100000 + k, [n, k] { return detail::build_A(n, k); });
    return *p;
}

struct CycCoeffEntry {
    QuarterLaurent num;      // C(k) = num / den
    QuarterLaurent den{1};
    bool exact = true;       // den == 1
    bool integral = false;   // C(k)(1-q)/(q^{k+1};q)_{k+1} lies in Z[q, q^{-1}]
};

struct CycCoeffs {
    std::vector<CycCoeffEntry> entries;
    bool reconstruction_ok = false;
};

// Solve J(n)[n] = sum_{k<n} C(k) A(n,k) for n = 1..T (triangular since A(n,k) = 0 for k >= n)
inline CycCoeffs cyclotomic_coeffs(const std::map<long, QuarterLaurent>& jones_values, long T) {
    require(T >= 1, "cyclotomic_coeffs: horizon must be positive");
    for (long n = 1; n <= T; ++n)
        require(jones_values.count(n), "cyclotomic_coeffs: missing Jones value for colour " + std::to_string(n));
    CycCoeffs out;
    for (long n = 1; n <= T; ++n) {
        // residual = J(n)[n] - sum_{k<n-1} C(k) A(n,k), kept as a fraction num/den
        QuarterLaurent num = jones_values.at(n) * qint(n), den(1);
        for (long k = 0; k + 1 < n; ++k) {
            const auto& e = out.entries[k];
            if (e.num.is_zero()) continue;
            QuarterLaurent term = e.num * cyclotomic_A(n, k);
            if (e.exact && den == QuarterLaurent(1)) {
                num -= term;
            } else {
                num = num * e.den - term * den;
                den = den * e.den;
            }
        }
        const QuarterLaurent& lead = cyclotomic_A(n, n - 1);
        CycCoeffEntry entry;
        auto q = (den == QuarterLaurent(1)) ? num.try_divide(lead) : std::nullopt;
        if (q) {
            entry.num = *q;
        } else {
            entry.num = num;
            entry.den = den * lead;
            entry.exact = false;
        }
        out.entries.push_back(entry);
    }
    // integrality: C(k)(1-q) / (q^{k+1};q)_{k+1} in Z[q^{+-1}]
    for (long k = 0; k < T; ++k) {
        auto& e = out.entries[k];
        QuarterLaurent scaled = e.num * (QuarterLaurent(1) - q_pow(1));
        auto q = scaled.try_divide(e.den * qpoch(k + 1, k + 1));
        e.integral = q && q->integer_coefficients() && q->integral_q_powers();
    }
    // reconstruction over the solved range
    out.reconstruction_ok = true;
    for (long n = 1; n <= T && out.reconstruction_ok; ++n) {
        QuarterLaurent lhs = jones_values.at(n) * qint(n);
        QuarterLaurent num, den(1);
        for (long k = 0; k < n; ++k) {
            const auto& e = out.entries[k];
            QuarterLaurent term = e.num * cyclotomic_A(n, k);
            num = num * e.den + term * den;
            den = den * e.den;
        }
        out.reconstruction_ok = (lhs * den == num);
    }
    return out;
}

// Jones values J(n) = [n j] of the 0-framed Hopf link with the second component coloured j
inline std::map<long, QuarterLaurent> hopf_jones_values(long j, long T) {
    std::map<long, QuarterLaurent> m;
    for (long n = 1; n <= T; ++n) m[n] = qint(n * j);
    return m;
}

inline std::map<long, QuarterLaurent> unknot_jones_values(long T) {
    std::map<long, QuarterLaurent> m;
    for (long n = 1; n <= T; ++n) m[n] = qint(n);
    return m;
}

}  // namespace wrt
