#pragma once

#include "quarter_laurent.hpp"

namespace wrt {

// powers of u = q^{1/4}; q = u^4, v = q^{1/2} = u^2
inline QuarterLaurent q_pow(long e) { return QuarterLaurent::u_power(4 * e); }
inline QuarterLaurent v_pow(long e) { return QuarterLaurent::u_power(2 * e); }

// {n} = v^n - v^{-n}
inline QuarterLaurent qbrace(long n) {
    if (n == 0) return {};
    return v_pow(n) - v_pow(-n);
}

// [n] = {n}/{1}
inline QuarterLaurent qint(long n) {
    if (n < 0) return -qint(-n);
    QuarterLaurent f;
    for (long j = 0; j < n; ++j) f.add_term(2 * (n - 1 - 2 * j), 1);
    return f;
}

// {n}! = {1}{2}...{n}
inline QuarterLaurent qfact(long n) {
    require(n >= 0, "qfact: n must be non-negative");
    QuarterLaurent f(1);
    for (long i = 1; i <= n; ++i) f *= qbrace(i);
    return f;
}

// {n}! / ({k}! {n-k}!)
inline QuarterLaurent qbinom(long n, long k) {
    require(0 <= k && k <= n, "qbinom: need 0 <= k <= n");
    return qfact(n) / (qfact(k) * qfact(n - k));
}

// prod_{j=0}^{n-1} (1 - q^{a+j}), a a quarter integer
inline QuarterLaurent pochhammer(const Rational& a, long n) {
    require(n >= 0, "pochhammer: length must be non-negative");
    Rational four_a = 4 * a;
    require(four_a.get_den() == 1, "pochhammer: start must be a quarter integer");
    long s = to_ll(four_a.get_num());
    QuarterLaurent f(1);
    for (long j = 0; j < n; ++j) f *= QuarterLaurent(1) - QuarterLaurent::u_power(s + 4 * j);
    return f;
}

// (q^a; q)_n for integer a
inline QuarterLaurent qpoch(long a, long n) { return pochhammer(Rational(a), n); }

enum class QCalcKind { QInt, QFact, QBinom, Pochhammer };

inline QuarterLaurent qcalc(QCalcKind kind, const std::vector<Rational>& args) {
    auto integer_arg = [&](size_t i) {
        require(i < args.size(), "qcalc: missing argument");
        require(args[i].get_den() == 1, "qcalc: integer argument expected");
        return to_ll(args[i].get_num());
    };
    switch (kind) {
        case QCalcKind::QInt: return qint(integer_arg(0));
        case QCalcKind::QFact: return qfact(integer_arg(0));
        case QCalcKind::QBinom: return qbinom(integer_arg(0), integer_arg(1));
        case QCalcKind::Pochhammer:
            require(args.size() >= 2, "qcalc: pochhammer takes a start and a length");
            return pochhammer(args[0], integer_arg(1));
    }
    throw PreconditionError("qcalc: unknown kind");
}

}  // namespace wrt
