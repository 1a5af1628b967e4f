#pragma once

#include "quarter_laurent.hpp"
#include "root_sum.hpp"

namespace wrt {

enum class Theory { SO3, SU2 };

inline std::string to_string(Theory t) { return t == Theory::SO3 ? "so3" : "su2"; }

inline Theory parse_theory(const std::string& s) {
    if (s == "so3" || s == "SO3") return Theory::SO3;
    if (s == "su2" || s == "SU2") return Theory::SU2;
    throw PreconditionError("unknown theory '" + s + "' (expected so3 or su2)");
}

// xi = e_r^l, with the fourth root xi^{1/4} = e_{4r}^l
struct RootSpec {
    long r = 1;
    long l = 1;
    Theory theory = Theory::SU2;

    RootSpec() = default;
    RootSpec(long r_, long l_, Theory t) : r(r_), l(l_), theory(t) {
        require(r >= 1, "RootSpec: order must be positive");
        require(gcd_ll(l, r) == 1, "RootSpec: l must be coprime to r");
        require(t == Theory::SU2 || r % 2 == 1, "RootSpec: SO3 requires odd r");
        // e_{4r}^l must itself be primitive, otherwise F_{U^{+-1}} vanishes
        require(t == Theory::SO3 || l % 2 != 0, "RootSpec: SU2 needs odd l (use l + r for odd r)");
    }

    long quarter_modulus() const { return 4 * r; }

    // exponent of e_{4r} representing u^e
    long u_exponent(long e) const { return mul_mod(e, l, 4 * r); }

    CycNumber xi() const { return CycNumber::root(r, l); }
    CycNumber xi_pow(long e) const { return CycNumber::root(r, mul_mod(e, l, r)); }
    CycNumber u_pow(long e) const { return CycNumber::root(4 * r, u_exponent(e)); }

    std::string describe() const {
        return "r=" + std::to_string(r) + ",l=" + std::to_string(l) + "," + to_string(theory);
    }
};

// N_SU2 = {0..2r-1}; N_SO3 keeps the odd members (r odd)
inline std::vector<long> color_set(Theory theory, long r) {
    require(r >= 1, "color_set: r must be positive");
    require(theory == Theory::SU2 || r % 2 == 1, "color_set: SO3 requires odd r");
    std::vector<long> out;
    for (long n = 0; n < 2 * r; ++n)
        if (theory == Theory::SU2 || n % 2 == 1) out.push_back(n);
    return out;
}

// u -> e_{4r}^l, reported at the smallest modulus the exponents allow
inline CycNumber eval_at_root(const QuarterLaurent& f, const RootSpec& xi) {
    const long N = xi.quarter_modulus();
    if (f.is_zero()) return CycNumber::zero(1);
    long g = N;
    std::vector<std::pair<long, Rational>> t;
    f.for_each_term([&](long e, const Rational& c) {
        long k = xi.u_exponent(e);
        g = gcd_ll(g, k);
        t.emplace_back(k, c);
    });
    const long M = N / g;
    std::vector<Rational> dense(M);
    for (auto& [k, c] : t) dense[k / g] += c;
    return CycNumber::from_dense(M, dense);
}

// same substitution into the group ring Z[Z/4r]; requires integer coefficients
inline RootSum eval_to_rootsum(const QuarterLaurent& f, const RootSpec& xi) {
    RootSum s(xi.quarter_modulus());
    f.for_each_term([&](long e, const Rational& c) {
        ensure(c.get_den() == 1, "eval_to_rootsum: integer coefficients required");
        s.add(xi.u_exponent(e), static_cast<i128>(to_ll(c.get_num())));
    });
    return s;
}

}  // namespace wrt
