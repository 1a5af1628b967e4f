#pragma once

#include "gauss.hpp"
#include "jones.hpp"
#include "numtheory.hpp"

#include <variant>

namespace wrt {

// ---- surgery data ----------------------------------------------------------

struct LensPiece {
    long b = 1;
    long a = 1;
    long d = 1;
};

struct DiagonalPiece {
    std::vector<long> framings;
    std::optional<long> knot_color;  // linked once with the first component
};

using Piece = std::variant<LensPiece, DiagonalPiece>;

struct ManifoldSpec {
    std::vector<Piece> pieces;  // connected sum

    static ManifoldSpec lens(long b, long a, long d = 1) { return {{LensPiece{b, a, d}}}; }
    static ManifoldSpec diagonal(std::vector<long> framings, std::optional<long> knot = std::nullopt) {
        return {{DiagonalPiece{std::move(framings), knot}}};
    }
    static ManifoldSpec sphere() { return diagonal({1}); }

    ManifoldSpec connect(const ManifoldSpec& o) const {
        ManifoldSpec r = *this;
        r.pieces.insert(r.pieces.end(), o.pieces.begin(), o.pieces.end());
        return r;
    }
};

// a framed Hopf chain with an optional coloured unknot on the last component
struct Chain {
    std::vector<long> framings;
    long d = 1;
};

inline Chain lens_chain(long b, long a, long d) {
    require(b != 0, "lens: b must be nonzero");
    require(gcd_ll(a, b) == 1, "lens: a and b must be coprime");
    require(d >= 1, "lens: knot colour must be positive");
    if (labs_ll(b) == 1) {
        require(labs_ll(a) == 1, "lens: for |b| = 1 only a = +-1 is supported");
        return {{sn(a * b)}, d};
    }
    require(a != 0 && labs_ll(a) < labs_ll(b), "lens: need 0 < |a| < |b|");
    auto m = neg_continued_fraction(labs_ll(b), labs_ll(a));
    long s = sn(a * b);
    for (auto& x : m) x *= s;
    return {m, d};
}

inline std::vector<Chain> surgery_chains(const ManifoldSpec& M) {
    std::vector<Chain> out;
    for (const auto& p : M.pieces) {
        if (auto* lp = std::get_if<LensPiece>(&p)) {
            out.push_back(lens_chain(lp->b, lp->a, lp->d));
        } else {
            const auto& dp = std::get<DiagonalPiece>(p);
            require(!dp.framings.empty(), "diagonal piece needs a framing");
            for (size_t i = 0; i < dp.framings.size(); ++i) {
                long f = dp.framings[i];
                require(f != 0, "diagonal framings must be nonzero");
                require(labs_ll(f) == 1 || is_prime_power(labs_ll(f)), "diagonal framings must be +-1 or +-prime powers");
                long d = 1;
                if (i == 0 && dp.knot_color) {
                    require(*dp.knot_color >= 1, "knot colour must be positive");
                    d = *dp.knot_color;
                }
                out.push_back({{f}, d});
            }
        }
    }
    return out;
}

// |H_1| as the product of the |b| of each piece
inline long homology_order(const ManifoldSpec& M) {
    long h = 1;
    for (const auto& p : M.pieces) {
        if (auto* lp = std::get_if<LensPiece>(&p)) h *= labs_ll(lp->b);
        else
            for (long f : std::get<DiagonalPiece>(p).framings) h *= labs_ll(f);
    }
    return h;
}

// ---- signature ------------------------------------------------------------------

struct Inertia {
    int positive = 0;
    int negative = 0;
};

// inertia of a symmetric nondegenerate matrix by congruence elimination
inline Inertia signature(const std::vector<std::vector<long>>& m) {
    const size_t n = m.size();
    RatMatrix A(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i) {
        require(m[i].size() == n, "signature: matrix must be square");
        for (size_t j = 0; j < n; ++j) {
            require(m[i][j] == m[j][i], "signature: matrix must be symmetric");
            A[i][j] = m[i][j];
        }
    }
    Inertia res;
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && A[p][p] == 0) ++p;
        if (p == n) {
            // all remaining diagonal entries vanish: fold in a row with a nonzero off-diagonal entry
            size_t i = n, j = n;
            for (size_t a = k; a < n && i == n; ++a)
                for (size_t b = a + 1; b < n; ++b)
                    if (A[a][b] != 0) {
                        i = a;
                        j = b;
                        break;
                    }
            require(i != n, "signature: matrix is singular");
            for (size_t c = 0; c < n; ++c) A[i][c] += A[j][c];
            for (size_t r = 0; r < n; ++r) A[r][i] += A[r][j];
            p = i;
        }
        if (p != k) {
            std::swap(A[p], A[k]);
            for (auto& row : A) std::swap(row[p], row[k]);
        }
        const Rational piv = A[k][k];
        (piv > 0 ? res.positive : res.negative)++;
        // Schur complement
        for (size_t i = k + 1; i < n; ++i) {
            if (A[i][k] == 0) continue;
            Rational f = A[i][k] / piv;
            for (size_t j = k + 1; j < n; ++j) A[i][j] -= f * A[k][j];
        }
        for (size_t i = k + 1; i < n; ++i) A[i][k] = A[k][i] = 0;
    }
    return res;
}

inline std::vector<std::vector<long>> chain_linking_matrix(const Chain& c) {
    const size_t n = c.framings.size();
    std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
    for (size_t i = 0; i < n; ++i) {
        m[i][i] = c.framings[i];
        if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = 1;
    }
    return m;
}

// ---- state sums -------------------------------------------------------------------

namespace detail {

// acc += sign * (o shifted by e)
inline void add_shifted(std::vector<i128>& acc, const std::vector<i128>& o, long e, int sign) {
    const long N = static_cast<long>(acc.size());
    e = pmod(e, N);
    for (long i = 0; i < N; ++i) {
        if (!o[i]) continue;
        long k = i + e;
        if (k >= N) k -= N;
        acc[k] += sign > 0 ? o[i] : -o[i];
    }
}

// acc += o * {x}, where {x} = u^{2x} - u^{-2x} at the root
inline void add_times_brace(std::vector<i128>& acc, const std::vector<i128>& o, long x, const RootSpec& xi) {
    const long N = xi.quarter_modulus();
    long e = mul_mod(2 * (x % N), xi.l, N);
    if (e == 0 || 2 * e == N) return;  // u^{2x} = u^{-2x}
    add_shifted(acc, o, e, 1);
    add_shifted(acc, o, -e, -1);
}

// {1}^{n+1} * F as an element of Z[Z/4r]
inline RootSum chain_transfer(const Chain& ch, const RootSpec& xi) {
    const long N = xi.quarter_modulus();
    const auto colors = color_set(xi.theory, xi.r);
    const size_t K = colors.size();
    std::vector<std::vector<i128>> V(K, std::vector<i128>(N, 0)), W(K, std::vector<i128>(N, 0));
    std::vector<i128> unit(N, 0);
    unit[0] = 1;
    auto framing_exp = [&](long m, long j) { return mul_mod(m % N, mul_mod(j, j, N) - 1, N); };
    for (size_t a = 0; a < K; ++a) {
        std::vector<i128> tmp(N, 0);
        add_times_brace(tmp, unit, colors[a], xi);
        add_shifted(V[a], tmp, xi.u_exponent(framing_exp(ch.framings[0], colors[a])), 1);
    }
    for (size_t step = 1; step < ch.framings.size(); ++step) {
        for (size_t b = 0; b < K; ++b) {
            std::vector<i128> tmp(N, 0);
            for (size_t a = 0; a < K; ++a) add_times_brace(tmp, V[a], colors[a] * colors[b], xi);
            std::fill(W[b].begin(), W[b].end(), 0);
            add_shifted(W[b], tmp, xi.u_exponent(framing_exp(ch.framings[step], colors[b])), 1);
        }
        std::swap(V, W);
    }
    RootSum total(N);
    std::vector<i128> acc(N, 0);
    for (size_t a = 0; a < K; ++a) add_times_brace(acc, V[a], colors[a] * ch.d, xi);
    for (long i = 0; i < N; ++i)
        if (acc[i]) total.add(i, acc[i]);
    return total;
}

// literal sum of evaluated summands; used where {1} vanishes at the root
inline CycNumber chain_naive(const Chain& ch, const RootSpec& xi) {
    const auto colors = color_set(xi.theory, xi.r);
    const size_t n = ch.framings.size();
    std::vector<size_t> idx(n, 0);
    CycNumber total = CycNumber::zero(xi.quarter_modulus());
    while (true) {
        std::vector<long> js(n);
        for (size_t i = 0; i < n; ++i) js[i] = colors[idx[i]];
        total += eval_at_root(hopf_chain_bracket_product(js, ch.d, ch.framings), xi);
        size_t i = 0;
        while (i < n && ++idx[i] == colors.size()) idx[i++] = 0;
        if (i == n) break;
    }
    return total;
}

}  // namespace detail

// F for one framed Hopf chain, by state sum
inline CycNumber f_sum(const Chain& ch, const RootSpec& xi) {
    require(!ch.framings.empty(), "f_sum: empty chain");
    CycNumber brace1 = xi.u_pow(2) - xi.u_pow(-2);
    if (brace1.is_zero()) return detail::chain_naive(ch, xi);
    CycNumber s = detail::chain_transfer(ch, xi).to_cyc();
    return s * brace1.inverse().pow(static_cast<long>(ch.framings.size()) + 1);
}

inline CycNumber f_sum(const JonesFamily& fam, const RootSpec& xi) {
    if (fam.tag == JonesFamily::Tag::Unknot) return f_sum(Chain{{fam.framings[0]}, 1}, xi);
    return f_sum(Chain{fam.framings, fam.d}, xi);
}

// 2 gamma_b ev((1 - q^{-b_{*r}})^{chi(c)} / ((1-q)(1-q^{-1})))
inline CycNumber f_unknot_closed(long b, const RootSpec& xi) {
    require(b != 0, "f_unknot_closed: b must be nonzero");
    require(xi.r > 1, "f_unknot_closed: the closed form needs r > 1");
    CycNumber g = gamma(b, xi) * Rational(2);
    long c = gcd_ll(labs_ll(b), xi.r);
    CycNumber one = CycNumber::constant(1);
    CycNumber den = (one - xi.xi_pow(1)) * (one - xi.xi_pow(-1));
    if (c == 1) {
        g = g * (one - xi.xi_pow(-star_inverse(b, xi.r)));
    } else if (xi.theory == Theory::SU2 && xi.r % 2 == 0) {
        // the shifted sum sum_n q^{b(n^2-1)/4 + n} = u^{-b} G(4r,b,4)/2 need not vanish here
        const long R = 4 * xi.r, L = 8 * R;
        long lp = galois_lift(xi.l, R, L);
        RootSum s = gauss_closed_sum(R, b, 4).galois(lp).shifted(-8 * mul_mod(b, xi.l, R));
        g = g - s.to_cyc();
    }
    return g / den;
}

// F_{U^b}: closed form when available, state sum at r = 1
inline CycNumber f_unknot(long b, const RootSpec& xi) {
    if (xi.r == 1) return f_sum(Chain{{b}, 1}, xi);
    return f_unknot_closed(b, xi);
}

struct WrtValue {
    CycNumber value;
    Theory theory;
    RootSpec root;
};

inline void check_theory(const ManifoldSpec& M, const RootSpec& xi) {
    (void)M;
    require(xi.theory == Theory::SU2 || xi.r % 2 == 1, "SO3 invariants need odd r");
}

inline WrtValue tau(const ManifoldSpec& M, const RootSpec& xi) {
    check_theory(M, xi);
    CycNumber F = CycNumber::constant(1);
    int sp = 0, sm = 0;
    for (const auto& ch : surgery_chains(M)) {
        F = F * f_sum(ch, xi);
        Inertia in = signature(chain_linking_matrix(ch));
        sp += in.positive;
        sm += in.negative;
    }
    CycNumber norm = CycNumber::constant(1);
    if (sp) norm = norm * f_unknot(1, xi).pow(sp);
    if (sm) norm = norm * f_unknot(-1, xi).pow(sm);
    ensure(!norm.is_zero(), "tau: vanishing normalisation");
    return {F / norm, xi.theory, xi};
}

// tau_{L(b,1)} = F_{U^b} / F_{U^{sn b}}
inline CycNumber tau_lens_b1(long b, const RootSpec& xi) {
    return f_unknot(b, xi) / f_unknot(sn(b), xi);
}

inline CycNumber renormalizer(long h1, const RootSpec& xi) {
    CycNumber r = CycNumber::constant(1);
    for (auto [p, k] : factorize(h1)) r = r * tau_lens_b1(ipow(p, k), xi);
    return r;
}

// prime-power orders of the cyclic summands of H_1, one factorization per lens piece or framing
inline std::vector<long> homology_prime_powers(const ManifoldSpec& M) {
    std::vector<long> orders, out;
    for (const auto& p : M.pieces) {
        if (auto* lp = std::get_if<LensPiece>(&p)) orders.push_back(labs_ll(lp->b));
        else
            for (long f : std::get<DiagonalPiece>(p).framings) orders.push_back(labs_ll(f));
    }
    for (long o : orders)
        for (auto [p, k] : factorize(o)) out.push_back(ipow(p, k));
    return out;
}

inline WrtValue tau_prime(const ManifoldSpec& M, const RootSpec& xi) {
    long h1 = homology_order(M);
    require(xi.theory == Theory::SO3 || h1 % 2 == 1, "SU2 renormalisation needs odd |H_1|");
    WrtValue t = tau(M, xi);
    CycNumber R = CycNumber::constant(1);
    for (long b : homology_prime_powers(M)) R = R * tau_lens_b1(b, xi);
    ensure(!R.is_zero(), "tau_prime: vanishing renormaliser");
    t.value = t.value / R;
    return t;
}


// ---- lens spaces in closed form -------------------------------------------------

namespace detail {

inline long residue(const Integer& z, long m) {
    Integer t = z % m;
    return pmod(to_ll(t), m);
}

inline Integer exact_integer(const Rational& x, const char* what) {
    ensure(x.get_den() == 1, what);
    return x.get_num();
}

// one sign branch of the closed formula; nullopt unless c | |a|d + pm.
// pm = -1 is the branch used whenever it applies (always for c = 1); the pm = +1 branch
// carries an extra factor -1.
inline std::optional<CycNumber> lens_closed_branch(long b, long a, long d, const RootSpec& xi, int pm) {
    const long r = xi.r, c = gcd_ll(labs_ll(b), r);
    const long sa = sn(a), sb = sn(b);
    if ((labs_ll(a) * d + pm) % c != 0) return std::nullopt;
    const long as = star_pair(a, b).n_star_m;
    const long bp = b / c, rp = r / c;
    const long bps = star_inverse(bp, rp);
    const Rational ded = 12 * dedekind_sum(1, b) - 12 * sb * dedekind_sum(a, b);
    const Integer A(a), D(d), AS(as);
    const Integer base = A * (1 - D * D) + 2 * (-pm * sa * D - sb);
    const bool neg = sn(a * b) == -1;
    CycNumber one = CycNumber::constant(1);
    CycNumber val;
    int s = pm == 1 ? -1 : 1;
    if (xi.theory == Theory::SO3) {
        Integer w = AS + pm * sa * D;
        Integer u = exact_integer(ded + Rational(base + A * w * w) / Integer(b), "lens: u not integral");
        Integer aw = A * w * w;
        ensure(aw % c == 0, "lens: exponent not integral");
        long four = star_inverse(4, r);
        Integer e = four * u - Integer(four) * bps * (aw / c);
        if (neg && ((c + 1) / 2) % 2) s = -s;
        val = xi.xi_pow(residue(e, r)) * Rational(s * jacobi(labs_ll(a), c));
    } else {
        require(labs_ll(b) % 2 == 1, "SU2 lens formula needs odd b");
        Integer v = sa * A * D + pm, t = Integer(sb * bp - 1);
        Integer u = exact_integer(ded + Rational(base + AS * v * v * t * t) / Integer(b), "lens: u not integral");
        Integer vv = v * v, tt = t * t;
        ensure(vv % c == 0 && tt % 4 == 0, "lens: exponent not integral");
        Integer e = u - 4 * (Integer(bps) * AS * (vv / c) * (tt / 4));
        if (neg && ((labs_ll(bp) + 1) / 2) % 2) s = -s;
        val = xi.u_pow(residue(e, 4 * r)) * Rational(s * jacobi(labs_ll(a), labs_ll(bp)));
    }
    if (c == 1) {
        long bs = star_inverse(b, r);
        val = val * (one - xi.xi_pow(pm * sa * d * bs)) / (one - xi.xi_pow(pm * sb * bs));
    }
    return val;
}

}  // namespace detail

// tau_{M(b,a;d)} / tau_{L(|b|,1)} by the closed formula; 0 when c = (b,r) divides neither |a|d - 1 nor |a|d + 1
inline CycNumber lens_closed_formula(long b, long a, long d, const RootSpec& xi) {
    require(gcd_ll(a, b) == 1, "lens: a and b must be coprime");
    require(a != 0 && labs_ll(a) < labs_ll(b), "lens: need 0 < |a| < |b|");
    require(d >= 1 && d % 2 == 1, "lens: knot colour must be odd and positive");
    require(xi.r > 1, "lens: closed form needs r > 1");
    require(xi.theory == Theory::SO3 || labs_ll(b) % 2 == 1, "SU2 lens formula needs odd b");
    for (int pm : {-1, 1})
        if (auto v = detail::lens_closed_branch(b, a, d, xi, pm)) return *v;
    return CycNumber::zero(xi.theory == Theory::SO3 ? xi.r : 4 * xi.r);
}

// tau' renormalised over the prime-power factors of |b|; differs from the formula above only for composite |b|
inline CycNumber lens_tau_prime_closed(long b, long a, long d, const RootSpec& xi) {
    CycNumber v = lens_closed_formula(b, a, d, xi);
    long B = labs_ll(b);
    if (v.is_zero() || is_prime_power(B)) return v;
    return v * tau_lens_b1(B, xi) / renormalizer(B, xi);
}

}  // namespace wrt
