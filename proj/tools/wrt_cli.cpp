#include "wrt/suites.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iomanip>
#include <iostream>
#include <regex>
#include <set>

using namespace wrt;
using json = nlohmann::json;

namespace {

struct Output {
    bool as_json = false;
    bool with_float = false;
};

std::string plain(const CycNumber& v) {
    CycNumber m = v.minimal();
    if (m.coeffs().size() == 1) return wrt::to_string(m.coeffs()[0]);
    return m.to_string();
}

std::complex<double> tidy(std::complex<double> z) {
    double re = std::abs(z.real()) < 1e-12 ? 0.0 : z.real(), im = std::abs(z.imag()) < 1e-12 ? 0.0 : z.imag();
    return {re, im};
}

std::string float_text(std::complex<double> z) {
    z = tidy(z);
    std::ostringstream o;
    o << std::setprecision(15) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return o.str();
}

void emit_value(const Output& out, const std::string& cmd, const json& inputs, const CycNumber& v) {
    CycNumber m = v.minimal();
    if (out.as_json) {
        json coeffs = json::array();
        for (const auto& c : m.coeffs()) coeffs.push_back(wrt::to_string(c));
        json fl = nullptr;
        if (out.with_float) {
            auto z = tidy(m.to_complex());
            fl = json::array({z.real(), z.imag()});
        }
        std::cout << json{{"command", cmd}, {"inputs", inputs}, {"modulus", m.modulus()}, {"coeffs", coeffs}, {"float", fl}}.dump()
                  << "\n";
        return;
    }
    std::cout << plain(m) << "\n";
    if (out.with_float) std::cout << "float: " << float_text(m.to_complex()) << "\n";
}

// rational-valued or list-valued results; modulus is null
void emit_list(const Output& out, const std::string& cmd, const json& inputs, const std::vector<std::string>& items,
               const std::string& text) {
    if (out.as_json) {
        std::cout << json{{"command", cmd}, {"inputs", inputs}, {"modulus", nullptr}, {"coeffs", items}, {"float", nullptr}}.dump()
                  << "\n";
        return;
    }
    std::cout << text << "\n";
}

std::vector<long> parse_longs(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        require(!item.empty(), "empty entry in list '" + s + "'");
        size_t pos = 0;
        long v = std::stol(item, &pos);
        require(pos == item.size(), "bad integer '" + item + "'");
        out.push_back(v);
    }
    return out;
}

// "L(3,1);L(5,2,d=3)"
ManifoldSpec parse_pieces(const std::string& s) {
    static const std::regex piece(R"(\s*L\((-?\d+),(-?\d+)(?:,d=(\d+))?\)\s*)");
    ManifoldSpec M;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) {
        std::smatch m;
        require(std::regex_match(item, m, piece), "bad piece '" + item + "' (expected L(b,a) or L(b,a,d=k))");
        long d = m[3].matched ? std::stol(m[3]) : 1;
        M.pieces.push_back(LensPiece{std::stol(m[1]), std::stol(m[2]), d});
    }
    require(!M.pieces.empty(), "no pieces given");
    return M;
}

std::string laurent_text(const QuarterLaurent& f) { return f.to_string(); }

json laurent_terms(const QuarterLaurent& f) {
    json a = json::array();
    for (const auto& [e, c] : f.terms()) a.push_back(json::array({e, wrt::to_string(c)}));
    return a;
}

const std::set<std::string> kCommands{"gauss", "gamma", "dedekind", "cfrac", "jones", "cyccoeffs",
                                      "wrt", "unified", "frobenius", "verify"};

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1 && argv[1][0] != '-' && !kCommands.count(argv[1])) {
        std::cerr << "unknown subcommand '" << argv[1] << "'\n";
        return 2;
    }

    CLI::App app{"exact quantum invariants of lens spaces and diagonal rational homology spheres"};
    app.require_subcommand(1);
    app.fallthrough();
    Output out;
    app.add_flag("--json", out.as_json, "one JSON record per result");
    app.add_flag("--float", out.with_float, "also print a complex approximation");

    long r = 1, l = 1, x = 1, y = 0, b = 1, a = 1, d = 1, n = 1, k = 1, horizon = 8, j = 1;
    std::string theory = "so3";
    int status = 0;

    auto add_root = [&](CLI::App* s) {
        s->add_option("--r", r, "order of the root")->required();
        s->add_option("--l", l, "xi = e_r^l");
        s->add_option("--theory", theory, "so3 or su2");
    };

    // gauss
    auto* g = app.add_subcommand("gauss", "G(r,x,y) = sum_j e_r^{x j^2 + y j}");
    bool closed = false;
    g->add_option("--r", r)->required();
    g->add_option("--x", x)->required();
    g->add_option("--y", y)->required();
    g->add_flag("--closed", closed, "closed form instead of the direct sum");
    g->callback([&] {
        CycNumber v = closed ? gauss_closed(r, x, y) : gauss_brute(r, x, y);
        emit_value(out, "gauss", {{"r", r}, {"x", x}, {"y", y}, {"closed", closed}}, v);
    });

    // gamma
    auto* ga = app.add_subcommand("gamma", "gamma_b over the colour set");
    bool brute = false;
    ga->add_option("--b", b)->required();
    add_root(ga);
    ga->add_flag("--brute", brute, "direct sum instead of the closed form");
    ga->callback([&] {
        RootSpec xi(r, l, parse_theory(theory));
        emit_value(out, "gamma", {{"b", b}, {"r", r}, {"l", l}, {"theory", theory}, {"brute", brute}},
                   gamma(b, xi, brute ? GammaMode::Brute : GammaMode::Closed));
    });

    // dedekind
    auto* de = app.add_subcommand("dedekind", "Dedekind sum s(a,b)");
    de->add_option("--a", a)->required();
    de->add_option("--b", b)->required();
    de->callback([&] {
        Rational s = dedekind_sum(a, b);
        emit_list(out, "dedekind", {{"a", a}, {"b", b}}, {wrt::to_string(s)}, wrt::to_string(s));
    });

    // cfrac
    auto* cf = app.add_subcommand("cfrac", "negative continued fraction of b/a");
    cf->add_option("--b", b)->required();
    cf->add_option("--a", a)->required();
    cf->callback([&] {
        auto m = neg_continued_fraction(b, a);
        std::vector<std::string> items;
        std::string text;
        for (long v : m) {
            items.push_back(std::to_string(v));
            text += (text.empty() ? "" : " ") + std::to_string(v);
        }
        emit_list(out, "cfrac", {{"b", b}, {"a", a}}, items, text);
    });

    // jones
    auto* jo = app.add_subcommand("jones", "coloured Jones polynomial, variable u = q^{1/4}");
    std::string family = "unknot", framings_s = "0", colors_s = "1";
    jo->add_option("--family", family, "unknot or hopfchain");
    jo->add_option("--framings", framings_s);
    jo->add_option("--colors", colors_s)->required();
    jo->add_option("--d", d, "colour of the knot on the last chain component");
    jo->callback([&] {
        auto fr = parse_longs(framings_s), co = parse_longs(colors_s);
        require(family == "unknot" || family == "hopfchain", "unknown family '" + family + "'");
        JonesFamily fam = family == "unknot" ? JonesFamily::unknot(fr.at(0)) : JonesFamily::hopf_chain(fr, d);
        QuarterLaurent v = jones_value(fam, co);
        json in{{"family", family}, {"framings", fr}, {"colors", co}, {"d", d}};
        if (out.as_json) {
            std::cout << json{{"command", "jones"}, {"inputs", in}, {"modulus", nullptr}, {"coeffs", laurent_terms(v)}, {"float", nullptr}}.dump()
                      << "\n";
        } else {
            std::cout << laurent_text(v) << "\n";
        }
    });

    // cyccoeffs
    auto* cc = app.add_subcommand("cyccoeffs", "cyclotomic expansion coefficients C(k)");
    std::string cfamily = "unknot";
    cc->add_option("--family", cfamily, "unknot or hopf");
    cc->add_option("--j", j, "colour of the second Hopf component");
    cc->add_option("--horizon", horizon, "solve for n = 1..T");
    cc->callback([&] {
        require(cfamily == "unknot" || cfamily == "hopf", "unknown family '" + cfamily + "'");
        auto vals = cfamily == "unknot" ? unknot_jones_values(horizon) : hopf_jones_values(j, horizon);
        CycCoeffs C = cyclotomic_coeffs(vals, horizon);
        json in{{"family", cfamily}, {"j", j}, {"horizon", horizon}};
        if (out.as_json) {
            json items = json::array();
            for (const auto& e : C.entries)
                items.push_back({{"num", laurent_terms(e.num)}, {"den", laurent_terms(e.den)}, {"integral", e.integral}});
            std::cout << json{{"command", "cyccoeffs"}, {"inputs", in}, {"modulus", nullptr}, {"coeffs", items}, {"float", nullptr}}.dump()
                      << "\n";
        } else {
            for (size_t i = 0; i < C.entries.size(); ++i) {
                const auto& e = C.entries[i];
                std::cout << "C(" << i << ") = " << laurent_text(e.num);
                if (!e.exact) std::cout << "  /  (" << laurent_text(e.den) << ")";
                std::cout << (e.integral ? "  [integral]" : "  [not integral]") << "\n";
            }
            std::cout << "reconstruction: " << (C.reconstruction_ok ? "ok" : "FAILED") << "\n";
        }
        if (!C.reconstruction_ok) status = 3;
    });

    // wrt lens / connsum
    auto* w = app.add_subcommand("wrt", "renormalised WRT invariant tau'");
    w->require_subcommand(1);
    auto* wl = w->add_subcommand("lens", "M(b,a;d)");
    std::string route = "closed";
    wl->add_option("--b", b)->required();
    wl->add_option("--a", a)->required();
    wl->add_option("--d", d);
    add_root(wl);
    auto* rg = wl->add_option_group("route");
    rg->add_flag_callback("--closed", [&] { route = "closed"; });
    rg->add_flag_callback("--brute", [&] { route = "brute"; });
    rg->add_flag_callback("--both", [&] { route = "both"; });
    rg->require_option(0, 1);
    wl->callback([&] {
        RootSpec xi(r, l, parse_theory(theory));
        json in{{"b", b}, {"a", a}, {"d", d}, {"r", r}, {"l", l}, {"theory", theory}, {"route", route}};
        if (route == "closed") {
            emit_value(out, "wrt lens", in, lens_tau_prime_closed(b, a, d, xi));
        } else if (route == "brute") {
            emit_value(out, "wrt lens", in, tau_prime(ManifoldSpec::lens(b, a, d), xi).value);
        } else {
            CycNumber c = lens_tau_prime_closed(b, a, d, xi), s = tau_prime(ManifoldSpec::lens(b, a, d), xi).value;
            emit_value(out, "wrt lens", in, s);
            if (c != s) {
                std::cerr << "mismatch: closed " << plain(c) << " vs state sum " << plain(s) << "\n";
                status = 3;
            }
        }
    });
    auto* wc = w->add_subcommand("connsum", "connected sum of lens pieces");
    std::string pieces;
    wc->add_option("--pieces", pieces, "e.g. \"L(3,1);L(5,2,d=3)\"")->required();
    add_root(wc);
    wc->callback([&] {
        RootSpec xi(r, l, parse_theory(theory));
        emit_value(out, "wrt connsum", {{"pieces", pieces}, {"r", r}, {"l", l}, {"theory", theory}},
                   tau_prime(parse_pieces(pieces), xi).value);
    });

    // unified lens / diagonal
    auto* u = app.add_subcommand("unified", "evaluation of unified invariants");
    u->require_subcommand(1);
    auto* ul = u->add_subcommand("lens", "I^eps of M(b,a;d(eps)) at xi");
    std::string eps_s;
    ul->add_option("--b", b)->required();
    ul->add_option("--a", a)->required();
    ul->add_option("--eps", eps_s, "0 or 0bar (default: from r)");
    add_root(ul);
    ul->callback([&] {
        Theory t = parse_theory(theory);
        RootSpec xi(r, l, t);
        Eps e = eps_for_root(b, r);
        if (!eps_s.empty()) {
            require(eps_s == "0" || eps_s == "0bar", "eps must be 0 or 0bar");
            e = eps_s == "0" ? Eps::Zero : Eps::ZeroBar;
        }
        UnifiedLensInvariant I = unified_lens(b, a, e, t);
        emit_value(out, "unified lens", {{"b", b}, {"a", a}, {"eps", to_string(e)}, {"d", I.d}, {"r", r}, {"l", l}, {"theory", theory}},
                   unified_lens_eval(I, xi));
    });
    auto* ud = u->add_subcommand("diagonal", "diagonal framings, optional coloured unknot on the first");
    std::string fr_s;
    long knot = 0;
    bool verify_diag = false;
    ud->add_option("--framings", fr_s)->required();
    ud->add_option("--knot-color", knot, "odd colour, linked once with the first component");
    ud->add_flag("--verify", verify_diag, "compare with the state-sum tau'");
    add_root(ud);
    ud->callback([&] {
        RootSpec xi(r, l, parse_theory(theory));
        ManifoldSpec M = ManifoldSpec::diagonal(parse_longs(fr_s), knot > 1 ? std::optional<long>(knot) : std::nullopt);
        CycNumber v = unified_diagonal_eval(M, xi);
        emit_value(out, "unified diagonal", {{"framings", fr_s}, {"knot_color", knot}, {"r", r}, {"l", l}, {"theory", theory}}, v);
        if (verify_diag) {
            CycNumber s = tau_prime(M, xi).value;
            bool ok = s == v;
            std::cerr << (ok ? "match" : "MISMATCH") << " with state-sum tau' " << plain(s) << "\n";
            if (!ok) status = 3;
        }
    });

    // frobenius
    auto* fb = app.add_subcommand("frobenius", "q -> q^b on Z[1/b][q]/(Phi_n^k)");
    bool index = false, root = false;
    fb->add_option("--n", n)->required();
    fb->add_option("--k", k)->required();
    fb->add_option("--b", b)->required();
    fb->add_flag("--index", index, "lattice index of the image");
    fb->add_flag("--root", root, "the b-th root of q");
    fb->callback([&] {
        json in{{"n", n}, {"k", k}, {"b", b}};
        if (root) {
            QuotientElement y = qth_root(n, k, b);
            std::vector<std::string> items;
            std::string text;
            for (const auto& c : y.values()) {
                items.push_back(wrt::to_string(c));
                text += (text.empty() ? "" : " ") + wrt::to_string(c);
            }
            in["what"] = "root";
            emit_list(out, "frobenius", in, items, text);
        } else {
            (void)index;
            Integer got = lattice_index(n, k, b), want = expected_lattice_index(n, k, b);
            in["what"] = "index";
            emit_list(out, "frobenius", in, {got.get_str(), want.get_str()},
                      got.get_str() + " (expected " + want.get_str() + ")");
            if (got != want) status = 3;
        }
    });

    // verify
    auto* ve = app.add_subcommand("verify", "run acceptance suites");
    std::string suite;
    bool all = false;
    ve->add_option("--suite", suite, "suite name or criterion number");
    ve->add_flag("--all", all, "every suite");
    ve->callback([&] {
        std::vector<const SuiteEntry*> todo;
        if (all) {
            for (const auto& e : suites()) todo.push_back(&e);
        } else {
            const SuiteEntry* e = find_suite(suite);
            if (!e) {
                std::string names;
                for (const auto& s : suites()) names += " " + s.name;
                throw PreconditionError("unknown suite '" + suite + "'; available:" + names);
            }
            todo.push_back(e);
        }
        for (const SuiteEntry* e : todo) {
            RunReport rep = e->run();
            if (!rep.ok()) status = 3;
            if (out.as_json) {
                json in{{"suite", rep.suite}, {"run", rep.run}, {"passed", rep.passed}, {"skipped", rep.skipped},
                        {"first_failure", rep.first_failure ? json(*rep.first_failure) : json(nullptr)}, {"note", rep.note}};
                std::cout << json{{"command", "verify"}, {"inputs", in}, {"modulus", nullptr},
                                  {"coeffs", json::array({rep.passed, rep.run})}, {"float", nullptr}}.dump()
                          << "\n";
            } else {
                std::cout << rep.suite << ": " << rep.passed << "/" << rep.run << " passed";
                if (rep.skipped) std::cout << ", " << rep.skipped << " skipped";
                if (!rep.note.empty()) std::cout << " (" << rep.note << ")";
                std::cout << "\n";
                if (rep.first_failure) std::cout << "  first failure: " << *rep.first_failure << "\n";
            }
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return status;
}
