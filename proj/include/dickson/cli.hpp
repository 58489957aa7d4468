#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "dickson/dickson.hpp"
#include "dickson/report.hpp"

namespace dickson {

namespace detail {

inline unsigned thread_count() {
    if (const char* env = std::getenv("DICKSON_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 256) return unsigned(v);
    }
    return 1;
}

/// Runs check(n) for n in [n_min, n_max], optionally striped over
/// DICKSON_THREADS workers; the result order is fixed by n either way.
template <class Check>
std::vector<char> sweep_n(unsigned n_min, unsigned n_max, Check check) {
    const std::size_t count = n_max - n_min + 1;
    std::vector<char> ok(count, 0);
    const unsigned workers = thread_count();
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            ok[i] = check(n_min + unsigned(i)) ? 1 : 0;
        return ok;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&ok, &check, n_min, count, workers, t] {
            for (std::size_t i = t; i < count; i += workers)
                ok[i] = check(n_min + unsigned(i)) ? 1 : 0;
        });
    for (auto& th : pool) th.join();
    return ok;
}

/// Portable bounded draw (uniform_int_distribution is not pinned across
/// standard libraries, and reports must be reproducible from --seed).
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;  // bias is irrelevant for test-point generation
}

inline Rational random_rational(std::mt19937_64& rng, long num_bound, long den_bound) {
    const long num = long(draw(rng, std::uint64_t(2 * num_bound + 1))) - num_bound;
    const long den = long(draw(rng, std::uint64_t(den_bound))) + 1;
    return Rational(num, den);
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, long num_bound,
                                        long den_bound) {
    for (;;) {
        Rational r = random_rational(rng, num_bound, den_bound);
        if (!r.is_zero()) return r;
    }
}

/// D_{n,k}(x, a) mod p through the three-term recurrence — a second route
/// with no closed-form coefficients, used to cross-check ff_is_permutation.
inline std::uint64_t rec_eval_mod_p(unsigned n, unsigned k, std::uint64_t a,
                                    std::uint64_t x, std::uint64_t p) {
    std::uint64_t prev = ((2 + std::int64_t(p) * std::int64_t(k) - std::int64_t(k)) %
                          std::int64_t(p));  // 2 - k reduced
    if (n == 0) return prev;
    std::uint64_t cur = x % p;
    for (unsigned j = 2; j <= n; ++j) {
        const std::uint64_t next = (x % p * cur + (p - a % p) * prev) % p;
        prev = cur;
        cur = next;
    }
    return cur;
}

inline bool perm_by_recurrence(unsigned n, unsigned k, std::uint64_t a,
                               std::uint64_t p) {
    std::vector<bool> seen(p, false);
    for (std::uint64_t x = 0; x < p; ++x) {
        const std::uint64_t y = rec_eval_mod_p(n, k, a, x, p);
        if (seen[y]) return false;
        seen[y] = true;
    }
    return true;
}

inline Json bool_json(bool b) { return b; }

}  // namespace detail

/// Parses argv (without the program name), runs the selected subcommand,
/// and emits a RunReport on `out` (or --out <path>). Exit codes: 0 pass,
/// 1 verification failure, 2 usage or domain error.
inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
    struct Options {
        std::string format = "json";
        std::string out_path;
        bool timing = false;

        unsigned n = 0;
        unsigned n_min = 1;
        unsigned n_max = 0;
        unsigned k = 0;
        unsigned kind_ordinal = 1;
        std::string b_value;  // dickson_type parameter B
        std::string a_rat = "1";
        std::uint64_t seed = 1;
        unsigned trials = 100;
        std::uint64_t p = 0;
        std::uint64_t a_ff = 0;
        std::uint64_t x_ff = 0;
        unsigned p_max = 50;
        unsigned k_max = 3;
        bool all_a = false;

        double x_real = 0.0;
        double a_real = 1.0;
        double b_param = 0.0;
        double c_param = 0.0;
        double z = 0.0;
        double z_re = 0.0;
        double z_im = 0.0;
        double z_min = 0.0, z_max = 0.0;
        double x_min = 0.0, x_max = 0.0;
        unsigned steps = 0;
        std::string which = "p";
        double tol = 1e-6;
        double a_re = 1.0, a_im = 0.0, b_re = 0.0, b_im = 0.0;
        std::vector<double> xs;
        unsigned samples = 8;
    } o;

    enum class Cmd {
        None, Gen, VerifyLemma, VerifyFirst, VerifySecond, VerifyFunctional,
        VerifyFf, Particular, Decompose, FitStoll, SpecialGamma, Special2F1,
        SpecialP, SpecialQ, SpecialResidual, SpecialFc, FitConstants, FfEval,
        FfPerm
    };
    Cmd cmd = Cmd::None;

    CLI::App app{"Dickson polynomial families: exact identities and Legendre-function numerics"};
    app.name("dickson");
    app.require_subcommand(1);
    app.add_option("--format", o.format, "Report format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", o.out_path, "Write the report to a file instead of stdout");
    app.add_flag("--timing", o.timing, "Emit measured wall time (reports 0ms otherwise)");

    auto* gen = app.add_subcommand("gen", "Print one family member");
    gen->fallthrough();
    gen->add_option("--n", o.n, "Degree index")->required();
    auto* kind_opt = gen->add_option("--kind", o.kind_ordinal,
                                     "Family ordinal: 1 first, 2 second, 3 third, m -> k=m-1");
    gen->add_option("--b", o.b_value, "Dickson-type parameter B (rational, overrides --kind)")
        ->excludes(kind_opt);
    gen->callback([&] { cmd = Cmd::Gen; });

    auto* verify = app.add_subcommand("verify", "Exact identity checks");
    verify->require_subcommand(1);
    verify->fallthrough();
    {
        auto* lemma = verify->add_subcommand("lemma", "F_n against the non-homogeneous form");
        lemma->fallthrough();
        lemma->add_option("--n-min", o.n_min, "First index");
        lemma->add_option("--n-max", o.n_max, "Last index")->required();
        lemma->callback([&] { cmd = Cmd::VerifyLemma; });

        auto* first = verify->add_subcommand("first", "First-kind classical ODE");
        first->fallthrough();
        first->add_option("--n-min", o.n_min, "First index");
        first->add_option("--n-max", o.n_max, "Last index")->required();
        first->callback([&] { cmd = Cmd::VerifyFirst; });

        auto* second = verify->add_subcommand("second", "Second-kind classical ODE");
        second->fallthrough();
        second->add_option("--n-min", o.n_min, "First index");
        second->add_option("--n-max", o.n_max, "Last index")->required();
        second->callback([&] { cmd = Cmd::VerifySecond; });

        auto* functional = verify->add_subcommand(
            "functional", "Functional equations at random rational points");
        functional->fallthrough();
        functional->add_option("--n-max", o.n_max, "Check all 1 <= n <= n-max (default 32)");
        functional->add_option("--trials", o.trials, "Random (u, a) pairs per kind");
        functional->add_option("--seed", o.seed, "PRNG seed");
        functional->callback([&] { cmd = Cmd::VerifyFunctional; });

        auto* ff = verify->add_subcommand(
            "ff", "Permutation agreement against a recurrence-based check");
        ff->fallthrough();
        ff->add_option("--p-max", o.p_max, "Primes p < p-max");
        ff->add_option("--n-max", o.n_max, "Indices 1 <= n <= n-max (default 20)");
        ff->add_option("--k-max", o.k_max, "Kinds 0 <= k <= k-max");
        ff->callback([&] { cmd = Cmd::VerifyFf; });
    }

    auto* particular = app.add_subcommand("particular", "particular-solution coefficients b_k");
    particular->fallthrough();
    particular->add_option("--n", o.n, "Degree index")->required();
    particular->add_option("--a", o.a_rat, "Parameter a (rational)");
    particular->callback([&] { cmd = Cmd::Particular; });

    auto* decompose_cmd = app.add_subcommand("decompose", "Split F_n into particular + remainder");
    decompose_cmd->fallthrough();
    decompose_cmd->add_option("--n", o.n, "Degree index")->required();
    decompose_cmd->add_option("--a", o.a_rat, "Parameter a (rational)");
    decompose_cmd->callback([&] { cmd = Cmd::Decompose; });

    auto* fit_stoll_cmd = app.add_subcommand("fit-stoll", "Exact Stoll-form null space");
    fit_stoll_cmd->fallthrough();
    fit_stoll_cmd->add_option("--n", o.n, "Degree index")->required();
    fit_stoll_cmd->add_option("--k", o.k, "Family kind parameter");
    fit_stoll_cmd->callback([&] { cmd = Cmd::FitStoll; });

    auto* special = app.add_subcommand("special", "Special-function evaluation");
    special->require_subcommand(1);
    special->fallthrough();
    {
        auto* gamma = special->add_subcommand("gamma", "Gamma function");
        gamma->fallthrough();
        gamma->add_option("--x", o.x_real, "Argument")->required();
        gamma->callback([&] { cmd = Cmd::SpecialGamma; });

        auto* f21 = special->add_subcommand("2f1", "Gauss hypergeometric series");
        f21->fallthrough();
        f21->add_option("--a", o.a_real, "Upper parameter a")->required();
        f21->add_option("--b", o.b_param, "Upper parameter b")->required();
        f21->add_option("--c", o.c_param, "Lower parameter c")->required();
        f21->add_option("--z-re", o.z_re, "Argument, real part")->required();
        f21->add_option("--z-im", o.z_im, "Argument, imaginary part");
        f21->callback([&] { cmd = Cmd::Special2F1; });

        for (auto [name, tag, desc] :
             {std::tuple<const char*, Cmd, const char*>{"p", Cmd::SpecialP,
                                                        "Legendre P^{1/2}_nu"},
              std::tuple<const char*, Cmd, const char*>{"q", Cmd::SpecialQ,
                                                        "Legendre Q^{1/2}_nu"}}) {
            auto* sc = special->add_subcommand(name, desc);
            sc->fallthrough();
            sc->add_option("--n", o.n, "Family index")->required();
            auto* single = sc->add_option("--z", o.z, "Evaluation point");
            auto* lo = sc->add_option("--z-min", o.z_min, "Sweep start");
            auto* hi = sc->add_option("--z-max", o.z_max, "Sweep end");
            auto* st = sc->add_option("--steps", o.steps, "Sweep point count");
            lo->needs(hi, st)->excludes(single);
            const Cmd chosen = tag;
            sc->callback([&cmd, chosen] { cmd = chosen; });
        }

        auto* res = special->add_subcommand("residual",
                                            "Associated-Legendre ODE defect");
        res->fallthrough();
        res->add_option("--n", o.n, "Family index")->required();
        res->add_option("--z", o.z, "Evaluation point")->required();
        res->add_option("--which", o.which, "Function under test")
            ->check(CLI::IsMember({"p", "q"}));
        res->add_option("--tol", o.tol, "Pass threshold");
        res->callback([&] { cmd = Cmd::SpecialResidual; });

        auto* fc = special->add_subcommand("fc", "Homogeneous solution F_c");
        fc->fallthrough();
        fc->add_option("--n", o.n, "Family index")->required();
        fc->add_option("--a", o.a_real, "Parameter a > 0");
        auto* single = fc->add_option("--x", o.x_real, "Evaluation point");
        auto* lo = fc->add_option("--x-min", o.x_min, "Sweep start");
        auto* hi = fc->add_option("--x-max", o.x_max, "Sweep end");
        auto* st = fc->add_option("--steps", o.steps, "Sweep point count");
        lo->needs(hi, st)->excludes(single);
        fc->add_option("--A-re", o.a_re, "Constant A, real part");
        fc->add_option("--A-im", o.a_im, "Constant A, imaginary part");
        fc->add_option("--B-re", o.b_re, "Constant B, real part");
        fc->add_option("--B-im", o.b_im, "Constant B, imaginary part");
        fc->callback([&] { cmd = Cmd::SpecialFc; });
    }

    auto* fit_c = app.add_subcommand("fit-constants",
                                     "Least-squares A, B for the homogeneous part");
    fit_c->fallthrough();
    fit_c->add_option("--n", o.n, "Degree index")->required();
    fit_c->add_option("--a", o.a_real, "Parameter a > 0");
    fit_c->add_option("--x", o.xs, "Explicit sample points (>= 4)");
    fit_c->add_option("--samples", o.samples, "Evenly spaced sample count if --x absent");
    fit_c->add_option("--tol", o.tol, "Pass threshold on |A|, |B|");
    fit_c->callback([&] { cmd = Cmd::FitConstants; });

    auto* ff = app.add_subcommand("ff", "Prime-field evaluation");
    ff->require_subcommand(1);
    ff->fallthrough();
    {
        auto* eval_cmd = ff->add_subcommand("eval", "Evaluate D_{n,k}(x, a) mod p");
        eval_cmd->fallthrough();
        eval_cmd->add_option("--n", o.n, "Degree index")->required();
        eval_cmd->add_option("--k", o.k, "Family kind parameter");
        eval_cmd->add_option("--p", o.p, "Prime modulus")->required();
        eval_cmd->add_option("--a", o.a_ff, "Parameter a")->required();
        eval_cmd->add_option("--x", o.x_ff, "Point x")->required();
        eval_cmd->callback([&] { cmd = Cmd::FfEval; });

        auto* perm = ff->add_subcommand("perm", "Permutation test over F_p");
        perm->fallthrough();
        perm->add_option("--n", o.n, "Degree index")->required();
        perm->add_option("--k", o.k, "Family kind parameter");
        perm->add_option("--p", o.p, "Prime modulus")->required();
        auto* a_opt = perm->add_option("--a", o.a_ff, "Parameter a");
        perm->add_flag("--all-a", o.all_a, "Tabulate every a in F_p \\ {0}")
            ->excludes(a_opt);
        perm->callback([&] { cmd = Cmd::FfPerm; });
    }

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("dickson");
        for (const auto& s : args) argv.push_back(s.c_str());
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    RunReport rep;
    rep.command = "dickson";
    for (const auto& s : args) rep.command += " " + s;

    const auto t0 = std::chrono::steady_clock::now();
    try {
        switch (cmd) {
            case Cmd::None:
                err << "usage error: no subcommand selected\n";
                return 2;

            case Cmd::Gen: {
                ParamPoly f;
                Json desc;
                if (!o.b_value.empty()) {
                    const Rational B = Rational::from_string(o.b_value);
                    f = dickson_type(o.n, B);
                    desc = Json{{"family", "dickson-type"}, {"B", B.to_string()}, {"n", o.n}};
                } else {
                    if (o.kind_ordinal < 1)
                        throw DomainError("--kind is a 1-based ordinal");
                    const unsigned k = o.kind_ordinal - 1;
                    f = kth_kind(o.n, k);
                    desc = Json{{"family", "kth-kind"}, {"k", k}, {"n", o.n}};
                }
                rep.payload = desc;
                rep.payload["coefficients"] = to_json(f);
                rep.payload["pretty"] = to_string(f);
                rep.summary = "gen n=" + std::to_string(o.n) + ": " + to_string(f);
                rep.status = Status::Pass;
                break;
            }

            case Cmd::VerifyLemma:
            case Cmd::VerifyFirst:
            case Cmd::VerifySecond: {
                if (o.n_min < 1 || o.n_min > o.n_max)
                    throw DomainError("need 1 <= n-min <= n-max");
                const char* label = cmd == Cmd::VerifyLemma ? "lemma"
                                    : cmd == Cmd::VerifyFirst ? "first" : "second";
                auto check = [&](unsigned n) {
                    switch (cmd) {
                        case Cmd::VerifyLemma: return verify_lemma_third(n);
                        case Cmd::VerifyFirst:
                            return ode_residual(first_kind(n),
                                                known_form(KnownOde::First, n))
                                .is_zero_poly();
                        default:
                            return ode_residual(second_kind(n),
                                                known_form(KnownOde::Second, n))
                                .is_zero_poly();
                    }
                };
                const auto ok = detail::sweep_n(o.n_min, o.n_max, check);
                Json rows = Json::array();
                Json failures = Json::array();
                for (std::size_t i = 0; i < ok.size(); ++i) {
                    const unsigned n = o.n_min + unsigned(i);
                    rows.push_back(Json::array({n, bool(ok[i])}));
                    if (!ok[i]) failures.push_back(n);
                }
                rep.payload = Json{{"check", label},
                                   {"n_min", o.n_min},
                                   {"n_max", o.n_max},
                                   {"checked", ok.size()},
                                   {"failures", failures},
                                   {"table", Json{{"columns", Json::array({"n", "ok"})},
                                                  {"rows", rows}}}};
                rep.summary = std::string(label) + " n=" + std::to_string(o.n_min) +
                              ".." + std::to_string(o.n_max);
                rep.status = failures.empty() ? Status::Pass : Status::Fail;
                break;
            }

            case Cmd::VerifyFunctional: {
                if (o.n_max == 0) o.n_max = 32;
                std::mt19937_64 rng(o.seed);
                unsigned long failures = 0;
                Json examples = Json::array();
                auto record = [&](const char* kind, unsigned n, const Rational& u,
                                  const Rational& a, const Rational& r) {
                    if (r.is_zero()) return;
                    ++failures;
                    if (examples.size() < 5)
                        examples.push_back(Json{{"kind", kind},
                                                {"n", n},
                                                {"u", u.to_string()},
                                                {"a", a.to_string()},
                                                {"residual", r.to_string()}});
                };
                for (unsigned t = 0; t < o.trials; ++t) {
                    const Rational u = detail::random_nonzero_rational(rng, 50, 12);
                    Rational a = detail::random_rational(rng, 50, 12);
                    if (a == u * u) a += Rational(1);  // keep the third kind non-degenerate
                    const int sign = detail::draw(rng, 2) ? 1 : -1;
                    const Rational ub = Rational(sign) * abs(u);  // branch point
                    for (unsigned n = 1; n <= o.n_max; ++n) {
                        record("first", n, u, a,
                               functional_residual(FunctionalKind::First, n, u, a));
                        record("third", n, u, a,
                               functional_residual(FunctionalKind::Third, n, u, a));
                        record("third-degenerate", n, ub, ub * ub,
                               functional_residual(FunctionalKind::ThirdDegenerate, n,
                                                   ub, ub * ub, sign));
                    }
                }
                rep.payload = Json{{"n_max", o.n_max},
                                   {"trials", o.trials},
                                   {"seed", o.seed},
                                   {"kinds", Json::array({"first", "third", "third-degenerate"})},
                                   {"failures", failures},
                                   {"failure_examples", examples}};
                rep.summary = "functional trials=" + std::to_string(o.trials) +
                              " n<=" + std::to_string(o.n_max);
                rep.status = failures == 0 ? Status::Pass : Status::Fail;
                break;
            }

            case Cmd::VerifyFf: {
                if (o.n_max == 0) o.n_max = 20;
                unsigned long checked = 0, failures = 0;
                Json examples = Json::array();
                for (std::uint64_t p = 2; p < o.p_max; ++p) {
                    if (!is_prime(p)) continue;
                    for (std::uint64_t a = 1; a < p; ++a)
                        for (unsigned n = 1; n <= o.n_max; ++n)
                            for (unsigned k = 0; k <= o.k_max; ++k) {
                                const bool lib = ff_is_permutation(n, k, Fp(a, p));
                                const bool ind = detail::perm_by_recurrence(n, k, a, p);
                                ++checked;
                                if (lib != ind) {
                                    ++failures;
                                    if (examples.size() < 5)
                                        examples.push_back(Json{{"p", p},
                                                                {"a", a},
                                                                {"n", n},
                                                                {"k", k},
                                                                {"library", lib},
                                                                {"recurrence", ind}});
                                }
                            }
                }
                rep.payload = Json{{"p_max", o.p_max}, {"n_max", o.n_max},
                                   {"k_max", o.k_max}, {"checked", checked},
                                   {"failures", failures},
                                   {"failure_examples", examples}};
                rep.summary = "ff permutation agreement p<" + std::to_string(o.p_max) +
                              " n<=" + std::to_string(o.n_max) +
                              " k<=" + std::to_string(o.k_max);
                rep.status = failures == 0 ? Status::Pass : Status::Fail;
                break;
            }

            case Cmd::Particular: {
                const Rational a = Rational::from_string(o.a_rat);
                const ParticularCoeffs pc = particular_solution(o.n, a);
                const bool verified =
                    ode_residual(pc.polynomial(),
                                 known_form_at(KnownOde::ThirdNonhomogeneous, o.n, a))
                        .is_zero_poly();
                Json b = Json::array();
                for (const auto& c : pc.b) b.push_back(c.to_string());
                rep.payload = Json{{"n", o.n}, {"a", a.to_string()}, {"b", b},
                                   {"verified", verified}};
                rep.summary = "particular n=" + std::to_string(o.n) + " a=" + a.to_string();
                rep.status = verified ? Status::Pass : Status::Fail;
                break;
            }

            case Cmd::Decompose: {
                const Rational a = Rational::from_string(o.a_rat);
                const DecomposeReport d = decompose(o.n, a);
                Json b = Json::array();
                for (const auto& c : d.particular.b) b.push_back(c.to_string());
                rep.payload = Json{{"n", o.n},
                                   {"a", a.to_string()},
                                   {"b", b},
                                   {"remainder", to_json(d.remainder)},
                                   {"remainder_zero", d.remainder.is_zero_poly()},
                                   {"remainder_solves_homogeneous",
                                    d.remainder_is_homogeneous_solution}};
                rep.summary = "decompose n=" + std::to_string(o.n) + " a=" + a.to_string();
                rep.status = d.remainder_is_homogeneous_solution ? Status::Pass
                                                                 : Status::Fail;
                break;
            }

            case Cmd::FitStoll: {
                try {
                    const StollBasis basis = fit_stoll(o.n, o.k);
                    const ParamPoly f = kth_kind(o.n, o.k);
                    bool verified = true;
                    Json vecs = Json::array();
                    for (const auto& v : basis.basis) {
                        verified = verified && stoll_residual(v, f).is_zero_poly();
                        Json row = Json::array();
                        for (const auto& c : v) row.push_back(c.to_string());
                        vecs.push_back(row);
                    }
                    rep.payload = Json{{"n", o.n}, {"k", o.k},
                                       {"dimension", basis.dimension()},
                                       {"unknown_order",
                                        Json::array({"A4", "A2", "A0", "B3", "B1", "C2", "C0"})},
                                       {"basis", vecs},
                                       {"verified", verified}};
                    rep.status = verified ? Status::Pass : Status::Fail;
                } catch (const EmptyBasis&) {
                    rep.payload = Json{{"n", o.n}, {"k", o.k}, {"dimension", 0},
                                       {"basis", Json::array()}, {"verified", false}};
                    rep.status = Status::Fail;
                }
                rep.summary = "fit-stoll n=" + std::to_string(o.n) +
                              " k=" + std::to_string(o.k);
                break;
            }

            case Cmd::SpecialGamma: {
                const double v = gamma_fn(o.x_real);
                rep.payload = Json{{"x", o.x_real}, {"value", v}};
                rep.summary = "gamma x=" + std::to_string(o.x_real);
                rep.status = Status::Pass;
                break;
            }

            case Cmd::Special2F1: {
                const Complex v =
                    hyp2f1(o.a_real, o.b_param, o.c_param, Complex(o.z_re, o.z_im));
                rep.payload = Json{{"a", o.a_real}, {"b", o.b_param}, {"c", o.c_param},
                                   {"z", to_json(Complex(o.z_re, o.z_im))},
                                   {"value", to_json(v)}};
                rep.summary = "2f1";
                rep.status = Status::Pass;
                break;
            }

            case Cmd::SpecialP:
            case Cmd::SpecialQ: {
                const LegendreParams params(o.n);
                const bool is_p = cmd == Cmd::SpecialP;
                auto eval = [&](double z) {
                    return is_p ? legendre_p_half(params, z)
                                : legendre_q_half(params, z);
                };
                const char* label = is_p ? "p" : "q";
                if (o.steps > 0) {
                    if (o.steps < 2 || !(o.z_min < o.z_max))
                        throw DomainError("sweep needs z-min < z-max and steps >= 2");
                    Json rows = Json::array();
                    for (unsigned i = 0; i < o.steps; ++i) {
                        const double z =
                            o.z_min + (o.z_max - o.z_min) * double(i) / double(o.steps - 1);
                        const Complex v = eval(z);
                        const double res = assoc_legendre_ode_residual(
                            params, z, is_p ? LegendreKind::P : LegendreKind::Q);
                        rows.push_back(Json::array({z, v.real(), v.imag(), res}));
                    }
                    rep.payload =
                        Json{{"n", o.n}, {"nu", params.nu},
                             {"table",
                              Json{{"columns", Json::array({"x", "re", "im", "residual"})},
                                   {"rows", rows}}}};
                    rep.summary = std::string("special ") + label + " sweep n=" +
                                  std::to_string(o.n);
                } else {
                    const Complex v = eval(o.z);
                    rep.payload = Json{{"n", o.n}, {"nu", params.nu}, {"z", o.z},
                                       {"value", to_json(v)}};
                    rep.summary = std::string("special ") + label + " n=" +
                                  std::to_string(o.n) + " z=" + std::to_string(o.z);
                }
                rep.status = Status::Pass;
                break;
            }

            case Cmd::SpecialResidual: {
                const LegendreParams params(o.n);
                const double r = assoc_legendre_ode_residual(
                    params, o.z, o.which == "p" ? LegendreKind::P : LegendreKind::Q);
                rep.payload = Json{{"n", o.n}, {"z", o.z}, {"which", o.which},
                                   {"residual", r}, {"tol", o.tol}};
                rep.summary = "residual " + o.which + " n=" + std::to_string(o.n) +
                              " z=" + std::to_string(o.z);
                rep.status = r < o.tol ? Status::Pass : Status::Fail;
                break;
            }

            case Cmd::SpecialFc: {
                const Complex A(o.a_re, o.a_im), B(o.b_re, o.b_im);
                if (o.steps > 0) {
                    if (o.steps < 2 || !(o.x_min < o.x_max))
                        throw DomainError("sweep needs x-min < x-max and steps >= 2");
                    Json rows = Json::array();
                    for (unsigned i = 0; i < o.steps; ++i) {
                        const double x =
                            o.x_min + (o.x_max - o.x_min) * double(i) / double(o.steps - 1);
                        const Complex v = homogeneous_eval(o.n, o.a_real, x, A, B);
                        const double res =
                            homogeneous_ode_residual(o.n, o.a_real, x, A, B);
                        rows.push_back(Json::array({x, v.real(), v.imag(), res}));
                    }
                    rep.payload =
                        Json{{"n", o.n}, {"a", o.a_real},
                             {"A", to_json(A)}, {"B", to_json(B)},
                             {"table",
                              Json{{"columns", Json::array({"x", "re", "im", "residual"})},
                                   {"rows", rows}}}};
                    rep.summary = "special fc sweep n=" + std::to_string(o.n);
                } else {
                    const Complex v = homogeneous_eval(o.n, o.a_real, o.x_real, A, B);
                    rep.payload = Json{{"n", o.n}, {"a", o.a_real}, {"x", o.x_real},
                                       {"A", to_json(A)}, {"B", to_json(B)},
                                       {"value", to_json(v)}};
                    rep.summary = "special fc n=" + std::to_string(o.n) +
                                  " x=" + std::to_string(o.x_real);
                }
                rep.status = Status::Pass;
                break;
            }

            case Cmd::FitConstants: {
                std::vector<double> xs = o.xs;
                if (xs.empty()) {
                    if (o.samples < 4) throw DomainError("need at least 4 samples");
                    const double root = 2.0 * std::sqrt(o.a_real);
                    for (unsigned i = 0; i < o.samples; ++i)
                        xs.push_back(root * (1.2 + 1.6 * double(i) / double(o.samples - 1)));
                }
                const FitResult fit = fit_constants(o.n, o.a_real, xs);
                Json xs_json = Json::array();
                for (double x : xs) xs_json.push_back(x);
                const bool zeroish =
                    std::abs(fit.A) < o.tol && std::abs(fit.B) < o.tol;
                rep.payload = Json{{"n", o.n}, {"a", o.a_real},
                                   {"samples", xs_json},
                                   {"A", to_json(fit.A)}, {"B", to_json(fit.B)},
                                   {"abs_A", std::abs(fit.A)},
                                   {"abs_B", std::abs(fit.B)},
                                   {"residual_norm", fit.residual_norm},
                                   {"tol", o.tol}};
                rep.summary = "fit-constants n=" + std::to_string(o.n);
                rep.status = zeroish ? Status::Pass : Status::Fail;
                break;
            }

            case Cmd::FfEval: {
                const Fp a(o.a_ff, o.p), x(o.x_ff, o.p);
                const Fp v = ff_eval(o.n, o.k, a, x);
                const Rational exact =
                    eval(kth_kind(o.n, o.k), Rational(long(o.x_ff)), Rational(long(o.a_ff)));
                if (!exact.is_integer())
                    throw Error("family value is not an integer");
                const mpz_class num = exact.numerator();
                const std::uint64_t reduced =
                    mpz_fdiv_ui(num.get_mpz_t(), static_cast<unsigned long>(o.p));
                const bool agrees = reduced == v.v;
                rep.payload = Json{{"n", o.n}, {"k", o.k}, {"p", o.p},
                                   {"a", o.a_ff}, {"x", o.x_ff},
                                   {"value", v.v}, {"exact_agrees", agrees}};
                rep.summary = "ff eval n=" + std::to_string(o.n) + " p=" +
                              std::to_string(o.p);
                rep.status = agrees ? Status::Pass : Status::Fail;
                break;
            }

            case Cmd::FfPerm: {
                if (o.all_a) {
                    Json rows = Json::array();
                    unsigned long yes = 0;
                    for (std::uint64_t a = 1; a < o.p; ++a) {
                        const bool isperm = ff_is_permutation(o.n, o.k, Fp(a, o.p));
                        rows.push_back(Json::array({a, isperm}));
                        if (isperm) ++yes;
                    }
                    rep.payload = Json{{"n", o.n}, {"k", o.k}, {"p", o.p},
                                       {"permutation_count", yes},
                                       {"table",
                                        Json{{"columns", Json::array({"a", "is_permutation"})},
                                             {"rows", rows}}}};
                    rep.summary = "ff perm n=" + std::to_string(o.n) + " p=" +
                                  std::to_string(o.p) + " all a";
                } else {
                    const bool isperm = ff_is_permutation(o.n, o.k, Fp(o.a_ff, o.p));
                    rep.payload = Json{{"n", o.n}, {"k", o.k}, {"p", o.p},
                                       {"a", o.a_ff}, {"is_permutation", isperm}};
                    rep.summary = "ff perm n=" + std::to_string(o.n) + " p=" +
                                  std::to_string(o.p) + " a=" + std::to_string(o.a_ff);
                }
                rep.status = Status::Pass;
                break;
            }
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    const auto t1 = std::chrono::steady_clock::now();
    rep.timing_ms =
        o.timing
            ? std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
            : 0;

    try {
        const Format format = parse_format(o.format);
        if (!o.out_path.empty()) {
            std::ofstream sink(o.out_path);
            if (!sink) throw Error("cannot open --out file " + o.out_path);
            emit_report(rep, format, sink);
        } else {
            emit_report(rep, format, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    return rep.status == Status::Pass ? 0 : 1;
}

}  // namespace dickson
