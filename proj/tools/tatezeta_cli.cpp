// Command-line front end: exact certificates, identity suites, golden tables
// and numeric cross-checks for the local zeta polynomials.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "tatezeta/errors.hpp"
#include "tatezeta/gamma.hpp"
#include "tatezeta/ortho.hpp"
#include "tatezeta/verify.hpp"
#include "tatezeta/weil.hpp"
#include "tatezeta/zeta_numeric.hpp"

namespace {

using namespace tatezeta;

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "text") return OutputFormat::text;
    throw CLI::ValidationError("--format", "unknown format '" + name + "'");
}

long env_long(const char* name, long fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    return std::strtol(v, nullptr, 10);
}

void write_output(const std::string& content, const std::string& path) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file " + path);
    out << content;
}

int cmd_gen(int m, int k, const std::string& format, const std::string& out_path) {
    ZetaPolyRecord rec = zeta_poly_expansion(m, k);
    write_output(export_table({rec}, parse_format(format)), out_path);
    return 0;
}

int cmd_verify(RunConfig cfg, const std::string& out_path) {
    if (cfg.m_max < 0 || cfg.precision_bits < 64 || cfg.jobs < 1) {
        std::cerr << "invalid configuration: need m-max >= 0, precision >= 64, jobs >= 1"
                  << std::endl;
        return 2;
    }
    SuiteResult suite = run_suite(cfg);
    std::string body;
    switch (cfg.format) {
        case OutputFormat::json: body = to_json(suite); break;
        case OutputFormat::csv: body = to_csv(suite); break;
        default: body = to_text(suite); break;
    }
    write_output(body, out_path);
    std::cerr << "verify: " << (suite.all_pass ? "all pass" : "FAILURES") << " ("
              << suite.certified_count << " certified, " << suite.vacuous_count << " vacuous)"
              << std::endl;
    return suite.all_pass ? 0 : 1;
}

int cmd_ortho(int m_max, int k, double tol, int precision) {
    OrthoChecker checker(static_cast<mpfr_prec_t>(precision));
    bool all = true;
    for (int m = k; m <= m_max; m += 2) {
        for (int m2 = m; m2 <= m_max; m2 += 2) {
            OrthoResult res = checker.check(m, m2, k, tol);
            all = all && res.pass;
            std::cout << "k=" << k << " m=" << m << " m'=" << m2 << " "
                      << (res.pass ? "pass" : "FAIL");
            if (m != m2)
                std::cout << "  |cross|/norms = "
                          << (abs(res.cross) / sqrt(res.norm_sq_a * res.norm_sq_b)).to_sci(3);
            std::cout << '\n';
        }
    }
    return all ? 0 : 1;
}

int cmd_weil(int degree_bound) {
    bool all = true;
    try {
        for (int m = 0; m <= degree_bound; ++m)
            for (int n = 0; m + n <= degree_bound; ++n) {
                ladder_check(m, n);
                harmonic_oscillator_check(m, n);
            }
        using G = SU2Generator;
        commutator_check(G::R, G::J, degree_bound);
        commutator_check(G::J, G::K, degree_bound);
        commutator_check(G::K, G::R, degree_bound);
        intertwining_check(degree_bound);
        for (int m = 0; m <= degree_bound; ++m) {
            subspace_invariance_check(m);
            for (int n = -m; n <= m; n += 2) {
                rotation_eigen_check(m, n);
                membership_check(m, n);
            }
        }
    } catch (const Error& e) {
        std::cout << "FAIL: " << e.what() << '\n';
        all = false;
    }
    if (all)
        std::cout << "weil identity suite: all exact checks pass up to degree "
                  << degree_bound << '\n';
    return all ? 0 : 1;
}

int cmd_strip_shrink(int trials, unsigned long seed) {
    try {
        strip_shrink_property(trials, seed);
    } catch (const PropertyViolated& e) {
        std::cout << "FAIL: " << e.what() << '\n';
        return 1;
    }
    std::cout << "strip-shrink: " << trials << " trials, all roots strictly inside\n";
    return 0;
}

int cmd_eval(int m, int k, const std::string& s_str, int precision) {
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision);
    auto comma = s_str.find(',');
    BigFloat re = BigFloat::from_string(comma == std::string::npos ? s_str : s_str.substr(0, comma),
                                        prec);
    BigFloat im = comma == std::string::npos ? BigFloat(0.0, prec)
                                             : BigFloat::from_string(s_str.substr(comma + 1), prec);
    BigComplex s(re, im);

    ZetaNumeric oracle(prec);
    QuadratureResult numeric = oracle.zeta(hermite_fn(m, 0), k, s);

    ZetaPolyRecord rec = zeta_poly_expansion(m, k);
    std::cout << "numeric  zeta = " << numeric.value.to_string() << "  (err est "
              << numeric.error_estimate << ", " << numeric.evaluations << " evals)\n";
    if (rec.is_zero) {
        std::cout << "exact    zeta = 0 (vanishing pair)\n";
        return abs(numeric.value).to_double() < 1e-20 ? 0 : 1;
    }
    Rational k_half(k, 2);
    k_half.canonicalize();
    BigComplex gamma = gamma_complex(s + BigComplex(BigFloat(k_half, prec), BigFloat(0.0, prec)));
    BigComplex one(BigFloat(1.0, prec), BigFloat(0.0, prec));
    BigComplex pi_pow = pow(BigComplex(BigFloat::pi(prec), BigFloat(0.0, prec)), one - s);
    BigComplex p_val = to_gaussian(rec.coeffs).eval_as(s, [&](const GaussianRational& g) {
        return to_bigcomplex(g, prec);
    });
    BigComplex exact = gamma * pi_pow * p_val;
    std::cout << "exact Gamma(s+k/2) pi^(1-s) p(s) = " << exact.to_string() << '\n';
    if (abs(exact).to_double() > 1e-30) {
        BigComplex ratio = numeric.value / exact;
        std::cout << "ratio (constant c_{f,k}) = " << ratio.to_string() << '\n';
    } else {
        // At a zero of p the ratio is meaningless; both sides should vanish.
        std::cout << "p(s) = 0 at this point; |numeric| = " << abs(numeric.value).to_sci(6)
                  << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact + numeric verification of critical-line zeta polynomials"};
    app.require_subcommand(1);

    int precision = static_cast<int>(env_long("TATEZETA_PRECISION", 128));
    int jobs = static_cast<int>(env_long("TATEZETA_JOBS", 1));

    // gen
    auto* gen = app.add_subcommand("gen", "construct the (m, k) polynomial record");
    int gen_m = 0, gen_k = 0;
    std::string gen_format = "json", gen_out;
    gen->add_option("m", gen_m, "Hermite index m")->required();
    gen->add_option("k", gen_k, "character index k")->required();
    gen->add_option("--format", gen_format, "json|csv");
    gen->add_option("--out", gen_out, "output path (defaults to stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "run the full certificate suite");
    RunConfig cfg;
    std::string verify_format = "text", verify_out;
    int verify_k = -1;
    verify->add_option("--m-max", cfg.m_max, "largest m in the grid");
    verify->add_option("--k", verify_k, "restrict to one k");
    verify->add_option("--precision", precision, "working precision in bits");
    verify->add_option("--weil-bound", cfg.weil_degree_bound, "degree bound for the identity suite");
    verify->add_option("--ratio-tol", cfg.ratio_tol, "ratio-constancy tolerance");
    verify->add_option("--ortho-tol", cfg.ortho_tol, "orthogonality tolerance");
    verify->add_option("--seed", cfg.seed, "seed for randomized spot checks");
    verify->add_option("--format", verify_format, "json|csv|text");
    verify->add_option("--out", verify_out, "output path (defaults to stdout)");
    verify->add_option("--jobs", jobs, "worker threads for the (m,k) grid");

    // ortho
    auto* ortho = app.add_subcommand("ortho", "weighted critical-line orthogonality");
    int ortho_m_max = 16, ortho_k = 0;
    double ortho_tol = 1e-10;
    ortho->add_option("--m-max", ortho_m_max, "largest m")->required();
    ortho->add_option("--k", ortho_k, "character index k")->required();
    ortho->add_option("--tol", ortho_tol, "pass tolerance");

    // weil
    auto* weil = app.add_subcommand("weil", "exact representation identity suite");
    int weil_bound = 8;
    weil->add_option("--degree-bound", weil_bound, "check all indices with m+n <= bound");

    // strip-shrink
    auto* strip = app.add_subcommand("strip-shrink", "randomized strip-shrinking property");
    int strip_trials = 500;
    unsigned long strip_seed = 42;
    strip->add_option("--trials", strip_trials, "number of random instances");
    strip->add_option("--seed", strip_seed, "rng seed");

    // eval
    auto* eval = app.add_subcommand("eval", "numeric vs exact at one point");
    int eval_m = 0, eval_k = 0;
    std::string eval_s = "1";
    eval->add_option("m", eval_m, "Hermite index m")->required();
    eval->add_option("k", eval_k, "character index k")->required();
    eval->add_option("--s", eval_s, "evaluation point RE or RE,IM");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors are exit 2
    }

    try {
        if (*gen) return cmd_gen(gen_m, gen_k, gen_format, gen_out);
        if (*verify) {
            cfg.precision_bits = precision;
            cfg.jobs = jobs;
            cfg.format = parse_format(verify_format);
            if (verify_k >= 0) cfg.k_filter = std::vector<int>{verify_k};
            return cmd_verify(cfg, verify_out);
        }
        if (*ortho) return cmd_ortho(ortho_m_max, ortho_k, ortho_tol, precision);
        if (*weil) return cmd_weil(weil_bound);
        if (*strip) return cmd_strip_shrink(strip_trials, strip_seed);
        if (*eval) return cmd_eval(eval_m, eval_k, eval_s, precision);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << std::endl;
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "io error: " << e.what() << std::endl;
        return 2;
    }
    return 2;
}
