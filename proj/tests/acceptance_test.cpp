// Acceptance suite: every criterion is pinned here with its tolerance and,
// where stated, its runtime budget. One PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "tatezeta/errors.hpp"
#include "tatezeta/gamma.hpp"
#include "tatezeta/ortho.hpp"
#include "tatezeta/sturm.hpp"
#include "tatezeta/verify.hpp"
#include "tatezeta/weil.hpp"
#include "tatezeta/zeta_numeric.hpp"

using namespace tatezeta;

namespace {

int failures = 0;

void report(int idx, const char* title, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", idx, title,
                detail.empty() ? "" : " — ", detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

}  // namespace

int main() {
    // ---- criteria 1-3: exact certificates over the full grid m <= 40 ----
    {
        auto t0 = std::chrono::steady_clock::now();
        int pairs = 0;
        int certified = 0, routes_ok = 0, identities_ok = 0;
        std::string first_bad;
        for (int m = 0; m <= 40; ++m) {
            for (int k = m % 2; k <= m; k += 2) {
                VerifyReport rep = lrh_verify(m, k);
                ++pairs;
                if (rep.lrh_certified && rep.sturm_real_roots == rep.degree && rep.distinct)
                    ++certified;
                else if (first_bad.empty())
                    first_bad = "(" + std::to_string(m) + "," + std::to_string(k) + ") " + rep.note;
                if (rep.route_agreement) ++routes_ok;
                if (rep.functional_eq && rep.symmetry) ++identities_ok;
            }
        }
        double dt = seconds_since(t0);
        report(1, "all zeros on Re(s)=1/2 (Sturm count == degree, squarefree), m <= 40",
               certified == pairs && dt < 120.0,
               std::to_string(certified) + "/" + std::to_string(pairs) + " pairs certified in " +
                   fmt(dt) + "s" + (first_bad.empty() ? "" : "; first failure " + first_bad));
        report(2, "expansion and recurrence routes agree exactly on all pairs",
               routes_ok == pairs, std::to_string(routes_ok) + "/" + std::to_string(pairs));
        report(3, "functional equation and line symmetry hold exactly on all pairs",
               identities_ok == pairs, std::to_string(identities_ok) + "/" + std::to_string(pairs));
    }

    // ---- criterion 4: representation identity suite, m+n <= 12 ----
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::string why;
        int functions = 0;
        try {
            for (int m = 0; m <= 12; ++m)
                for (int n = 0; m + n <= 12; ++n) {
                    ladder_check(m, n);
                    harmonic_oscillator_check(m, n);
                    ++functions;
                }
            using G = SU2Generator;
            commutator_check(G::R, G::J, 12);
            commutator_check(G::J, G::K, 12);
            commutator_check(G::K, G::R, 12);
            intertwining_check(12);
            for (int m = 0; m <= 12; ++m) {
                subspace_invariance_check(m);
                for (int n = -m; n <= m; n += 2) {
                    rotation_eigen_check(m, n);
                    membership_check(m, n);
                }
            }
        } catch (const Error& e) {
            ok = false;
            why = e.what();
        }
        double dt = seconds_since(t0);
        report(4, "Weil representation suite exact on all 91 basis functions (m+n <= 12)",
               ok && functions == 91 && dt < 30.0,
               std::to_string(functions) + " functions in " + fmt(dt) + "s" +
                   (why.empty() ? "" : "; " + why));
    }

    // ---- criterion 5: weighted orthogonality, k in {0..3}, m,m' <= 16 ----
    {
        auto t0 = std::chrono::steady_clock::now();
        OrthoChecker checker(128);
        bool ok = true;
        std::string why;
        int checked = 0;
        double worst = 0.0;
        try {
            for (int k = 0; k <= 3; ++k) {
                for (int m = k; m <= 16; m += 2) {
                    for (int m2 = m; m2 <= 16; m2 += 2) {
                        OrthoResult res = checker.check(m, m2, k, 1e-10);
                        ++checked;
                        if (!res.pass) {
                            ok = false;
                            if (why.empty())
                                why = "k=" + std::to_string(k) + " (" + std::to_string(m) + "," +
                                      std::to_string(m2) + ")";
                        }
                        if (m != m2) {
                            double ratio = (abs(res.cross) /
                                            sqrt(res.norm_sq_a * res.norm_sq_b))
                                               .to_double();
                            worst = std::max(worst, ratio);
                        }
                    }
                }
            }
        } catch (const Error& e) {
            ok = false;
            why = e.what();
        }
        double dt = seconds_since(t0);
        report(5, "critical-line orthogonality <= 1e-10 x norms; diagonals positive",
               ok && dt < 60.0,
               std::to_string(checked) + " integrals, worst off-diagonal " + fmt(worst) +
                   ", in " + fmt(dt) + "s" + (why.empty() ? "" : "; failed at " + why));
    }

    // ---- criterion 6: numeric zeta vs exact factorization ----
    {
        ZetaNumeric oracle(128);
        const mpfr_prec_t prec = 128;
        std::vector<BigComplex> samples;
        for (const char* s : {"1", "5/4", "3/2", "2", "3"})
            samples.emplace_back(BigFloat(rational_from_string(s), prec), BigFloat(0.0, prec));
        bool ok = true;
        std::string why;
        double worst = 0.0;
        int scans = 0;
        try {
            for (int m = 0; m <= 12; ++m) {
                for (int k = m % 2; k <= m; k += 2) {
                    auto ratios = oracle.ratio_scan(hermite_fn(m, 0), m, k, samples);
                    double spread = ZetaNumeric::relative_spread(ratios);
                    worst = std::max(worst, spread);
                    ++scans;
                    if (spread > 1e-8) {
                        ok = false;
                        if (why.empty())
                            why = "f(" + std::to_string(m) + ",0) k=" + std::to_string(k) +
                                  " spread " + fmt(spread);
                    }
                }
            }
            // ratio constancy on random subspace elements
            std::mt19937_64 rng(20240816);
            for (int t = 0; t < 10; ++t) {
                int k = static_cast<int>(rng() % 4);
                int d = static_cast<int>(rng() % static_cast<unsigned long>((12 - k) / 2 + 1));
                int m = k + 2 * d;
                HermGaussFn f = bmn_fn(m, -k);
                f *= GaussianRational(Rational(1 + static_cast<long>(rng() % 5)),
                                      Rational(static_cast<long>(rng() % 3)));
                for (int extra = 0; extra < 2; ++extra) {
                    int n = -m + 2 * static_cast<int>(rng() % static_cast<unsigned long>(m + 1));
                    if (n == -k) continue;
                    HermGaussFn g = bmn_fn(m, n);
                    g *= GaussianRational(Rational(static_cast<long>(rng() % 7) - 3),
                                          Rational(static_cast<long>(rng() % 5) - 2));
                    f += g;
                }
                auto ratios = oracle.ratio_scan(f, m, k, samples);
                double spread = ZetaNumeric::relative_spread(ratios);
                worst = std::max(worst, spread);
                ++scans;
                if (spread > 1e-8) {
                    ok = false;
                    if (why.empty()) why = "random element of W_" + std::to_string(m);
                }
            }
        } catch (const Error& e) {
            ok = false;
            why = e.what();
        }
        report(6, "quadrature oracle: constant ratio, relative spread <= 1e-8", ok,
               std::to_string(scans) + " scans, worst spread " + fmt(worst) +
                   (why.empty() ? "" : "; " + why));
    }

    // ---- criterion 7: strip-shrinking property, 500 seeded instances ----
    {
        bool ok = true;
        std::string why;
        try {
            strip_shrink_property(500, 42);
        } catch (const PropertyViolated& e) {
            ok = false;
            why = e.what();
        }
        report(7, "strip shrinking: 500 random instances, all roots strictly inside", ok, why);
    }

    // ---- criterion 8: golden polynomials, quadrature-confirmed ----
    {
        bool ok = true;
        std::string why;
        auto expect = [&](int m, int k, const RatPoly& want) {
            ZetaPolyRecord rec = zeta_poly_expansion(m, k);
            if (rec.coeffs != want) {
                ok = false;
                why += " p(" + std::to_string(m) + "," + std::to_string(k) + ") mismatch;";
            }
        };
        expect(0, 0, RatPoly{Rational(1)});
        expect(2, 0, RatPoly{Rational(-1), Rational(2)});
        expect(4, 0, RatPoly{Rational(1), Rational(-2), Rational(2)});
        expect(3, 1, RatPoly{Rational(-1), Rational(2)});
        if (!zeta_poly_expansion(3, 0).is_zero) {
            ok = false;
            why += " (3,0) not identically zero;";
        }

        // confirm each golden against the independent quadrature oracle
        ZetaNumeric oracle(128);
        const mpfr_prec_t prec = 128;
        std::vector<BigComplex> samples = {BigComplex(1.0, 0.0, prec),
                                           BigComplex(1.75, 0.0, prec)};
        for (auto [m, k] : std::vector<std::pair<int, int>>{{0, 0}, {2, 0}, {4, 0}, {3, 1}}) {
            auto ratios = oracle.ratio_scan(hermite_fn(m, 0), m, k, samples);
            double spread = ZetaNumeric::relative_spread(ratios);
            if (spread > 1e-8) {
                ok = false;
                why += " quadrature disagrees at (" + std::to_string(m) + "," +
                       std::to_string(k) + ");";
            }
        }
        auto zero_val = oracle.zeta(hermite_fn(3, 0), 0, BigComplex(2.0, 0.0, prec));
        if (!zero_val.value.is_zero()) {
            ok = false;
            why += " (3,0) numeric integral not exactly zero;";
        }
        report(8, "golden values p(2,0)=2s-1, p(4,0)=2s^2-2s+1, p(3,1)=2s-1, p(0,0)=1, (3,0)=0",
               ok, why);
    }

    std::printf("ACCEPTANCE: %d/8 criteria passed\n", 8 - failures);
    return failures == 0 ? 0 : 1;
}
