#include <doctest.h>

#include <random>

#include "tatezeta/errors.hpp"
#include "tatezeta/gamma.hpp"
#include "tatezeta/ortho.hpp"
#include "tatezeta/rootfind.hpp"
#include "tatezeta/sturm.hpp"
#include "tatezeta/weil.hpp"
#include "tatezeta/zeta_numeric.hpp"
#include "tatezeta/zeta_poly.hpp"

using namespace tatezeta;

namespace {

constexpr mpfr_prec_t kPrec = 128;

BigComplex cplx(double re, double im) { return BigComplex(re, im, kPrec); }

double rel_err(const BigComplex& got, const BigComplex& want) {
    BigFloat denom = max(abs(want), BigFloat(1e-300, kPrec));
    return (abs(got - want) / denom).to_double();
}

}  // namespace

TEST_CASE("gamma at classical points") {
    CHECK(rel_err(gamma_complex(cplx(1, 0)), cplx(1, 0)) < 1e-30);

    BigComplex half = gamma_complex(cplx(0.5, 0));
    BigFloat sqrt_pi = sqrt(BigFloat::pi(kPrec));
    CHECK((abs(half.re - sqrt_pi) / sqrt_pi).to_double() < 1e-30);
    CHECK(abs(half.im).to_double() < 1e-30);

    CHECK(rel_err(gamma_complex(cplx(5, 0)), cplx(24, 0)) < 1e-30);
    CHECK(rel_err(gamma_complex(cplx(10, 0)), cplx(362880, 0)) < 1e-30);
}

TEST_CASE("gamma recurrence on a grid") {
    // |Gamma(s+1) - s Gamma(s)| / |Gamma(s+1)| <= 1e-18 on 100 points
    int points = 0;
    for (int a = -5; a < 5; ++a) {
        for (int b = -5; b < 5; ++b) {
            BigComplex s = cplx(9.7 * a + 0.37, 9.9 * b + 0.21);
            BigComplex lhs = gamma_complex(s + cplx(1, 0));
            BigComplex rhs = s * gamma_complex(s);
            CHECK(rel_err(lhs, rhs) < 1e-18);
            ++points;
        }
    }
    CHECK(points == 100);
}

TEST_CASE("gamma reflection consistency") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 12; ++trial) {
        double re = -8.0 + 0.016 * static_cast<double>(rng() % 1000);
        double im = -8.0 + 0.016 * static_cast<double>(rng() % 1000);
        BigComplex s = cplx(re, im);
        if (std::abs(im) < 0.1) continue;  // stay away from the pole line
        BigComplex prod = gamma_complex(s) * gamma_complex(cplx(1, 0) - s);
        BigFloat pi = BigFloat::pi(kPrec);
        BigComplex expect =
            BigComplex(pi, BigFloat(0.0, kPrec)) / sin(BigComplex(pi * s.re, pi * s.im));
        CHECK(rel_err(prod, expect) < 1e-18);
    }
}

TEST_CASE("gamma duplication formula") {
    // Gamma(z) Gamma(z + 1/2) = 2^(1-2z) sqrt(pi) Gamma(2z): an identity the
    // implementation never uses, so it cross-checks reflection and shifting.
    const BigFloat sqrt_pi = sqrt(BigFloat::pi(kPrec));
    for (auto [re, im] : std::vector<std::pair<double, double>>{
             {0.5, 3}, {1.3, -2.2}, {0.8, 0.9}, {2.7, 4}, {-1.6, 1.1}}) {
        BigComplex z = cplx(re, im);
        BigComplex lhs = gamma_complex(z) * gamma_complex(z + cplx(0.5, 0));
        BigComplex two_pow = pow(cplx(2, 0), cplx(1, 0) - z - z);
        BigComplex rhs = two_pow * BigComplex(sqrt_pi, BigFloat(0.0, kPrec)) *
                         gamma_complex(z + z);
        CHECK(rel_err(lhs, rhs) < 1e-30);
    }
}

TEST_CASE("functional equation holds for the numeric integrals themselves") {
    // (m+1) zeta(s) = pi zeta(s+1) - (1/pi)(s + k/2 - 1)(s - k/2 - 1) zeta(s-1),
    // checked on quadrature values with no polynomial factorization involved.
    ZetaNumeric oracle(kPrec);
    const BigFloat pi = BigFloat::pi(kPrec);
    const BigComplex pi_c(pi, BigFloat(0.0, kPrec));
    for (auto [m, k] : std::vector<std::pair<int, int>>{{2, 0}, {4, 0}, {5, 1}, {6, 2}}) {
        HermGaussFn f = hermite_fn(m, 0);
        for (BigComplex s : {cplx(1.5, 0), cplx(1.25, 0.75)}) {
            BigComplex z0 = oracle.zeta(f, k, s - cplx(1, 0)).value;
            BigComplex z1 = oracle.zeta(f, k, s).value;
            BigComplex z2 = oracle.zeta(f, k, s + cplx(1, 0)).value;
            BigComplex lhs = cplx(m + 1, 0) * z1;
            BigComplex half_k = cplx(k / 2.0, 0);
            BigComplex rhs = pi_c * z2 -
                             (s + half_k - cplx(1, 0)) * (s - half_k - cplx(1, 0)) * z0 / pi_c;
            CHECK(rel_err(lhs, rhs) < 1e-22);
        }
    }
}

TEST_CASE("gamma pole guard") {
    CHECK_THROWS_AS(gamma_complex(cplx(0, 0)), PoleProximity);
    CHECK_THROWS_AS(gamma_complex(cplx(-3.0, 1e-16)), PoleProximity);
    CHECK_NOTHROW(gamma_complex(cplx(-3.0001, 0)));
}

TEST_CASE("tanh-sinh handles endpoint singularities") {
    TanhSinh quad(kPrec, 1e-30);
    BigFloat zero(0.0, kPrec), one(1.0, kPrec);

    // int_0^1 x^(-1/2) dx = 2
    auto res = quad.integrate(
        [&](const BigFloat& x) {
            return BigComplex(BigFloat(1.0, kPrec) / sqrt(x), BigFloat(0.0, kPrec));
        },
        zero, one);
    CHECK(rel_err(res.value, cplx(2, 0)) < 1e-28);

    // int_0^pi sin = 2
    auto res2 = quad.integrate(
        [&](const BigFloat& x) { return BigComplex(sin(x), BigFloat(0.0, kPrec)); }, zero,
        BigFloat::pi(kPrec));
    CHECK(rel_err(res2.value, cplx(2, 0)) < 1e-28);

    // int_0^1 4/(1+x^2) = pi
    auto res3 = quad.integrate(
        [&](const BigFloat& x) {
            return BigComplex(BigFloat(4.0, kPrec) / (one + x * x), BigFloat(0.0, kPrec));
        },
        zero, one);
    CHECK((abs(res3.value.re - BigFloat::pi(kPrec))).to_double() < 1e-28);
}

TEST_CASE("numeric zeta agrees with the closed form") {
    ZetaNumeric oracle(kPrec);

    // f_{0,0}, k = 0, s = 1: Gamma(1) pi^0 = 1
    auto r = oracle.zeta(hermite_fn(0, 0), 0, cplx(1, 0));
    CHECK(rel_err(r.value, cplx(1, 0)) < 1e-25);

    // f_{2,0}, k = 0, s = 1/2: the factor 2s - 1 vanishes
    auto r2 = oracle.zeta(hermite_fn(2, 0), 0, cplx(0.5, 0));
    CHECK(abs(r2.value).to_double() < 1e-24);

    // f_{3,0}, k = 0: identically zero by the angular integral, no quadrature
    auto r3 = oracle.zeta(hermite_fn(3, 0), 0, cplx(2, 0));
    CHECK(r3.value.is_zero());
    CHECK(r3.evaluations == 0);
}

TEST_CASE("ratio scan is constant across sample points") {
    ZetaNumeric oracle(kPrec);
    std::vector<BigComplex> samples = {cplx(1, 0), cplx(1.5, 0), cplx(2, 0), cplx(0.75, 0),
                                       cplx(3, 0)};
    for (auto [m, k] : std::vector<std::pair<int, int>>{{0, 0}, {2, 0}, {3, 1}, {4, 2}, {5, 3}}) {
        auto ratios = oracle.ratio_scan(hermite_fn(m, 0), m, k, samples);
        CHECK(ZetaNumeric::relative_spread(ratios) < 1e-8);
    }
    // linearity: scaling f scales the constant
    auto base = oracle.ratio_scan(hermite_fn(4, 0), 4, 0, samples);
    HermGaussFn scaled = hermite_fn(4, 0);
    scaled *= GaussianRational(3);
    auto tripled = oracle.ratio_scan(scaled, 4, 0, samples);
    CHECK(rel_err(tripled.front(), cplx(3, 0) * base.front()) < 1e-12);

    // only one rotation component survives the angular pairing; the combined
    // element still produces a single constant across samples
    HermGaussFn mixed = bmn_fn(4, 2) + bmn_fn(4, -2);
    auto mixed_ratios = oracle.ratio_scan(mixed, 4, 2, samples);
    CHECK(ZetaNumeric::relative_spread(mixed_ratios) < 1e-8);
    CHECK(abs(mixed_ratios.front()).to_double() > 1e-6);
}

TEST_CASE("quadrature reports non-convergence at an impossible level cap") {
    TanhSinh strict(kPrec, 1e-30, 1);
    CHECK_THROWS_AS(strict.integrate(
                        [&](const BigFloat& x) {
                            return BigComplex(sin(x) / sqrt(x), BigFloat(0.0, kPrec));
                        },
                        BigFloat(0.0, kPrec), BigFloat(3.0, kPrec)),
                    NonConvergent);
}

TEST_CASE("orthogonality weight closed forms") {
    BigFloat zero(0.0, kPrec), one(1.0, kPrec);
    BigFloat pi = BigFloat::pi(kPrec);

    CHECK((abs(ortho_weight(0, zero) - pi)).to_double() < 1e-35);
    CHECK((abs(ortho_weight(1, zero) - one)).to_double() < 1e-35);

    // k = 2, t = 1: pi / cosh(pi) * (1/4 + 1)
    BigFloat expect = pi / cosh(pi) * BigFloat(1.25, kPrec);
    CHECK((abs(ortho_weight(2, one) - expect) / expect).to_double() < 1e-35);
    CHECK(ortho_weight(2, one).to_double() == doctest::Approx(0.33878).epsilon(1e-4));

    // against |Gamma((k+1)/2 + it)|^2 on a grid
    for (int k = 0; k <= 3; ++k) {
        Rational k_half(k + 1, 2);
        k_half.canonicalize();
        for (int j = 0; j < 50; ++j) {
            double t = -10.0 + 20.0 * j / 49.0;
            BigComplex arg(BigFloat(k_half, kPrec), BigFloat(t, kPrec));
            BigComplex g = gamma_complex(arg);
            BigFloat want = g.re * g.re + g.im * g.im;
            BigFloat got = ortho_weight(k, BigFloat(t, kPrec));
            CHECK((abs(got - want) / want).to_double() < 1e-15);
        }
    }
}

TEST_CASE("weighted orthogonality of restricted polynomials") {
    OrthoChecker checker(kPrec);

    // (0,2,0): odd integrand, vanishes
    OrthoResult r = checker.check(0, 2, 0, 1e-10);
    CHECK(r.pass);

    // (0,4,0): even integrand, vanishes by orthogonality
    OrthoResult r2 = checker.check(0, 4, 0, 1e-10);
    CHECK(r2.pass);
    CHECK(r2.norm_sq_a.sgn() > 0);
    CHECK(r2.norm_sq_b.sgn() > 0);

    // diagonal strictly positive
    OrthoResult r3 = checker.check(2, 2, 0, 1e-10);
    CHECK(r3.pass);
    CHECK(r3.cross.sgn() > 0);

    // odd k too
    CHECK(checker.check(1, 5, 1, 1e-10).pass);
    CHECK(checker.check(3, 7, 3, 1e-10).pass);
}

TEST_CASE("root finder on known polynomials") {
    // 2s - 1 -> 1/2
    auto r = root_find(RatPoly{Rational(-1), Rational(2)});
    REQUIRE(r.size() == 1);
    CHECK(std::abs(r[0].root.re.to_double() - 0.5) < 1e-30);
    CHECK(r[0].residual < 1e-25);

    // 2s^2 - 2s + 1 -> 1/2 +- i/2
    auto r2 = root_find(RatPoly{Rational(1), Rational(-2), Rational(2)});
    REQUIRE(r2.size() == 2);
    for (const auto& root : r2) {
        CHECK(std::abs(root.root.re.to_double() - 0.5) < 1e-30);
        CHECK(std::abs(std::abs(root.root.im.to_double()) - 0.5) < 1e-30);
        CHECK(root.residual < 1e-25);
    }
    CHECK(r2[0].root.im.to_double() == doctest::Approx(-0.5));
    CHECK(r2[1].root.im.to_double() == doctest::Approx(0.5));

    // s^2 + 1 -> +-i
    auto r3 = root_find(RatPoly{Rational(1), Rational(0), Rational(1)});
    REQUIRE(r3.size() == 2);
    CHECK(std::abs(r3[0].root.im.to_double() + 1.0) < 1e-30);
    CHECK(std::abs(r3[1].root.im.to_double() - 1.0) < 1e-30);

    // residuals on the restricted zeta polynomials, counted against sturm
    for (int m : {6, 9, 12}) {
        int k = m % 2;
        RatPoly rho = critical_line_restriction(zeta_poly_expansion(m, k).coeffs);
        auto roots = root_find(rho);
        int reals = 0;
        for (const auto& root : roots) {
            CHECK(root.residual < 1e-25);
            if (abs(root.root.im).to_double() < 1e-20) ++reals;
        }
        CHECK(reals == sturm_count_all(rho));
    }
}
