#include <doctest.h>

#include <random>

#include "tatezeta/bigfloat.hpp"
#include "tatezeta/errors.hpp"
#include "tatezeta/zeta_poly.hpp"

using namespace tatezeta;

namespace {

Rational rat(long n, long d) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

// Rodrigues-style oracle: H_m = (-1)^m e^{x^2} d^m/dx^m e^{-x^2}. Track
// d^m/dx^m e^{-x^2} = P_m(x) e^{-x^2} with P_{m+1} = P_m' - 2x P_m.
RatPoly hermite_rodrigues(int m) {
    RatPoly p{Rational(1)};
    RatPoly minus_two_x{Rational(0), Rational(-2)};
    for (int i = 0; i < m; ++i) p = p.derivative() + minus_two_x * p;
    return m % 2 ? -p : p;
}

// Same idea for d^n/dx^n (x^{n+a} e^{-x}) = Q(x) e^{-x}, Q_{j+1} = Q_j' - Q_j;
// then L_n^(a) = x^{-a} Q_n / n!.
RatPoly laguerre_rodrigues(int n, int a) {
    RatPoly q = RatPoly::monomial(static_cast<std::size_t>(n + a));
    for (int j = 0; j < n; ++j) q = q.derivative() - q;
    // divide by x^a: the low coefficients must vanish
    std::vector<Rational> shifted;
    for (int i = 0; i < a; ++i) REQUIRE(q.coeff(static_cast<std::size_t>(i)) == 0);
    for (int i = a; i <= q.degree(); ++i) shifted.push_back(q.coeff(static_cast<std::size_t>(i)));
    RatPoly out(std::move(shifted));
    out /= Rational(factorial(static_cast<unsigned long>(n)));
    return out;
}

}  // namespace

TEST_CASE("hermite polynomials match the derivative construction") {
    CHECK(hermite_poly(0) == RatPoly{Rational(1)});
    CHECK(hermite_poly(2) == RatPoly{Rational(-2), Rational(0), Rational(4)});
    CHECK(hermite_poly(3) == RatPoly{Rational(0), Rational(-12), Rational(0), Rational(8)});
    for (int m = 0; m <= 15; ++m) {
        RatPoly h = hermite_poly(m);
        CHECK(h == hermite_rodrigues(m));
        // parity: only every other coefficient is populated
        for (int i = 0; i <= h.degree(); ++i)
            if ((i - m) % 2 != 0) CHECK(h.coeff(static_cast<std::size_t>(i)) == 0);
    }
}

TEST_CASE("laguerre polynomials match the derivative construction") {
    CHECK(laguerre_poly(0, 0) == RatPoly{Rational(1)});
    CHECK(laguerre_poly(0, 5) == RatPoly{Rational(1)});
    CHECK(laguerre_poly(1, 0) == RatPoly{Rational(1), Rational(-1)});
    CHECK(laguerre_poly(1, 2) == RatPoly{Rational(3), Rational(-1)});
    for (int n = 0; n <= 8; ++n) {
        for (int a = 0; a <= 4; ++a) {
            RatPoly l = laguerre_poly(n, a);
            CHECK(l == laguerre_rodrigues(n, a));
            CHECK(l.degree() == n);
            Rational lead(factorial(static_cast<unsigned long>(n)));
            CHECK(l.leading() * lead == Rational(n % 2 ? -1 : 1));
        }
    }
}

TEST_CASE("cosine power expansion") {
    auto one = cos_power_expand(1);
    CHECK(one.size() == 1);
    CHECK(one.at(1) == Rational(1));

    auto two = cos_power_expand(2);
    CHECK(two.at(0) == rat(1, 2));
    CHECK(two.at(2) == rat(1, 2));

    auto three = cos_power_expand(3);
    CHECK(three.at(1) == rat(3, 4));
    CHECK(three.at(3) == rat(1, 4));

    // theta = 0: coefficients sum to 1
    for (int n = 0; n <= 20; ++n) {
        Rational sum(0);
        for (const auto& [j, c] : cos_power_expand(n)) sum += c;
        CHECK(sum == Rational(1));
    }

    // numeric check at an incommensurate angle
    const mpfr_prec_t prec = 128;
    BigFloat theta = BigFloat::pi(prec) / BigFloat(7L, prec);
    for (int n = 1; n <= 10; ++n) {
        BigFloat lhs = pow_si(cos(theta), n);
        BigFloat rhs(0.0, prec);
        for (const auto& [j, c] : cos_power_expand(n))
            rhs += BigFloat(c, prec) * cos(BigFloat(static_cast<long>(j), prec) * theta);
        CHECK(abs(lhs - rhs).to_double() < 1e-35);
    }
}

TEST_CASE("angular decomposition small cases") {
    auto d0 = angular_decompose(0);
    CHECK(d0.components.size() == 1);
    CHECK(d0.components.at(0) == RatPoly{Rational(1)});

    auto d2 = angular_decompose(2);
    CHECK(d2.components.at(0) == RatPoly{Rational(-2), Rational(2)});  // 2w - 2
    CHECK(d2.components.at(2) == RatPoly{Rational(2)});

    // For m = 3 the reconstruction identity (checked below at m <= 20) forces
    // a_1(w) = 6w - 12 and a_0 = 2 on the k = 1, 3 components.
    auto d3 = angular_decompose(3);
    CHECK(d3.components.at(1) == RatPoly{Rational(-12), Rational(6)});
    CHECK(d3.components.at(3) == RatPoly{Rational(2)});

    for (const auto& [k, a] : angular_decompose(9).components) CHECK(a.degree() == (9 - k) / 2);
}

TEST_CASE("angular decomposition reconstructs the Hermite substitution") {
    const mpfr_prec_t prec = 256;
    std::mt19937_64 rng(31);
    const BigFloat sqrt_two_pi = sqrt(BigFloat(2L, prec) * BigFloat::pi(prec));
    for (int m : {0, 1, 2, 3, 5, 8, 13, 20}) {
        auto dec = angular_decompose(m);
        RatPoly h = hermite_poly(m);
        for (int pt = 0; pt < 20; ++pt) {
            BigFloat r(0.1 + 0.17 * static_cast<double>(rng() % 20), prec);
            BigFloat theta(0.05 + 0.31 * static_cast<double>(rng() % 20), prec);
            BigFloat x = sqrt_two_pi * r * cos(theta);
            BigFloat lhs = h.eval_as(x, [&](const Rational& q) { return BigFloat(q, prec); });
            BigFloat w = BigFloat(2L, prec) * BigFloat::pi(prec) * r * r;
            BigFloat rhs(0.0, prec);
            for (const auto& [k, a] : dec.components) {
                BigFloat ak = a.eval_as(w, [&](const Rational& q) { return BigFloat(q, prec); });
                rhs += pow_si(sqrt_two_pi * r, k) * ak *
                       cos(BigFloat(static_cast<long>(k), prec) * theta);
            }
            BigFloat scale = max(abs(lhs), BigFloat(1.0, prec));
            CHECK((abs(lhs - rhs) / scale).to_double() < 1e-10);
        }
    }
}

TEST_CASE("zeta polynomial golden values via the expansion route") {
    CHECK(zeta_poly_expansion(0, 0).coeffs == RatPoly{Rational(1)});
    CHECK(zeta_poly_expansion(2, 0).coeffs == RatPoly{Rational(-1), Rational(2)});
    CHECK(zeta_poly_expansion(4, 0).coeffs == RatPoly{Rational(1), Rational(-2), Rational(2)});
    CHECK(zeta_poly_expansion(3, 1).coeffs == RatPoly{Rational(-1), Rational(2)});

    ZetaPolyRecord zero = zeta_poly_expansion(3, 0);
    CHECK(zero.is_zero);
    CHECK(zero.coeffs.is_zero());
}

TEST_CASE("vanishing and degree laws") {
    for (int m = 0; m <= 12; ++m) {
        for (int k = 0; k <= m + 2; ++k) {
            ZetaPolyRecord rec = zeta_poly_expansion(m, k);
            bool should_vanish = k > m || (m - k) % 2 != 0;
            CHECK(rec.is_zero == should_vanish);
            if (!should_vanish) {
                CHECK(rec.degree == (m - k) / 2);
                CHECK(rec.coeffs.degree() == rec.degree);
                CHECK(rec.coeffs.leading() > 0);
                CHECK(content(rec.coeffs) == Rational(1));
            }
        }
    }
}

TEST_CASE("recurrence route eigenvector examples") {
    CHECK(zeta_poly_recurrence(0, 0).coeffs == RatPoly{Rational(1)});
    CHECK(zeta_poly_recurrence(2, 0).coeffs == RatPoly{Rational(-1), Rational(2)});
    CHECK(zeta_poly_recurrence(4, 0).coeffs == RatPoly{Rational(1), Rational(-2), Rational(2)});

    // (2,0): eigenvalue 3 with q = s: 3s = (s+1/2)(s+1) - (s-1/2)(s-1)
    RatPoly q{Rational(0), Rational(1)};
    RatPoly lhs = Rational(3) * q;
    RatPoly rhs = RatPoly{rat(1, 2), Rational(1)} * poly_shift(q, Rational(1)) -
                  RatPoly{rat(-1, 2), Rational(1)} * poly_shift(q, Rational(-1));
    CHECK(lhs == rhs);

    // (4,0): q = 2s^2 + 1/2 satisfies 5 q(s) = (s+1/2) q(s+1) - (s-1/2) q(s-1),
    // both sides 10s^2 + 5/2.
    RatPoly q4{rat(1, 2), Rational(0), Rational(2)};
    RatPoly lhs4 = Rational(5) * q4;
    RatPoly rhs4 = RatPoly{rat(1, 2), Rational(1)} * poly_shift(q4, Rational(1)) -
                   RatPoly{rat(-1, 2), Rational(1)} * poly_shift(q4, Rational(-1));
    CHECK(lhs4 == rhs4);
    CHECK(lhs4 == RatPoly{rat(5, 2), Rational(0), Rational(10)});
}

TEST_CASE("recurrence route rejects inadmissible pairs") {
    CHECK_THROWS_AS(zeta_poly_recurrence(3, 0), DomainError);
    CHECK_THROWS_AS(zeta_poly_recurrence(2, 4), DomainError);
}

TEST_CASE("route agreement up to m = 16") {
    for (int m = 0; m <= 16; ++m) {
        for (int k = m % 2; k <= m; k += 2) {
            CAPTURE(m);
            CAPTURE(k);
            CHECK(zeta_poly_expansion(m, k).coeffs == zeta_poly_recurrence(m, k).coeffs);
        }
    }
}

TEST_CASE("functional equation and symmetry") {
    // worked examples
    ZetaPolyRecord r2 = zeta_poly_expansion(2, 0);
    RatPoly expect{Rational(-3), Rational(6)};  // 3(2s-1) = 6s-3
    CHECK(Rational(3) * r2.coeffs == expect);
    CHECK(functional_equation_check(r2));
    CHECK(symmetry_check(r2));

    for (int m = 0; m <= 12; ++m) {
        for (int k = m % 2; k <= m; k += 2) {
            ZetaPolyRecord rec = zeta_poly_expansion(m, k);
            CHECK(functional_equation_check(rec));
            CHECK(symmetry_check(rec));
        }
    }

    // a deliberately broken record reports the violation
    ZetaPolyRecord bad = zeta_poly_expansion(4, 0);
    bad.coeffs += RatPoly{Rational(0), Rational(1)};
    CHECK_THROWS_AS(symmetry_check(bad), IdentityViolated);
    CHECK_THROWS_AS(functional_equation_check(bad), IdentityViolated);
}
