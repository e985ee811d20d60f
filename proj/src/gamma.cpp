#include "tatezeta/gamma.hpp"

#include <vector>

#include "tatezeta/errors.hpp"

namespace tatezeta {

namespace {

constexpr int kStirlingTerms = 30;
constexpr double kShiftThreshold = 40.0;

// Exact Bernoulli numbers B_0 .. B_(2*kStirlingTerms+1) via the defining
// recurrence; built once, then read-only.
const std::vector<Rational>& bernoulli_table() {
    static const std::vector<Rational> table = [] {
        std::vector<Rational> t;
        t.emplace_back(1);
        for (std::size_t n = 1; n < 2 * kStirlingTerms + 2; ++n) {
            Rational acc(0);
            for (std::size_t j = 0; j < n; ++j)
                acc += Rational(binomial(static_cast<unsigned long>(n + 1),
                                         static_cast<unsigned long>(j))) *
                       t[j];
            Rational b = -acc / Rational(static_cast<long>(n + 1));
            b.canonicalize();
            t.push_back(b);
        }
        return t;
    }();
    return table;
}

// log Gamma for Re(z) >= kShiftThreshold.
BigComplex log_gamma_asymptotic(const BigComplex& z) {
    mpfr_prec_t prec = z.prec();
    BigComplex logz = log(z);
    BigFloat half(Rational(1, 2), prec);
    BigFloat pi = BigFloat::pi(prec);
    BigComplex res = (z - BigComplex(half, BigFloat(0.0, prec))) * logz - z;
    res.re += half * log(BigFloat(2L, prec) * pi);

    const auto& bern = bernoulli_table();
    BigComplex z2 = z * z;
    BigComplex zpow = z;  // z^(2n-1)
    for (int n = 1; n <= kStirlingTerms; ++n) {
        Rational coef = bern[static_cast<std::size_t>(2 * n)] /
                        Rational(2L * n * (2L * n - 1));
        coef.canonicalize();
        res += BigComplex(BigFloat(coef, prec), BigFloat(0.0, prec)) / zpow;
        zpow *= z2;
    }
    return res;
}

}  // namespace

BigComplex log_gamma_complex(const BigComplex& s) {
    mpfr_prec_t prec = std::max<mpfr_prec_t>(s.prec() + 64, 192);
    BigComplex z(BigFloat(0.0, prec), BigFloat(0.0, prec));
    z.re = s.re + BigFloat(0.0, prec);
    z.im = s.im + BigFloat(0.0, prec);

    double re = z.re.to_double();
    long shift = 0;
    if (re < kShiftThreshold) shift = static_cast<long>(kShiftThreshold - re) + 1;
    // Gamma(z) = Gamma(z + shift) / (z (z+1) ... (z+shift-1))
    BigComplex acc(BigFloat(1.0, prec), BigFloat(0.0, prec));
    for (long j = 0; j < shift; ++j) acc *= z + BigComplex(BigFloat(j, prec), BigFloat(0.0, prec));
    BigComplex res = log_gamma_asymptotic(z + BigComplex(BigFloat(shift, prec), BigFloat(0.0, prec)));
    if (shift > 0) res -= log(acc);
    return res;
}

BigComplex gamma_complex(const BigComplex& s) {
    mpfr_prec_t out_prec = s.prec();
    mpfr_prec_t prec = std::max<mpfr_prec_t>(out_prec + 64, 192);

    // Pole guard: nonpositive integers.
    if (s.re.to_double() < 0.5 && abs(s.im) < BigFloat(1.0, prec)) {
        long nearest = lround(s.re);
        if (nearest <= 0) {
            BigFloat dist = abs(BigComplex(s.re - BigFloat(nearest, prec), s.im));
            if (dist < BigFloat::from_string("1e-15", prec))
                throw PoleProximity("gamma_complex: argument within 1e-15 of pole at " +
                                    std::to_string(nearest));
        }
    }

    BigComplex z(s.re + BigFloat(0.0, prec), s.im + BigFloat(0.0, prec));
    BigComplex result(prec);
    if (z.re.to_double() < 0.5) {
        // Reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z)).
        BigFloat pi = BigFloat::pi(prec);
        BigComplex one(BigFloat(1.0, prec), BigFloat(0.0, prec));
        BigComplex sin_piz = sin(BigComplex(pi * z.re, pi * z.im));
        BigComplex lg = log_gamma_complex(one - z);
        result = BigComplex(pi, BigFloat(0.0, prec)) / (sin_piz * exp(lg));
    } else {
        result = exp(log_gamma_complex(z));
    }
    return {result.re + BigFloat(0.0, out_prec), result.im + BigFloat(0.0, out_prec)};
}

BigFloat ortho_weight(int k, const BigFloat& t) {
    mpfr_prec_t prec = std::max(t.prec(), BigFloat::kDefaultPrec);
    BigFloat pi = BigFloat::pi(prec);
    BigFloat t2 = t * t;
    BigFloat w(prec);
    if (k % 2 == 1) {
        // |Gamma(n + it)|^2 with n = (k+1)/2: pi t / sinh(pi t) * prod (j^2 + t^2).
        int n = (k + 1) / 2;
        if (t.is_zero()) {
            w = BigFloat(1.0, prec);
        } else {
            BigFloat pt = pi * t;
            w = pt / sinh(pt);
        }
        for (int j = 1; j <= n - 1; ++j) w *= BigFloat(static_cast<long>(j) * j, prec) + t2;
    } else {
        // |Gamma(1/2 + n + it)|^2 with n = k/2: pi / cosh(pi t) * prod ((j-1/2)^2 + t^2).
        int n = k / 2;
        w = pi / cosh(pi * t);
        for (int j = 1; j <= n; ++j)
            w *= BigFloat(Rational(2 * j - 1, 2) * Rational(2 * j - 1, 2), prec) + t2;
    }
    return w;
}

}  // namespace tatezeta
