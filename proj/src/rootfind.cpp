#include "tatezeta/rootfind.hpp"

#include <algorithm>

#include "tatezeta/errors.hpp"

namespace tatezeta {

namespace {

// p(z) and p'(z) in one Horner pass.
void eval_with_derivative(const std::vector<BigComplex>& c, const BigComplex& z, BigComplex& p,
                          BigComplex& dp, mpfr_prec_t prec) {
    p = BigComplex(prec);
    dp = BigComplex(prec);
    for (std::size_t i = c.size(); i-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[i];
    }
}

std::vector<RootResult> aberth(const std::vector<BigComplex>& coeffs, mpfr_prec_t prec,
                               int depth) {
    const std::size_t deg = coeffs.size() - 1;
    const BigFloat one(1.0, prec);

    // Cauchy bound for the start circle.
    BigFloat radius(0.0, prec);
    BigFloat lead = abs(coeffs.back());
    for (std::size_t i = 0; i < deg; ++i) radius = max(radius, abs(coeffs[i]) / lead);
    radius = radius + one;

    BigFloat pi = BigFloat::pi(prec);
    std::vector<BigComplex> z;
    z.reserve(deg);
    for (std::size_t i = 0; i < deg; ++i) {
        // Angles offset from the axes so symmetric configurations cannot lock.
        BigFloat theta = (BigFloat(2L * static_cast<long>(i), prec) * pi) /
                             BigFloat(static_cast<long>(deg), prec) +
                         BigFloat(0.4, prec);
        z.emplace_back(radius * cos(theta), radius * sin(theta));
    }

    const BigFloat step_tol = ldexp(one, -static_cast<long>(prec) + 18);
    const int max_iter = 600;
    bool settled = false;
    for (int iter = 0; iter < max_iter && !settled; ++iter) {
        settled = true;
        for (std::size_t i = 0; i < deg; ++i) {
            BigComplex p(prec), dp(prec);
            eval_with_derivative(coeffs, z[i], p, dp, prec);
            if (p.is_zero()) continue;
            BigComplex newton = dp.is_zero() ? BigComplex(BigFloat(1e-20, prec), BigFloat(0.0, prec))
                                             : p / dp;
            BigComplex repulse(prec);
            for (std::size_t j = 0; j < deg; ++j) {
                if (j == i) continue;
                BigComplex diff = z[i] - z[j];
                if (diff.is_zero()) {
                    // Nudge exact collisions apart.
                    diff = BigComplex(BigFloat(1e-20, prec), BigFloat(1e-20, prec));
                }
                repulse += BigComplex(one, BigFloat(0.0, prec)) / diff;
            }
            BigComplex denom = BigComplex(one, BigFloat(0.0, prec)) - newton * repulse;
            BigComplex correction = denom.is_zero() ? newton : newton / denom;
            z[i] -= correction;
            if (abs(correction) > step_tol * max(one, abs(z[i]))) settled = false;
        }
    }
    if (!settled) throw NoConvergence("root_find: Aberth iteration did not settle");

    // Cluster handling: if two approximations nearly coincide, redo sharper.
    if (depth < 2) {
        BigFloat min_gap = radius * BigFloat(4L, prec);
        for (std::size_t i = 0; i < deg; ++i)
            for (std::size_t j = i + 1; j < deg; ++j) min_gap = min(min_gap, abs(z[i] - z[j]));
        if (deg > 1 && min_gap < BigFloat::from_string("1e-15", prec))
            return aberth(coeffs, prec * 2, depth + 1);
    }

    std::vector<RootResult> out;
    out.reserve(deg);
    const BigFloat tiny = ldexp(one, -2 * static_cast<long>(prec));
    for (std::size_t i = 0; i < deg; ++i) {
        BigComplex p(prec), dp(prec);
        eval_with_derivative(coeffs, z[i], p, dp, prec);
        BigFloat scale = max(abs(dp), tiny);
        out.push_back({z[i], (abs(p) / scale).to_double()});
    }
    std::sort(out.begin(), out.end(), [](const RootResult& a, const RootResult& b) {
        if (a.root.re < b.root.re) return true;
        if (b.root.re < a.root.re) return false;
        return a.root.im < b.root.im;
    });
    return out;
}

}  // namespace

std::vector<RootResult> root_find(const CPoly& p, mpfr_prec_t prec) {
    if (p.is_zero() || p.degree() < 1) throw Error("root_find: need degree >= 1");
    std::vector<BigComplex> coeffs;
    coeffs.reserve(static_cast<std::size_t>(p.degree()) + 1);
    for (int i = 0; i <= p.degree(); ++i)
        coeffs.push_back(to_bigcomplex(p.coeff(static_cast<std::size_t>(i)), prec));
    return aberth(coeffs, prec, 0);
}

std::vector<RootResult> root_find(const RatPoly& p, mpfr_prec_t prec) {
    return root_find(to_gaussian(p), prec);
}

}  // namespace tatezeta
