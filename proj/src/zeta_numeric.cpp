#include "tatezeta/zeta_numeric.hpp"

#include <cmath>

#include "tatezeta/errors.hpp"
#include "tatezeta/gamma.hpp"
#include "tatezeta/zeta_poly.hpp"

namespace tatezeta {

GaussianRational angular_fourier_coefficient(int a, int b, int k) {
    // cos^a sin^b = 2^-(a+b) (-i)^b sum_{p,q} C(a,p) C(b,q) (-1)^(b-q)
    //               e^{i theta (2p - a + 2q - b)}; pick out e^{-i k theta}.
    int target = -k + a + b;  // need 2(p + q) = a + b - k, i.e. p + q = target/2
    if (target % 2 != 0 || target < 0 || target > 2 * (a + b)) return GaussianRational(0);
    int pq = target / 2;
    Rational acc(0);
    for (int p = 0; p <= a; ++p) {
        int q = pq - p;
        if (q < 0 || q > b) continue;
        Rational term(binomial(static_cast<unsigned long>(a), static_cast<unsigned long>(p)) *
                      binomial(static_cast<unsigned long>(b), static_cast<unsigned long>(q)));
        if ((b - q) % 2) term = -term;
        acc += term;
    }
    if (acc == 0) return GaussianRational(0);
    Rational scale(1, pow_int(2, static_cast<unsigned long>(a + b)));
    scale.canonicalize();
    return GaussianRational(acc * scale) * i_power(-b);
}

QuadratureResult ZetaNumeric::radial_integral(int n_pow, const BigComplex& s) {
    std::string key = std::to_string(n_pow) + "|" + s.re.to_sci(40) + "|" + s.im.to_sci(40);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    const BigFloat pi = BigFloat::pi(prec_);
    const BigComplex expo = s + s - BigComplex(BigFloat(1.0 - n_pow, prec_), BigFloat(0.0, prec_));

    // Truncation radius: pi R^2 - (N + 2 Re s - 1) log R > 75 covers a tail
    // below 1e-30 with margin, since the integrand decays faster than
    // e^{-pi r^2 / 2} past its peak.
    double alpha = n_pow + 2.0 * s.re.to_double() - 1.0;
    double r_cut = 4.0;
    while (M_PI * r_cut * r_cut / 2.0 - alpha * std::log(r_cut) < 75.0) r_cut += 1.0;

    auto integrand = [&](const BigFloat& r) -> BigComplex {
        // r^(2s - 1 + N) e^(-pi r^2)
        BigFloat lr = log(r);
        BigComplex power = exp(BigComplex(expo.re * lr, expo.im * lr));
        BigFloat damp = exp(-(pi * r * r));
        return damp * power;
    };
    QuadratureResult res = quad_.integrate(integrand, BigFloat(0.0, prec_), BigFloat(r_cut, prec_));
    res.error_estimate += 1e-30;  // truncated tail allowance
    cache_.emplace(key, res);
    return res;
}

QuadratureResult ZetaNumeric::zeta(const HermGaussFn& f, int k, const BigComplex& s) {
    if (s.re.to_double() <= 0)
        throw DomainError("zeta_numeric: need Re(s) > 0 for absolute convergence");

    // Angular pass: collect, per total monomial degree N, the exact
    // coefficient sum_{a+b=N} c_{a,b} * A_{a,b,k}.
    std::map<int, GaussianRational> radial_coeffs;
    for (const auto& [key, c] : f.poly.terms()) {
        GaussianRational ang = angular_fourier_coefficient(key.first, key.second, k);
        if (ang.is_zero()) continue;
        int n_pow = key.first + key.second;
        auto [it, inserted] = radial_coeffs.try_emplace(n_pow, c * ang);
        if (!inserted) {
            it->second += c * ang;
            if (it->second.is_zero()) radial_coeffs.erase(it);
        }
    }

    QuadratureResult out(prec_);
    if (radial_coeffs.empty()) return out;  // exact zero, no evaluations

    const BigFloat two_pi = BigFloat(2L, prec_) * BigFloat::pi(prec_);
    const BigFloat sqrt_two_pi = sqrt(two_pi);
    for (const auto& [n_pow, coeff] : radial_coeffs) {
        QuadratureResult radial = radial_integral(n_pow, s);
        // Scaled coordinates contribute (2 pi)^(N/2); the angular coefficient
        // was normalized by 1/(2 pi), so the full angular integral restores 2 pi.
        BigFloat scale = pow_si(sqrt_two_pi, n_pow) * two_pi;
        BigComplex term = to_bigcomplex(coeff, prec_) * radial.value;
        out.value += BigFloat(scale) * term;
        out.error_estimate +=
            radial.error_estimate * std::abs(scale.to_double()) *
            (std::abs(to_double(coeff.re)) + std::abs(to_double(coeff.im)));
        out.evaluations += radial.evaluations;
    }
    return out;
}

std::vector<BigComplex> ZetaNumeric::ratio_scan(const HermGaussFn& f, int m, int k,
                                                const std::vector<BigComplex>& samples) {
    ZetaPolyRecord rec = zeta_poly_expansion(m, k);
    if (rec.is_zero) throw DomainError("ratio_scan: vacuous (m, k) pair");
    std::vector<BigComplex> ratios;
    ratios.reserve(samples.size());
    const BigFloat pi = BigFloat::pi(prec_);
    for (const auto& s : samples) {
        QuadratureResult num = zeta(f, k, s);
        Rational k_half(k, 2);
        k_half.canonicalize();
        BigComplex half_k(BigFloat(k_half, prec_), BigFloat(0.0, prec_));
        BigComplex gamma = gamma_complex(s + half_k);
        BigComplex one(BigFloat(1.0, prec_), BigFloat(0.0, prec_));
        BigComplex pi_pow = pow(BigComplex(pi, BigFloat(0.0, prec_)), one - s);
        BigComplex p_val = to_gaussian(rec.coeffs)
                               .eval_as(s, [&](const GaussianRational& g) {
                                   return to_bigcomplex(g, prec_);
                               });
        ratios.push_back(num.value / (gamma * pi_pow * p_val));
    }
    return ratios;
}

double ZetaNumeric::relative_spread(const std::vector<BigComplex>& ratios) {
    if (ratios.empty()) return 0.0;
    mpfr_prec_t prec = ratios.front().prec();
    BigComplex mean(prec);
    for (const auto& r : ratios) mean += r;
    mean = mean / BigFloat(static_cast<long>(ratios.size()), prec);
    BigFloat mean_abs = abs(mean);
    if (mean_abs.is_zero()) return 0.0;
    BigFloat worst(0.0, prec);
    for (const auto& r : ratios) worst = max(worst, abs(r - mean));
    return (worst / mean_abs).to_double();
}

BigComplex hermgauss_eval(const HermGaussFn& f, const BigFloat& u, const BigFloat& v) {
    mpfr_prec_t prec = std::max(u.prec(), v.prec());
    BigComplex acc(prec);
    for (const auto& [key, c] : f.poly.terms()) {
        BigFloat mono = pow_si(u, key.first) * pow_si(v, key.second);
        acc += mono * to_bigcomplex(c, prec);
    }
    BigFloat half(Rational(1, 2), prec);
    return exp(-(half * (u * u + v * v))) * acc;
}

BigComplex fourier_kernel_quadrature(const HermGaussFn& f, const BigFloat& u, const BigFloat& v,
                                     mpfr_prec_t prec) {
    // Separate into sum over monomials of products of two 1-D integrals:
    // int x^a e^{-x^2/2} e^{i u x} dx  and  int y^b e^{-y^2/2} e^{-i v y} dy.
    TanhSinh quad(prec, 1e-25);
    const BigFloat half(Rational(1, 2), prec);
    const double r_cut = 12.0;  // e^{-72} tail, far below the tolerance

    auto axis_integral = [&](int moment, const BigFloat& freq, int freq_sign) -> BigComplex {
        auto g = [&](const BigFloat& x) -> BigComplex {
            BigFloat damp = exp(-(half * x * x)) * pow_si(x, moment);
            BigFloat phase = freq * x;
            if (freq_sign < 0) phase = -phase;
            return {damp * cos(phase), damp * sin(phase)};
        };
        return quad.integrate(g, BigFloat(-r_cut, prec), BigFloat(r_cut, prec)).value;
    };

    std::map<std::pair<int, int>, BigComplex> axis_cache;
    auto cached_axis = [&](int moment, int axis) -> BigComplex {
        auto key = std::make_pair(moment, axis);
        auto it = axis_cache.find(key);
        if (it != axis_cache.end()) return it->second;
        BigComplex val = axis == 0 ? axis_integral(moment, u, +1) : axis_integral(moment, v, -1);
        axis_cache.emplace(key, val);
        return val;
    };

    BigComplex acc(prec);
    for (const auto& [key, c] : f.poly.terms())
        acc += to_bigcomplex(c, prec) * cached_axis(key.first, 0) * cached_axis(key.second, 1);
    const BigFloat two_pi = BigFloat(2L, prec) * BigFloat::pi(prec);
    return acc / two_pi;
}

}  // namespace tatezeta
