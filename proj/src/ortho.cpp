#include "tatezeta/ortho.hpp"

#include <cmath>
#include <tuple>

#include "tatezeta/errors.hpp"
#include "tatezeta/sturm.hpp"
#include "tatezeta/zeta_poly.hpp"

namespace tatezeta {

long OrthoChecker::choose_cut(const RatPoly& prod, int k) const {
    // Tail of |prod(t)| w_k(t): the weight decays like const * t^k e^{-pi t},
    // so require pi T - (deg + k + 1) log T - log(mass) > 25 log 10 + 12.
    double mass = 1.0;
    for (int i = 0; i <= prod.degree(); ++i)
        mass += std::abs(to_double(prod.coeff(static_cast<std::size_t>(i))));
    double need = 25.0 * std::log(10.0) + 12.0 + std::log(mass);
    double m_exp = prod.degree() + k + 1;
    long t_cut = 16;
    while (M_PI * t_cut - m_exp * std::log(static_cast<double>(t_cut)) < need) t_cut += 16;
    return t_cut;
}

BigFloat OrthoChecker::moment(int k, long t_cut, int j) {
    auto key = std::make_tuple(k, t_cut, j);
    auto it = moments_.find(key);
    if (it != moments_.end()) return it->second;
    if (j % 2 == 1) {
        BigFloat zero(0.0, prec_);
        moments_.emplace(key, zero);
        return zero;
    }
    auto integrand = [&](const BigFloat& t) -> BigComplex {
        return {pow_si(t, j) * ortho_weight(k, t), BigFloat(0.0, prec_)};
    };
    BigFloat tc(static_cast<double>(t_cut), prec_);
    QuadratureResult res = quad_.integrate(integrand, -tc, tc);
    moments_.emplace(key, res.value.re);
    return res.value.re;
}

BigFloat OrthoChecker::weighted_integral(const RatPoly& rho_a, const RatPoly& rho_b, int k) {
    RatPoly prod = rho_a * rho_b;
    long t_cut = choose_cut(prod, k);
    BigFloat acc(0.0, prec_);
    for (int j = 0; j <= prod.degree(); ++j) {
        Rational c = prod.coeff(static_cast<std::size_t>(j));
        if (c == 0 || j % 2 == 1) continue;
        acc += BigFloat(c, prec_) * moment(k, t_cut, j);
    }
    return acc;
}

OrthoResult OrthoChecker::check(int m, int m2, int k, double tol) {
    if (!admissible_pair(m, k) || !admissible_pair(m2, k))
        throw DomainError("orthogonality_check: inadmissible pair");
    RatPoly rho_a = critical_line_restriction(zeta_poly_expansion(m, k).coeffs);
    RatPoly rho_b = critical_line_restriction(zeta_poly_expansion(m2, k).coeffs);

    OrthoResult out(prec_);
    out.norm_sq_a = weighted_integral(rho_a, rho_a, k);
    out.norm_sq_b = weighted_integral(rho_b, rho_b, k);
    bool diag_pos = out.norm_sq_a.sgn() > 0 && out.norm_sq_b.sgn() > 0;
    if (m == m2) {
        out.cross = out.norm_sq_a;
        out.pass = diag_pos;
        return out;
    }
    out.cross = weighted_integral(rho_a, rho_b, k);
    BigFloat bound = BigFloat(tol, prec_) * sqrt(out.norm_sq_a * out.norm_sq_b);
    out.pass = diag_pos && abs(out.cross) <= bound;
    return out;
}

}  // namespace tatezeta
