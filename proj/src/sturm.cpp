#include "tatezeta/sturm.hpp"

#include "tatezeta/errors.hpp"

namespace tatezeta {

RatPoly critical_line_restriction(const RatPoly& p) {
    int d = p.degree();
    if (d < 0) return RatPoly();
    CPoly sub = compose_linear(to_gaussian(p), GaussianRational::i(),
                               GaussianRational(Rational(1, 2)));
    CPoly rho = sub * i_power(-d);
    return to_rational(rho);
}

RatPoly critical_line_unrestriction(const RatPoly& rho, int d) {
    // t = -i*(s - 1/2)
    CPoly sub = compose_linear(to_gaussian(rho), -GaussianRational::i(),
                               GaussianRational(Rational(1, 2)) * GaussianRational::i());
    CPoly p = sub * i_power(d);
    return to_rational(p);
}

namespace {

// Scale to a primitive integer row; the factor is positive, so signs survive.
RatPoly positive_primitive(const RatPoly& p) {
    if (p.is_zero()) return p;
    RatPoly r = p;
    r /= content(p);
    return r;
}

int sign_of(const Rational& q) { return sgn(q); }

int sign_variations(const std::vector<RatPoly>& chain, const Rational& x) {
    int variations = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = p.is_zero() ? 0 : sign_of(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

}  // namespace

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain;
    chain.push_back(positive_primitive(p));
    RatPoly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(positive_primitive(d));
    while (true) {
        const RatPoly& a = chain[chain.size() - 2];
        const RatPoly& b = chain[chain.size() - 1];
        RatPoly r = a.divrem(b).second;
        if (r.is_zero()) break;
        chain.push_back(positive_primitive(-r));
    }
    return chain;
}

int sturm_count(const RatPoly& rho, const Rational& lo, const Rational& hi) {
    if (rho.is_zero()) throw Error("sturm_count: zero polynomial");
    if (!(lo < hi)) throw Error("sturm_count: empty interval");
    if (rho.eval(lo) == 0)
        throw EndpointRoot("sturm_count: root at lower endpoint " + to_string(lo));
    if (rho.eval(hi) == 0)
        throw EndpointRoot("sturm_count: root at upper endpoint " + to_string(hi));
    auto chain = sturm_chain(rho);
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

int sturm_count_all(const RatPoly& rho) {
    if (rho.degree() <= 0) return 0;
    Rational b = cauchy_root_bound(rho) + 1;
    return sturm_count(rho, -b, b);
}

bool squarefree_check(const RatPoly& rho) {
    if (rho.is_zero()) throw Error("squarefree_check: zero polynomial");
    if (rho.degree() == 0) return true;
    return poly_gcd(rho, rho.derivative()).degree() == 0;
}

Rational cauchy_root_bound(const RatPoly& rho) {
    if (rho.is_zero() || rho.degree() < 1)
        throw Error("cauchy_root_bound: need degree >= 1");
    Rational lead = abs(rho.leading());
    Rational best(0);
    for (int i = 0; i < rho.degree(); ++i) {
        Rational q = abs(rho.coeff(static_cast<std::size_t>(i))) / lead;
        if (q > best) best = q;
    }
    return best + 1;
}

}  // namespace tatezeta
