#include "tatezeta/quadrature.hpp"

#include <cmath>
#include <limits>

#include "tatezeta/errors.hpp"

namespace tatezeta {

namespace {

struct Node {
    BigFloat x;       // abscissa in (a, b)
    BigFloat weight;  // includes the interval half-width
};

// Abscissa/weight of the tanh-sinh map at parameter t: x = c + d tanh(g),
// weight = d * (pi/2) cosh(t) / cosh(g)^2 with g = (pi/2) sinh(t). The
// abscissa is formed as a distance from the nearer endpoint through
// 1 - |tanh g| = 2 e^{-2|g|} / (1 + e^{-2|g|}), so it never collapses onto
// the endpoint itself and integrable endpoint singularities stay finite.
Node make_node(const BigFloat& t, const BigFloat& a, const BigFloat& b, const BigFloat& d,
               const BigFloat& half_pi, mpfr_prec_t prec) {
    BigFloat sh(prec), ch(prec);
    mpfr_sinh_cosh(sh.raw(), ch.raw(), t.raw(), MPFR_RNDN);
    BigFloat g = half_pi * sh;
    bool upper = g.sgn() >= 0;
    BigFloat eg = exp(BigFloat(-2L, prec) * abs(g));
    BigFloat one(1.0, prec);
    BigFloat delta = d * BigFloat(2L, prec) * eg / (one + eg);
    BigFloat gch = cosh(g);
    Node n{upper ? b - delta : a + delta, d * half_pi * ch / (gch * gch)};
    return n;
}

}  // namespace

QuadratureResult TanhSinh::integrate(const std::function<BigComplex(const BigFloat&)>& f,
                                     const BigFloat& a, const BigFloat& b) const {
    const BigFloat d = (b - a) / BigFloat(2L, prec_);
    const BigFloat half_pi = BigFloat::pi(prec_) / BigFloat(2L, prec_);
    // Hard stop: weights this small cannot matter even against huge endpoint
    // singularities that are still integrable at our precision.
    const BigFloat hard_floor = abs(d) * ldexp(BigFloat(1.0, prec_), -3 * static_cast<long>(prec_));
    // Tail zone: only once weights have decayed this far do we trust the
    // term-magnitude break below (the integrand may pass through zeros).
    const BigFloat tail_zone = abs(d) * ldexp(BigFloat(1.0, prec_), -40);

    BigComplex sum(prec_);
    BigFloat biggest_term(0.0, prec_);
    long evals = 0;

    auto sweep = [&](double step, long stride, long first) {
        const BigFloat invisible = ldexp(BigFloat(1.0, prec_), -static_cast<long>(prec_) - 16);
        for (int sign : {1, -1}) {
            int small_streak = 0;
            for (long j = first;; j += stride) {
                Node n = make_node(BigFloat(sign * static_cast<double>(j) * step, prec_), a, b, d,
                                   half_pi, prec_);
                if (n.weight < hard_floor) break;
                BigComplex term = BigFloat(n.weight) * f(n.x);
                sum += term;
                ++evals;
                if (evals > max_evals_)
                    throw NonConvergent("tanh-sinh: evaluation budget exhausted");
                if (n.weight < tail_zone) {
                    if (abs(term) <= invisible * biggest_term) {
                        if (++small_streak >= 3) break;
                    } else {
                        small_streak = 0;
                    }
                }
                biggest_term = max(biggest_term, abs(term));
            }
        }
    };

    {
        Node n0 = make_node(BigFloat(0.0, prec_), a, b, d, half_pi, prec_);
        sum = BigFloat(n0.weight) * f(n0.x);
        biggest_term = abs(sum);
        evals = 1;
    }
    sweep(1.0, 1, 1);  // level 0: integer nodes

    double h = 1.0;
    BigComplex prev(prec_);
    double err = std::numeric_limits<double>::infinity();
    for (int level = 1; level <= max_level_; ++level) {
        h /= 2;
        prev = sum;
        sweep(h, 2, 1);  // odd multiples of the refined step

        BigFloat diff = abs(sum * BigComplex(BigFloat(h, prec_), BigFloat(0.0, prec_)) -
                            prev * BigComplex(BigFloat(2 * h, prec_), BigFloat(0.0, prec_)));
        err = diff.to_double();
        double scale = (abs(sum) * BigFloat(h, prec_)).to_double();
        if (level >= 3 && err <= tol_rel_ * std::max(scale, 1e-300)) {
            QuadratureResult res(prec_);
            res.value = BigFloat(h, prec_) * sum;
            res.error_estimate = err;
            res.evaluations = evals;
            return res;
        }
    }
    throw NonConvergent("tanh-sinh: tolerance not reached at level cap; last error estimate " +
                        std::to_string(err));
}

}  // namespace tatezeta
