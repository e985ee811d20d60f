#include "tatezeta/verify.hpp"

#include <chrono>
#include <random>

#include "tatezeta/errors.hpp"
#include "tatezeta/rootfind.hpp"
#include "tatezeta/sturm.hpp"

namespace tatezeta {

VerifyReport lrh_verify(int m, int k) {
    auto start = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.m = m;
    rep.k = k;

    auto note = [&rep](const std::string& what) {
        if (!rep.note.empty()) rep.note += "; ";
        rep.note += what;
    };

    try {
        ZetaPolyRecord expansion = zeta_poly_expansion(m, k);
        if (!admissible_pair(m, k)) {
            rep.vacuous = true;
            if (!expansion.is_zero || !expansion.coeffs.is_zero())
                note("vanishing clause violated: expansion is nonzero");
            return rep;
        }
        rep.degree = expansion.degree;

        try {
            ZetaPolyRecord recurrence = zeta_poly_recurrence(m, k);
            rep.route_agreement = expansion.coeffs == recurrence.coeffs;
            if (!rep.route_agreement) note("route mismatch");
        } catch (const Error& e) {
            note(e.what());
        }

        try {
            rep.functional_eq = functional_equation_check(expansion);
        } catch (const IdentityViolated& e) {
            note(e.what());
        }
        try {
            rep.symmetry = symmetry_check(expansion);
        } catch (const IdentityViolated& e) {
            note(e.what());
        }

        // The restriction is real exactly when the symmetry holds; past this
        // point all d roots on the line correspond to real roots of rho.
        RatPoly rho = critical_line_restriction(expansion.coeffs);
        rep.sturm_real_roots = sturm_count_all(rho);
        rep.distinct = squarefree_check(rho);
        rep.lrh_certified =
            rep.sturm_real_roots == rep.degree && rep.distinct && rep.symmetry;
    } catch (const Error& e) {
        note(e.what());
    }

    rep.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return rep;
}

namespace {

// Deterministic helpers on top of the engine; distributions from <random>
// are not pinned down by the standard, so we reduce raw draws ourselves.
long draw(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

Rational draw_rational(std::mt19937_64& rng, long num_lo, long num_hi, long den_hi) {
    Rational q(draw(rng, num_lo, num_hi), draw(rng, 1, den_hi));
    q.canonicalize();
    return q;
}

}  // namespace

bool strip_shrink_property(int trials, unsigned long seed) {
    if (trials < 1) throw DomainError("strip_shrink_property: trials >= 1");
    std::mt19937_64 rng(seed);
    const mpfr_prec_t prec = 192;
    const BigFloat margin = BigFloat::from_string("1e-20", prec);

    for (int trial = 0; trial < trials; ++trial) {
        // Strip half-width c in [1/4, 3].
        Rational c(draw(rng, 1, 12), 4);
        c.canonicalize();
        int degree = static_cast<int>(draw(rng, 0, 6));

        // Build q from roots kept inside the closed strip |Re| <= c.
        RatPoly q{Rational(1)};
        std::string layout;
        int placed = 0;
        while (placed < degree) {
            bool pair = degree - placed >= 2 && draw(rng, 0, 1) == 1;
            Rational re = c * draw_rational(rng, -8, 8, 8) / 8;
            if (pair) {
                Rational im(draw(rng, 1, 40), 8);  // (0, 5]
                im.canonicalize();
                q *= RatPoly{re * re + im * im, -2 * re, Rational(1)};
                layout += "(" + to_string(re) + "+-" + to_string(im) + "i)";
                placed += 2;
            } else {
                q *= RatPoly{-re, Rational(1)};
                layout += "(" + to_string(re) + ")";
                placed += 1;
            }
        }

        Rational a(draw(rng, 1, 32), 8);
        a.canonicalize();
        Rational b(draw(rng, 1, 32), 8);
        b.canonicalize();

        RatPoly r = RatPoly{a, Rational(1)} * poly_shift(q, b) -
                    RatPoly{-a, Rational(1)} * poly_shift(q, -b);
        if (r.degree() < 1) continue;  // constant, vacuously inside

        auto roots = root_find(r, prec);
        BigFloat c_f(c, prec);
        for (const auto& root : roots) {
            if (!(abs(root.root.re) < c_f - margin)) {
                throw PropertyViolated(
                    "strip_shrink counterexample at trial " + std::to_string(trial) +
                    ": c=" + to_string(c) + " a=" + to_string(a) + " b=" + to_string(b) +
                    " q roots " + layout + " -> root re=" + root.root.re.to_sci(25));
            }
        }
    }
    return true;
}

}  // namespace tatezeta
