#ifndef TATEZETA_ZETA_POLY_HPP
#define TATEZETA_ZETA_POLY_HPP

#include <map>
#include <string>

#include "tatezeta/poly.hpp"

namespace tatezeta {

enum class Route { expansion, recurrence };

inline std::string to_string(Route r) {
    return r == Route::expansion ? "expansion" : "recurrence";
}

// The polynomial factor of the local zeta function at (m, k), normalized to
// coprime integer coefficients with positive leading coefficient. Pairs with
// k > m or m-k odd carry the zero polynomial and is_zero = true.
struct ZetaPolyRecord {
    int m = 0;
    int k = 0;
    int degree = 0;  // (m - k) / 2 when admissible
    RatPoly coeffs;  // polynomial in s
    Route route = Route::expansion;
    bool is_zero = false;
};

inline bool admissible_pair(int m, int k) {
    return k >= 0 && m >= 0 && k <= m && (m - k) % 2 == 0;
}

// Components of H_m(sqrt(2*pi) r cos(theta)) sorted by angular frequency:
// the k-component equals (2*pi)^(k/2) * r^k * a_{(m-k)/2}(2*pi*r^2) * cos(k*theta),
// with deg a_j = j. components[k] stores a_{(m-k)/2} in the variable w = 2*pi*r^2.
struct AngularDecomposition {
    int m = 0;
    std::map<int, RatPoly> components;
};

// Physicists' Hermite polynomial H_m, integer coefficients, parity of m.
RatPoly hermite_poly(int m);

// Generalized Laguerre polynomial L_n^(alpha), degree n, leading (-1)^n / n!.
RatPoly laguerre_poly(int n, int alpha);

// cos^n(theta) = sum_j c_j cos(j*theta); keys run over {n mod 2, ..., n}.
std::map<int, Rational> cos_power_expand(int n);

AngularDecomposition angular_decompose(int m);

// Mellin route: integrates the k-component of the angular decomposition
// term by term and strips the common Gamma(s + k/2) * pi^(1-s) factor.
ZetaPolyRecord zeta_poly_expansion(int m, int k);

// Difference-operator route: the unique (up to scale) polynomial q of degree
// d = (m-k)/2 with (s + (k+1)/2) q(s+1) - (s - (k+1)/2) q(s-1) = (m+1) q(s),
// shifted by -1/2 and normalized. Throws DegenerateEigenspace if the
// eigenspace is not one-dimensional.
ZetaPolyRecord zeta_poly_recurrence(int m, int k);

// Exact identity (m+1) p(s) = (s + k/2) p(s+1) - (s - k/2 - 1) p(s-1).
// Returns true; throws IdentityViolated with the residual otherwise.
bool functional_equation_check(const ZetaPolyRecord& rec);

// Exact identity p(1-s) = (-1)^degree * p(s).
bool symmetry_check(const ZetaPolyRecord& rec);

}  // namespace tatezeta

#endif
