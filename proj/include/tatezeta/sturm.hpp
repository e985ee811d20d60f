#ifndef TATEZETA_STURM_HPP
#define TATEZETA_STURM_HPP

#include <vector>

#include "tatezeta/poly.hpp"

namespace tatezeta {

// rho(t) = (-i)^d * p(1/2 + i*t) for a rational p of degree d. The result has
// rational coefficients exactly when p satisfies the line symmetry
// p(1-s) = (-1)^d p(s); otherwise NonRealRestriction is thrown.
RatPoly critical_line_restriction(const RatPoly& p);

// Inverse substitution: recovers p from rho, p(s) = i^d * rho(-i*(s - 1/2)).
RatPoly critical_line_unrestriction(const RatPoly& rho, int d);

// Classical Sturm chain: p, p', then negated Euclidean remainders, each
// normalized to a primitive integer row (positive scaling only, so the sign
// pattern is untouched).
std::vector<RatPoly> sturm_chain(const RatPoly& p);

// Exact number of distinct real roots of rho in the open interval (lo, hi).
// Throws EndpointRoot if rho vanishes at lo or hi.
int sturm_count(const RatPoly& rho, const Rational& lo, const Rational& hi);

// Distinct real roots on the whole line, counted over (-B-1, B+1) with B the
// Cauchy bound.
int sturm_count_all(const RatPoly& rho);

// true iff gcd(rho, rho') is constant.
bool squarefree_check(const RatPoly& rho);

// B = 1 + max_j |c_j / c_deg|; every complex root has modulus <= B.
Rational cauchy_root_bound(const RatPoly& rho);

}  // namespace tatezeta

#endif
