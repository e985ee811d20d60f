#ifndef TATEZETA_WEIL_HPP
#define TATEZETA_WEIL_HPP

#include "tatezeta/hermgauss.hpp"

namespace tatezeta {

// f_{m,n} = H_m(u) H_n(v) times the implicit Gaussian weight.
HermGaussFn hermite_fn(int m, int n);

// Lie-algebra action in scaled coordinates; the Gaussian weight is folded in
// through the weighted derivative D = d/du - u.
//   J: (i/2)(u^2 - v^2) - (i/2)(Du^2 - Dv^2)
//   K: -i uv + i Du Dv
//   R: -v Du + u Dv
HermGaussFn apply_generator(SU2Generator x, const HermGaussFn& f);

// The three ladder identities: J f = i(m-n) f, R f = n f_{m+1,n-1} - m f_{m-1,n+1},
// K f = -i n f_{m+1,n-1} - i m f_{m-1,n+1}. Throws IdentityViolated on failure.
bool ladder_check(int m, int n);

// [dw(X), dw(Y)] = dw([X, Y]) on all f_{m,n} with m + n <= degree_bound.
bool commutator_check(SU2Generator x, SU2Generator y, int degree_bound);

// Multiplies each Hermite component f_{m,n} by i^(m-n); two applications give
// the parity map (u, v) -> (-u, -v).
HermGaussFn fourier_transform(const HermGaussFn& f);
HermGaussFn inverse_fourier_transform(const HermGaussFn& f);

// Conjugating multiplication by (i/2)(u^2-v^2) (resp. -i uv) with the Fourier
// transform reproduces -(i/2)(Du^2-Dv^2) (resp. -i Du Dv) on every basis
// function with m + n <= degree_bound.
bool intertwining_check(int degree_bound);

// Rotation eigenbasis of W_m: (u + i sgn(n) v)^|n| * L_{(m-|n|)/2}^(|n|)(u^2+v^2)
// times the weight. Requires |n| <= m and m - |n| even.
HermGaussFn bmn_fn(int m, int n);

// apply_generator(R, b_{m,n}) = i n b_{m,n}, exactly.
bool rotation_eigen_check(int m, int n);

// b_{m,n} expands inside span{ f_{j,m-j} : 0 <= j <= m }.
bool membership_check(int m, int n);

// Bilinear pairing int f g dz as an exact rational (Gaussian moments; the
// 1/(2 pi) measure Jacobian is folded in).
Rational inner_product_real(const HermGaussFn& f, const HermGaussFn& g);
GaussianRational inner_product(const HermGaussFn& f, const HermGaussFn& g);

// Every generator maps span{ f_{j,m-j} } into itself.
bool subspace_invariance_check(int m);

// ((u^2+v^2)/2 - (Du^2+Dv^2)/2) f_{m,n} = (m+n+1) f_{m,n}.
bool harmonic_oscillator_check(int m, int n);

// Number operator above, exposed for the adjointness tests.
HermGaussFn harmonic_oscillator_apply(const HermGaussFn& f);

}  // namespace tatezeta

#endif
