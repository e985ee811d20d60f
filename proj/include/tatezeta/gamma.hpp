#ifndef TATEZETA_GAMMA_HPP
#define TATEZETA_GAMMA_HPP

#include "tatezeta/bigfloat.hpp"

namespace tatezeta {

// Complex Gamma via the Stirling series with exact Bernoulli coefficients,
// argument shifting into the asymptotic region and reflection for Re(s) < 1/2.
// Relative error stays far below 1e-20 at the default 128-bit precision on
// |Re s|, |Im s| <= 50. Throws PoleProximity within 1e-15 of 0, -1, -2, ...
BigComplex gamma_complex(const BigComplex& s);

BigComplex log_gamma_complex(const BigComplex& s);

// |Gamma((k+1)/2 + i t)|^2, evaluated from the elementary closed form
// (pi t / sinh(pi t) resp. pi / cosh(pi t) times a finite product).
BigFloat ortho_weight(int k, const BigFloat& t);

}  // namespace tatezeta

#endif
