#ifndef TATEZETA_ZETA_NUMERIC_HPP
#define TATEZETA_ZETA_NUMERIC_HPP

#include <map>
#include <string>
#include <vector>

#include "tatezeta/hermgauss.hpp"
#include "tatezeta/quadrature.hpp"

namespace tatezeta {

// Caches the radial integrals int_0^inf r^(N + 2s - 1) e^(-pi r^2) dr keyed
// by (N, s). One instance per worker; not thread-safe.
class ZetaNumeric {
  public:
    explicit ZetaNumeric(mpfr_prec_t prec = BigFloat::kDefaultPrec, double tol_rel = 1e-30)
        : prec_(prec), tol_rel_(tol_rel), quad_(prec, tol_rel) {}

    // int_0^inf int_0^2pi f(r e^{i theta}) e^{i k theta} r^{2s-1} dtheta dr
    // for Re(s) > 0. The angular integral of the trigonometric polynomial is
    // carried out exactly; only the radial factor is quadrature.
    QuadratureResult zeta(const HermGaussFn& f, int k, const BigComplex& s);

    // Ratios zeta(f, k, s_i) / (Gamma(s_i + k/2) pi^(1 - s_i) p(s_i)) for the
    // exact polynomial p of the pair (m, k); constant in i exactly when f
    // lies in the m-th invariant subspace.
    std::vector<BigComplex> ratio_scan(const HermGaussFn& f, int m, int k,
                                       const std::vector<BigComplex>& samples);

    // max_i |r_i - mean| / |mean| over a ratio list.
    static double relative_spread(const std::vector<BigComplex>& ratios);

    mpfr_prec_t prec() const { return prec_; }

  private:
    QuadratureResult radial_integral(int n_pow, const BigComplex& s);

    mpfr_prec_t prec_;
    double tol_rel_;
    TanhSinh quad_;
    std::map<std::string, QuadratureResult> cache_;
};

// (1/2pi) * iint P(u',v') e^(-(u'^2+v'^2)/2) e^(i(u u' - v v')) du' dv' at one
// point, by iterated tanh-sinh quadrature of the kernel integral. Used to
// validate the symbolic Fourier transform against its defining integral.
BigComplex fourier_kernel_quadrature(const HermGaussFn& f, const BigFloat& u, const BigFloat& v,
                                     mpfr_prec_t prec = BigFloat::kDefaultPrec);

// Evaluate a HermGaussFn (including its Gaussian weight) at a real point.
BigComplex hermgauss_eval(const HermGaussFn& f, const BigFloat& u, const BigFloat& v);

// Exact angular coefficient: (1/2pi) int_0^2pi cos^a sin^b e^{i k theta} dtheta.
GaussianRational angular_fourier_coefficient(int a, int b, int k);

}  // namespace tatezeta

#endif
