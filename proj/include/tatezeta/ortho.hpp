#ifndef TATEZETA_ORTHO_HPP
#define TATEZETA_ORTHO_HPP

#include <map>
#include <tuple>

#include "tatezeta/gamma.hpp"
#include "tatezeta/poly.hpp"
#include "tatezeta/quadrature.hpp"

namespace tatezeta {

struct OrthoResult {
    BigFloat cross;      // int rho_m rho_m' w_k dt
    BigFloat norm_sq_a;  // int rho_m^2 w_k dt
    BigFloat norm_sq_b;
    bool pass = false;

    explicit OrthoResult(mpfr_prec_t prec = BigFloat::kDefaultPrec)
        : cross(prec), norm_sq_a(prec), norm_sq_b(prec) {}
};

// Weighted critical-line integrals against |Gamma((k+1)/2 + it)|^2 dt,
// assembled from cached even moments of the weight over (-T, T) with T chosen
// from an explicit tail bound. One instance per worker.
class OrthoChecker {
  public:
    explicit OrthoChecker(mpfr_prec_t prec = BigFloat::kDefaultPrec, double tol_rel = 1e-30)
        : prec_(prec), quad_(prec, tol_rel) {}

    // m != m2: pass iff |cross| <= tol * sqrt(norm_sq_a * norm_sq_b) and both
    // diagonal integrals are strictly positive.
    // m == m2: pass iff the diagonal integral is strictly positive.
    OrthoResult check(int m, int m2, int k, double tol);

    // int_{-T}^{T} rho_a rho_b w_k dt with shared moment cache.
    BigFloat weighted_integral(const RatPoly& rho_a, const RatPoly& rho_b, int k);

  private:
    BigFloat moment(int k, long t_cut, int j);
    long choose_cut(const RatPoly& prod, int k) const;

    mpfr_prec_t prec_;
    TanhSinh quad_;
    std::map<std::tuple<int, long, int>, BigFloat> moments_;
};

}  // namespace tatezeta

#endif
