#ifndef TATEZETA_QUADRATURE_HPP
#define TATEZETA_QUADRATURE_HPP

#include <functional>

#include "tatezeta/bigfloat.hpp"

namespace tatezeta {

struct QuadratureResult {
    BigComplex value;
    double error_estimate = 0.0;  // absolute, >= 0; includes truncation
    long evaluations = 0;

    explicit QuadratureResult(mpfr_prec_t prec = BigFloat::kDefaultPrec) : value(prec) {}
};

// Double-exponential (tanh-sinh) quadrature over a finite interval. Handles
// integrable endpoint singularities, which is what the radial factor
// r^(2s-1) needs near 0. Each instance owns its scratch; do not share one
// across threads.
class TanhSinh {
  public:
    explicit TanhSinh(mpfr_prec_t prec = BigFloat::kDefaultPrec, double tol_rel = 1e-30,
                      int max_level = 12, long max_evaluations = 2000000)
        : prec_(prec), tol_rel_(tol_rel), max_level_(max_level), max_evals_(max_evaluations) {}

    // Throws NonConvergent if the level cap is reached before the tolerance.
    QuadratureResult integrate(const std::function<BigComplex(const BigFloat&)>& f,
                               const BigFloat& a, const BigFloat& b) const;

    mpfr_prec_t prec() const { return prec_; }

  private:
    mpfr_prec_t prec_;
    double tol_rel_;
    int max_level_;
    long max_evals_;
};

}  // namespace tatezeta

#endif
