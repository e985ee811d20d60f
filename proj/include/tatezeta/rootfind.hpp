#ifndef TATEZETA_ROOTFIND_HPP
#define TATEZETA_ROOTFIND_HPP

#include <vector>

#include "tatezeta/bigfloat.hpp"
#include "tatezeta/poly.hpp"

namespace tatezeta {

struct RootResult {
    BigComplex root;
    double residual;  // |p(root)| / max(|p'(root)|, tiny), a distance estimate
};

// All complex roots by Aberth-Ehrlich simultaneous iteration from perturbed
// circle starting points. Roots closer than 1e-15 trigger a retry at doubled
// precision. Deterministic; sorted by (re, im).
std::vector<RootResult> root_find(const CPoly& p, mpfr_prec_t prec = BigFloat::kDefaultPrec);

std::vector<RootResult> root_find(const RatPoly& p, mpfr_prec_t prec = BigFloat::kDefaultPrec);

}  // namespace tatezeta

#endif
