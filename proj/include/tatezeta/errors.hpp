#ifndef TATEZETA_ERRORS_HPP
#define TATEZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tatezeta {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// critical_line_restriction: the substituted polynomial kept an imaginary part.
struct NonRealRestriction : Error {
    using Error::Error;
};

// sturm_count: the polynomial vanishes at an interval endpoint.
struct EndpointRoot : Error {
    using Error::Error;
};

// An exact identity that should hold failed; the message carries the residual.
struct IdentityViolated : Error {
    using Error::Error;
};

// zeta_poly_recurrence: eigenspace dimension != 1.
struct DegenerateEigenspace : Error {
    using Error::Error;
};

// bmn_fn and friends: index out of the admissible (m, n) range.
struct DomainError : Error {
    using Error::Error;
};

// gamma_complex: argument too close to a pole.
struct PoleProximity : Error {
    using Error::Error;
};

// quadrature / root refinement: tolerance not reached within the budget.
struct NonConvergent : Error {
    using Error::Error;
};

// root_find: simultaneous iteration did not settle.
struct NoConvergence : Error {
    using Error::Error;
};

// strip_shrink_property: a counterexample was found; message serializes it.
struct PropertyViolated : Error {
    using Error::Error;
};

}  // namespace tatezeta

#endif
