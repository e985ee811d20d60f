#ifndef TATEZETA_RATIONAL_HPP
#define TATEZETA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace tatezeta {

// Exact scalars. mpq_class is kept canonical by GMP: gcd(num, den) = 1 and
// den > 0, which is exactly the invariant we need.
using Int = mpz_class;
using Rational = mpq_class;

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    if (k > n) return 0;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// (n)!! with the usual convention (-1)!! = 0!! = 1.
inline Int double_factorial(long n) {
    if (n <= 0) return 1;
    Int r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return 1;
    Rational r;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), a);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), a);
    r.canonicalize();
    if (e < 0) r = 1 / r;
    return r;
}

// "num/den", or just "num" when den == 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational rational_from_string(const std::string& s) {
    Rational q(s);
    q.canonicalize();
    return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace tatezeta

#endif
