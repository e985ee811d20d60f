#ifndef TATEZETA_BIGFLOAT_HPP
#define TATEZETA_BIGFLOAT_HPP

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "tatezeta/gaussian.hpp"
#include "tatezeta/rational.hpp"

namespace tatezeta {

// RAII wrapper around mpfr_t. Every value carries its precision; binary
// operations compute at the larger of the two operand precisions, so nothing
// is ever silently downcast.
class BigFloat {
  public:
    static constexpr mpfr_prec_t kDefaultPrec = 128;

    explicit BigFloat(mpfr_prec_t prec = kDefaultPrec) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }
    BigFloat(double d, mpfr_prec_t prec) {
        mpfr_init2(x_, prec);
        mpfr_set_d(x_, d, MPFR_RNDN);
    }
    BigFloat(long n, mpfr_prec_t prec) {
        mpfr_init2(x_, prec);
        mpfr_set_si(x_, n, MPFR_RNDN);
    }
    BigFloat(const Rational& q, mpfr_prec_t prec) {
        mpfr_init2(x_, prec);
        mpfr_set_q(x_, q.get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_swap(x_, o.x_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(x_, mpfr_get_prec(o.x_));
            mpfr_set(x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(x_, o.x_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(x_); }

    mpfr_ptr raw() { return x_; }
    mpfr_srcptr raw() const { return x_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(x_); }

    static BigFloat pi(mpfr_prec_t prec = kDefaultPrec) {
        BigFloat r(prec);
        mpfr_const_pi(r.x_, MPFR_RNDN);
        return r;
    }
    static BigFloat from_string(const std::string& s, mpfr_prec_t prec = kDefaultPrec) {
        BigFloat r(prec);
        mpfr_set_str(r.x_, s.c_str(), 10, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(x_); }
    bool is_negative() const { return mpfr_sgn(x_) < 0; }
    int sgn() const { return mpfr_sgn(x_); }

    // Fixed-point decimal with `digits` places, deterministically rounded.
    std::string to_fixed(int digits) const {
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Rf", digits, x_);
        std::string s(buf);
        mpfr_free_str(buf);
        return s;
    }
    std::string to_sci(int digits = 20) const {
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Re", digits, x_);
        std::string s(buf);
        mpfr_free_str(buf);
        return s;
    }

    friend mpfr_prec_t join_prec(const BigFloat& a, const BigFloat& b) {
        return std::max(mpfr_get_prec(a.x_), mpfr_get_prec(b.x_));
    }

#define TATEZETA_BF_BINOP(op, fn)                                  \
    friend BigFloat operator op(const BigFloat& a, const BigFloat& b) { \
        BigFloat r(join_prec(a, b));                               \
        fn(r.x_, a.x_, b.x_, MPFR_RNDN);                           \
        return r;                                                  \
    }
    TATEZETA_BF_BINOP(+, mpfr_add)
    TATEZETA_BF_BINOP(-, mpfr_sub)
    TATEZETA_BF_BINOP(*, mpfr_mul)
    TATEZETA_BF_BINOP(/, mpfr_div)
#undef TATEZETA_BF_BINOP

    BigFloat operator-() const {
        BigFloat r(prec());
        mpfr_neg(r.x_, x_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
    BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
    BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
    BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) == 0; }

#define TATEZETA_BF_FN(name, fn)                 \
    friend BigFloat name(const BigFloat& a) {    \
        BigFloat r(a.prec());                    \
        fn(r.x_, a.x_, MPFR_RNDN);               \
        return r;                                \
    }
    TATEZETA_BF_FN(abs, mpfr_abs)
    TATEZETA_BF_FN(sqrt, mpfr_sqrt)
    TATEZETA_BF_FN(exp, mpfr_exp)
    TATEZETA_BF_FN(log, mpfr_log)
    TATEZETA_BF_FN(sin, mpfr_sin)
    TATEZETA_BF_FN(cos, mpfr_cos)
    TATEZETA_BF_FN(tan, mpfr_tan)
    TATEZETA_BF_FN(sinh, mpfr_sinh)
    TATEZETA_BF_FN(cosh, mpfr_cosh)
    TATEZETA_BF_FN(tanh, mpfr_tanh)
#undef TATEZETA_BF_FN

    friend BigFloat atan2(const BigFloat& y, const BigFloat& x) {
        BigFloat r(join_prec(y, x));
        mpfr_atan2(r.raw(), y.x_, x.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat pow(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join_prec(a, b));
        mpfr_pow(r.raw(), a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat pow_si(const BigFloat& a, long e) {
        BigFloat r(a.prec());
        mpfr_pow_si(r.raw(), a.x_, e, MPFR_RNDN);
        return r;
    }
    friend BigFloat ldexp(const BigFloat& a, long e) {
        BigFloat r(a.prec());
        mpfr_mul_2si(r.raw(), a.x_, e, MPFR_RNDN);
        return r;
    }
    friend BigFloat min(const BigFloat& a, const BigFloat& b) { return a < b ? a : b; }
    friend BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

    friend long lround(const BigFloat& a) {
        return mpfr_get_si(a.x_, MPFR_RNDN);
    }

  private:
    mpfr_t x_;
};

struct BigComplex {
    BigFloat re;
    BigFloat im;

    explicit BigComplex(mpfr_prec_t prec = BigFloat::kDefaultPrec) : re(prec), im(prec) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    BigComplex(double r, double i, mpfr_prec_t prec = BigFloat::kDefaultPrec)
        : re(r, prec), im(i, prec) {}

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    BigComplex operator-() const { return {-re, -im}; }
    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator*(const BigFloat& a, const BigComplex& b) {
        return {a * b.re, a * b.im};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend BigComplex operator/(const BigComplex& a, const BigFloat& b) {
        return {a.re / b, a.im / b};
    }
    BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
    BigComplex& operator-=(const BigComplex& o) { return *this = *this - o; }
    BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }

    BigComplex conj() const { return {re, -im}; }

    friend BigFloat abs(const BigComplex& z) { return sqrt(z.re * z.re + z.im * z.im); }

    friend BigComplex exp(const BigComplex& z) {
        BigFloat m = exp(z.re);
        return {m * cos(z.im), m * sin(z.im)};
    }
    // Principal branch.
    friend BigComplex log(const BigComplex& z) {
        BigFloat half(Rational(1, 2), z.prec());
        return {half * log(z.re * z.re + z.im * z.im), atan2(z.im, z.re)};
    }
    friend BigComplex pow(const BigComplex& base, const BigComplex& e) {
        return exp(e * log(base));
    }
    friend BigComplex sin(const BigComplex& z) {
        return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
    }

    std::string to_string(int digits = 25) const {
        return re.to_sci(digits) + (im.is_negative() ? " - " : " + ") + abs(im).to_sci(digits) +
               "*i";
    }
};

inline BigComplex to_bigcomplex(const GaussianRational& z, mpfr_prec_t prec) {
    return {BigFloat(z.re, prec), BigFloat(z.im, prec)};
}

}  // namespace tatezeta

#endif
