#ifndef TATEZETA_GAUSSIAN_HPP
#define TATEZETA_GAUSSIAN_HPP

#include <ostream>
#include <string>

#include "tatezeta/rational.hpp"

namespace tatezeta {

// Element of Q(i). Field arithmetic is closed and conjugation is an
// involution; both follow from the component formulas below.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(const Rational& r) : re(r), im(0) {}
    GaussianRational(long r) : re(r), im(0) {}
    GaussianRational(int r) : re(r), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    // |z|^2, a nonnegative rational.
    Rational norm() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        Rational n = o.norm();
        Rational r = (re * o.re + im * o.im) / n;
        Rational i = (im * o.re - re * o.im) / n;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

// i^e for any integer e.
inline GaussianRational i_power(long e) {
    long r = ((e % 4) + 4) % 4;
    switch (r) {
        case 0: return GaussianRational(1);
        case 1: return GaussianRational::i();
        case 2: return GaussianRational(-1);
        default: return -GaussianRational::i();
    }
}

inline GaussianRational pow_gaussian(GaussianRational base, unsigned long e) {
    GaussianRational acc(1);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }

inline std::string to_string(const GaussianRational& z) {
    if (z.im == 0) return z.re.get_str();
    if (z.re == 0) return z.im.get_str() + "*i";
    std::string s = z.re.get_str();
    if (z.im > 0) s += "+";
    return s + z.im.get_str() + "*i";
}

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << to_string(z);
}

}  // namespace tatezeta

#endif
