#ifndef TATEZETA_POLY_HPP
#define TATEZETA_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "tatezeta/errors.hpp"
#include "tatezeta/gaussian.hpp"
#include "tatezeta/rational.hpp"

namespace tatezeta {

// Dense univariate polynomial over an exact field K, coefficients stored in
// ascending degree. The coefficient vector never ends in a zero: degree() is
// size()-1 for nonzero polynomials and -1 for the zero polynomial.
template <class K>
class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<K> c) : c_(c) { trim(); }
    explicit Poly(std::vector<K> c) : c_(std::move(c)) { trim(); }
    explicit Poly(const K& k) : c_{k} { trim(); }

    static Poly monomial(std::size_t d, const K& k = K(1)) {
        std::vector<K> c(d + 1, K(0));
        c[d] = k;
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const K& leading() const { return c_.back(); }

    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
    const std::vector<K>& coeffs() const { return c_; }

    void set_coeff(std::size_t i, const K& k) {
        if (i >= c_.size()) c_.resize(i + 1, K(0));
        c_[i] = k;
        trim();
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& k : r.c_) k = -k;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const K& k) {
        for (auto& c : c_) c *= k;
        trim();
        return *this;
    }
    Poly& operator/=(const K& k) {
        for (auto& c : c_) c /= k;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }
    friend Poly operator*(Poly a, const K& k) { return a *= k; }
    friend Poly operator*(const K& k, Poly a) { return a *= k; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    K operator()(const K& x) const { return eval(x); }

    K eval(const K& x) const {
        K acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // Horner evaluation into any ring T given a coefficient converter.
    template <class T, class Conv>
    T eval_as(const T& x, Conv conv) const {
        T acc = x - x;  // zero of T at x's precision
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + conv(c_[i]);
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * K(static_cast<long>(i));
        return Poly(std::move(c));
    }

    // Euclidean division; K must be a field and divisor nonzero.
    std::pair<Poly, Poly> divrem(const Poly& d) const {
        Poly r = *this;
        Poly q;
        if (d.is_zero()) throw Error("poly divrem: division by zero polynomial");
        while (!r.is_zero() && r.degree() >= d.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
            K factor = r.leading() / d.leading();
            q += Poly::monomial(shift, factor);
            r -= Poly::monomial(shift, factor) * d;
        }
        return {q, r};
    }

  private:
    void trim() {
        while (!c_.empty() && tatezeta::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<K> c_;
};

using RatPoly = Poly<Rational>;
using CPoly = Poly<GaussianRational>;

// p(x + delta), computed by Horner over K; the degree is preserved.
template <class K>
Poly<K> poly_shift(const Poly<K>& p, const K& delta) {
    Poly<K> lin{delta, K(1)};
    Poly<K> acc;
    for (std::size_t i = static_cast<std::size_t>(p.degree() + 1); i-- > 0;) {
        acc = acc * lin + Poly<K>(p.coeff(i));
    }
    return acc;
}

inline RatPoly poly_shift(const RatPoly& p, const Rational& delta) {
    return poly_shift<Rational>(p, delta);
}

// p(a*x + b) over K.
template <class K>
Poly<K> compose_linear(const Poly<K>& p, const K& a, const K& b) {
    Poly<K> lin{b, a};
    Poly<K> acc;
    for (std::size_t i = static_cast<std::size_t>(p.degree() + 1); i-- > 0;) {
        acc = acc * lin + Poly<K>(p.coeff(i));
    }
    return acc;
}

inline CPoly to_gaussian(const RatPoly& p) {
    std::vector<GaussianRational> c(static_cast<std::size_t>(p.degree() + 1));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = GaussianRational(p.coeff(i));
    return CPoly(std::move(c));
}

// Fails with NonRealRestriction if any coefficient has an imaginary part.
inline RatPoly to_rational(const CPoly& p) {
    std::vector<Rational> c(static_cast<std::size_t>(p.degree() + 1));
    for (std::size_t i = 0; i < c.size(); ++i) {
        GaussianRational z = p.coeff(i);
        if (!z.is_real())
            throw NonRealRestriction("coefficient of t^" + std::to_string(i) +
                                     " has imaginary part " + z.im.get_str());
        c[i] = z.re;
    }
    return RatPoly(std::move(c));
}

// Positive rational c such that p/c has coprime integer coefficients.
inline Rational content(const RatPoly& p) {
    if (p.is_zero()) return 1;
    Int num_gcd = 0;
    Int den_lcm = 1;
    for (int i = 0; i <= p.degree(); ++i) {
        Rational q = p.coeff(i);
        if (q == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    }
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

// Scale to coprime integer coefficients with positive leading coefficient.
inline RatPoly primitivize(const RatPoly& p) {
    if (p.is_zero()) return p;
    Rational c = content(p);
    RatPoly r = p;
    r /= c;
    if (r.leading() < 0) r *= Rational(-1);
    return r;
}

// Monic gcd over a field.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = a.divrem(b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a /= a.leading();
    return a;
}

template <class K>
std::string to_string(const Poly<K>& p, const std::string& var = "s") {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        K c = p.coeff(static_cast<std::size_t>(i));
        if (tatezeta::is_zero(c)) continue;
        if (!out.empty()) out += " + ";
        out += "(" + to_string(c) + ")";
        if (i >= 1) out += "*" + var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

template <class K>
std::ostream& operator<<(std::ostream& os, const Poly<K>& p) {
    return os << to_string(p);
}

}  // namespace tatezeta

#endif
