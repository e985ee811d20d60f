#ifndef TATEZETA_HERMGAUSS_HPP
#define TATEZETA_HERMGAUSS_HPP

#include <map>
#include <string>
#include <utility>

#include "tatezeta/gaussian.hpp"
#include "tatezeta/poly.hpp"

namespace tatezeta {

// Bivariate polynomial over Q(i) in the scaled coordinates (u, v), sparse map
// (u-power, v-power) -> coefficient. Zero coefficients are never stored.
class PolyUV {
  public:
    using Key = std::pair<int, int>;
    using Map = std::map<Key, GaussianRational>;

    PolyUV() = default;

    static PolyUV constant(const GaussianRational& c) {
        PolyUV p;
        p.add_term(0, 0, c);
        return p;
    }
    static PolyUV monomial(int a, int b, const GaussianRational& c = GaussianRational(1)) {
        PolyUV p;
        p.add_term(a, b, c);
        return p;
    }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const {
        int d = -1;
        for (const auto& [key, c] : terms_) d = std::max(d, key.first + key.second);
        return d;
    }

    void add_term(int a, int b, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace({a, b}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    GaussianRational coeff(int a, int b) const {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? GaussianRational(0) : it->second;
    }

    PolyUV operator-() const {
        PolyUV r = *this;
        for (auto& [key, c] : r.terms_) c = -c;
        return r;
    }
    PolyUV& operator+=(const PolyUV& o) {
        for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
        return *this;
    }
    PolyUV& operator-=(const PolyUV& o) {
        for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
        return *this;
    }
    PolyUV& operator*=(const GaussianRational& k) {
        if (k.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [key, c] : terms_) c *= k;
        return *this;
    }

    friend PolyUV operator+(PolyUV a, const PolyUV& b) { return a += b; }
    friend PolyUV operator-(PolyUV a, const PolyUV& b) { return a -= b; }
    friend PolyUV operator*(PolyUV a, const GaussianRational& k) { return a *= k; }
    friend PolyUV operator*(const GaussianRational& k, PolyUV a) { return a *= k; }
    friend PolyUV operator*(const PolyUV& a, const PolyUV& b) {
        PolyUV r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }
    friend bool operator==(const PolyUV& a, const PolyUV& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const PolyUV& a, const PolyUV& b) { return !(a == b); }

    PolyUV du() const {
        PolyUV r;
        for (const auto& [key, c] : terms_)
            if (key.first > 0) r.add_term(key.first - 1, key.second, c * GaussianRational(key.first));
        return r;
    }
    PolyUV dv() const {
        PolyUV r;
        for (const auto& [key, c] : terms_)
            if (key.second > 0) r.add_term(key.first, key.second - 1, c * GaussianRational(key.second));
        return r;
    }
    PolyUV mul_u() const {
        PolyUV r;
        for (const auto& [key, c] : terms_) r.add_term(key.first + 1, key.second, c);
        return r;
    }
    PolyUV mul_v() const {
        PolyUV r;
        for (const auto& [key, c] : terms_) r.add_term(key.first, key.second + 1, c);
        return r;
    }

    PolyUV conj() const {
        PolyUV r;
        for (const auto& [key, c] : terms_) r.add_term(key.first, key.second, c.conj());
        return r;
    }

  private:
    Map terms_;
};

// P(u, v) * exp(-(u^2+v^2)/2) with P stored exactly; in the original
// coordinates this is P(sqrt(2 pi) x, sqrt(2 pi) y) * exp(-pi (x^2+y^2)).
struct HermGaussFn {
    PolyUV poly;

    HermGaussFn() = default;
    explicit HermGaussFn(PolyUV p) : poly(std::move(p)) {}

    bool is_zero() const { return poly.is_zero(); }
    int total_degree() const { return poly.total_degree(); }

    HermGaussFn operator-() const { return HermGaussFn(-poly); }
    HermGaussFn& operator+=(const HermGaussFn& o) {
        poly += o.poly;
        return *this;
    }
    HermGaussFn& operator-=(const HermGaussFn& o) {
        poly -= o.poly;
        return *this;
    }
    HermGaussFn& operator*=(const GaussianRational& k) {
        poly *= k;
        return *this;
    }
    friend HermGaussFn operator+(HermGaussFn a, const HermGaussFn& b) { return a += b; }
    friend HermGaussFn operator-(HermGaussFn a, const HermGaussFn& b) { return a -= b; }
    friend HermGaussFn operator*(const GaussianRational& k, HermGaussFn a) { return a *= k; }
    friend bool operator==(const HermGaussFn& a, const HermGaussFn& b) { return a.poly == b.poly; }
    friend bool operator!=(const HermGaussFn& a, const HermGaussFn& b) { return !(a == b); }

    HermGaussFn conj() const { return HermGaussFn(poly.conj()); }
};

// Coefficients over the product-Hermite basis f_{m,n}.
struct HermiteExpansion {
    std::map<std::pair<int, int>, GaussianRational> terms;
};

enum class SU2Generator { J, K, R };

inline std::string to_string(SU2Generator g) {
    switch (g) {
        case SU2Generator::J: return "J";
        case SU2Generator::K: return "K";
        default: return "R";
    }
}

std::string to_string(const PolyUV& p);
std::string to_string(const HermiteExpansion& e);

// Exact linear bijection between the monomial and Hermite-product pictures.
HermiteExpansion to_hermite(const HermGaussFn& f);
HermGaussFn from_hermite(const HermiteExpansion& e);

}  // namespace tatezeta

#endif
