#include "tatezeta/hermgauss.hpp"

#include <mutex>
#include <vector>

#include "tatezeta/zeta_poly.hpp"

namespace tatezeta {

namespace {

// monomial_in_hermite(a)[j] is the coefficient of H_j in u^a, built from
// u H_j = H_{j+1}/2 + j H_{j-1}. The cache grows under a mutex; rows are
// returned by value so readers never hold a reference into it.
std::vector<Rational> monomial_in_hermite(int a) {
    static std::mutex mu;
    static std::vector<std::vector<Rational>> table = {{Rational(1)}};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(table.size()) <= a) {
        const auto& prev = table.back();
        std::vector<Rational> next(table.size() + 1, Rational(0));
        for (std::size_t j = 0; j < prev.size(); ++j) {
            if (prev[j] == 0) continue;
            next[j + 1] += prev[j] / 2;
            if (j > 0) next[j - 1] += prev[j] * Rational(static_cast<long>(j));
        }
        table.push_back(std::move(next));
    }
    return table[static_cast<std::size_t>(a)];
}

}  // namespace

HermiteExpansion to_hermite(const HermGaussFn& f) {
    HermiteExpansion e;
    for (const auto& [key, c] : f.poly.terms()) {
        const auto& mu = monomial_in_hermite(key.first);
        const auto& mv = monomial_in_hermite(key.second);
        for (std::size_t p = 0; p < mu.size(); ++p) {
            if (mu[p] == 0) continue;
            for (std::size_t q = 0; q < mv.size(); ++q) {
                if (mv[q] == 0) continue;
                auto idx = std::make_pair(static_cast<int>(p), static_cast<int>(q));
                GaussianRational add = c * GaussianRational(mu[p] * mv[q]);
                auto [it, inserted] = e.terms.try_emplace(idx, add);
                if (!inserted) {
                    it->second += add;
                    if (it->second.is_zero()) e.terms.erase(it);
                }
            }
        }
    }
    return e;
}

HermGaussFn from_hermite(const HermiteExpansion& e) {
    PolyUV p;
    for (const auto& [key, c] : e.terms) {
        RatPoly hu = hermite_poly(key.first);
        RatPoly hv = hermite_poly(key.second);
        for (int a = 0; a <= hu.degree(); ++a) {
            Rational cu = hu.coeff(static_cast<std::size_t>(a));
            if (cu == 0) continue;
            for (int b = 0; b <= hv.degree(); ++b) {
                Rational cv = hv.coeff(static_cast<std::size_t>(b));
                if (cv == 0) continue;
                p.add_term(a, b, c * GaussianRational(cu * cv));
            }
        }
    }
    return HermGaussFn(std::move(p));
}

std::string to_string(const PolyUV& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [key, c] : p.terms()) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(c) + ")";
        if (key.first) out += "*u^" + std::to_string(key.first);
        if (key.second) out += "*v^" + std::to_string(key.second);
    }
    return out;
}

std::string to_string(const HermiteExpansion& e) {
    if (e.terms.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : e.terms) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(c) + ")*f[" + std::to_string(key.first) + "," +
               std::to_string(key.second) + "]";
    }
    return out;
}

}  // namespace tatezeta
