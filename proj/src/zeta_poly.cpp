#include "tatezeta/zeta_poly.hpp"

#include <vector>

#include "tatezeta/errors.hpp"

namespace tatezeta {

RatPoly hermite_poly(int m) {
    RatPoly h_prev{Rational(1)};
    if (m == 0) return h_prev;
    RatPoly h{Rational(0), Rational(2)};
    RatPoly x = h;  // 2x, reused as the multiplier
    for (int n = 1; n < m; ++n) {
        RatPoly next = x * h - Rational(2 * n) * h_prev;
        h_prev = std::move(h);
        h = std::move(next);
    }
    return h;
}

RatPoly laguerre_poly(int n, int alpha) {
    // L_n^(a)(x) = sum_i (-1)^i binom(n+a, n-i) x^i / i!
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        Rational term(binomial(static_cast<unsigned long>(n + alpha),
                               static_cast<unsigned long>(n - i)),
                      factorial(static_cast<unsigned long>(i)));
        term.canonicalize();
        if (i % 2) term = -term;
        c[static_cast<std::size_t>(i)] = term;
    }
    return RatPoly(std::move(c));
}

std::map<int, Rational> cos_power_expand(int n) {
    std::map<int, Rational> out;
    if (n == 0) {
        out[0] = 1;
        return out;
    }
    if (n % 2 == 0) {
        int half = n / 2;
        out[0] = Rational(binomial(static_cast<unsigned long>(n),
                                   static_cast<unsigned long>(half)),
                          pow_int(2, static_cast<unsigned long>(n)));
        out[0].canonicalize();
        for (int j = 1; j <= half; ++j) {
            Rational c(binomial(static_cast<unsigned long>(n),
                                static_cast<unsigned long>(half - j)),
                       pow_int(2, static_cast<unsigned long>(n - 1)));
            c.canonicalize();
            out[2 * j] = c;
        }
    } else {
        int half = (n + 1) / 2;
        for (int j = 1; j <= half; ++j) {
            Rational c(binomial(static_cast<unsigned long>(n),
                                static_cast<unsigned long>(half - j)),
                       pow_int(2, static_cast<unsigned long>(n - 1)));
            c.canonicalize();
            out[2 * j - 1] = c;
        }
    }
    return out;
}

AngularDecomposition angular_decompose(int m) {
    AngularDecomposition dec;
    dec.m = m;
    RatPoly h = hermite_poly(m);
    // H_m(sqrt(2pi) r cos t) = sum_i h_i (2pi)^(i/2) r^i cos^i t; write
    // i = k + 2j and collect cos(k t): the k-component is
    // (2pi)^(k/2) r^k * [sum_j h_{k+2j} c_{k+2j,k} w^j] with w = 2pi r^2.
    for (int i = m % 2; i <= m; i += 2) {
        Rational hi = h.coeff(static_cast<std::size_t>(i));
        if (hi == 0) continue;
        for (const auto& [k, c] : cos_power_expand(i)) {
            int j = (i - k) / 2;
            RatPoly& a = dec.components[k];
            a.set_coeff(static_cast<std::size_t>(j), a.coeff(static_cast<std::size_t>(j)) + hi * c);
        }
    }
    return dec;
}

ZetaPolyRecord zeta_poly_expansion(int m, int k) {
    ZetaPolyRecord rec;
    rec.m = m;
    rec.k = k;
    rec.route = Route::expansion;
    if (!admissible_pair(m, k)) {
        rec.is_zero = true;
        rec.degree = 0;
        return rec;
    }
    int d = (m - k) / 2;
    rec.degree = d;
    RatPoly a = angular_decompose(m).components.at(k);
    // Each w^j term contributes b_j * 2^j * (s + k/2)(s + k/2 + 1)...(s + k/2 + j - 1)
    // once the shared Gamma(s + k/2) pi^(1-s) factor is stripped.
    RatPoly p;
    Rational half_k(k, 2);
    half_k.canonicalize();
    RatPoly rising{Rational(1)};
    Rational two_pow(1);
    for (int j = 0; j <= d; ++j) {
        Rational bj = a.coeff(static_cast<std::size_t>(j));
        if (bj != 0) p += (bj * two_pow) * rising;
        rising *= RatPoly{half_k + j, Rational(1)};
        two_pow *= 2;
    }
    rec.coeffs = primitivize(p);
    if (rec.coeffs.degree() != d)
        throw Error("zeta_poly_expansion: degree mismatch at (" + std::to_string(m) + "," +
                    std::to_string(k) + ")");
    return rec;
}

namespace {

// Exact nullspace of a square rational matrix via fraction-free style
// Gauss-Jordan; returns a basis as rows.
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    std::vector<long> pivot_col_of_row(n, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t pivot = row;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) continue;
        std::swap(a[pivot], a[row]);
        Rational inv = a[row][col];
        for (std::size_t j = 0; j < n; ++j) a[row][j] /= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col_of_row[row] = static_cast<long>(col);
        ++row;
    }
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < row; ++i) is_pivot[static_cast<std::size_t>(pivot_col_of_row[i])] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(n, Rational(0));
        v[free_col] = 1;
        for (std::size_t i = 0; i < row; ++i) {
            std::size_t pc = static_cast<std::size_t>(pivot_col_of_row[i]);
            v[pc] = -a[i][free_col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

ZetaPolyRecord zeta_poly_recurrence(int m, int k) {
    if (!admissible_pair(m, k))
        throw DomainError("zeta_poly_recurrence: (m-k)/2 must be a nonnegative integer");
    int d = (m - k) / 2;
    const std::size_t n = static_cast<std::size_t>(d) + 1;
    Rational a(k + 1, 2);
    a.canonicalize();

    // Columns: T(s^c) with T(q)(s) = (s+a) q(s+1) - (s-a) q(s-1), minus (m+1)s^c.
    std::vector<std::vector<Rational>> mat(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t c = 0; c < n; ++c) {
        RatPoly mono = RatPoly::monomial(c);
        RatPoly up = poly_shift(mono, Rational(1));
        RatPoly down = poly_shift(mono, Rational(-1));
        RatPoly img = RatPoly{a, Rational(1)} * up - RatPoly{-a, Rational(1)} * down;
        if (img.degree() > d)
            throw Error("zeta_poly_recurrence: operator left the degree-" + std::to_string(d) +
                        " space");
        for (std::size_t r = 0; r < n; ++r) mat[r][c] = img.coeff(r);
        mat[c][c] -= Rational(m + 1);
    }

    auto basis = nullspace(std::move(mat));
    if (basis.size() != 1)
        throw DegenerateEigenspace("zeta_poly_recurrence: eigenspace dimension " +
                                   std::to_string(basis.size()) + " at (" + std::to_string(m) +
                                   "," + std::to_string(k) + ")");
    RatPoly q(std::move(basis[0]));
    RatPoly p = poly_shift(q, Rational(-1, 2));

    ZetaPolyRecord rec;
    rec.m = m;
    rec.k = k;
    rec.degree = d;
    rec.route = Route::recurrence;
    rec.coeffs = primitivize(p);
    if (rec.coeffs.degree() != d)
        throw DegenerateEigenspace("zeta_poly_recurrence: eigenvector degree " +
                                   std::to_string(rec.coeffs.degree()) + " != " +
                                   std::to_string(d));
    return rec;
}

bool functional_equation_check(const ZetaPolyRecord& rec) {
    if (rec.is_zero) throw DomainError("functional_equation_check: zero record");
    const RatPoly& p = rec.coeffs;
    Rational half_k(rec.k, 2);
    half_k.canonicalize();
    RatPoly lhs = Rational(rec.m + 1) * p;
    RatPoly rhs = RatPoly{half_k, Rational(1)} * poly_shift(p, Rational(1)) -
                  RatPoly{-half_k - 1, Rational(1)} * poly_shift(p, Rational(-1));
    if (lhs != rhs)
        throw IdentityViolated("functional equation residual at (m=" + std::to_string(rec.m) +
                               ",k=" + std::to_string(rec.k) + "): " + to_string(lhs - rhs));
    return true;
}

bool symmetry_check(const ZetaPolyRecord& rec) {
    if (rec.is_zero) throw DomainError("symmetry_check: zero record");
    const RatPoly& p = rec.coeffs;
    RatPoly reflected = compose_linear(p, Rational(-1), Rational(1));
    RatPoly expect = rec.degree % 2 ? -p : p;
    if (reflected != expect)
        throw IdentityViolated("line symmetry residual at (m=" + std::to_string(rec.m) +
                               ",k=" + std::to_string(rec.k) + "): " +
                               to_string(reflected - expect));
    return true;
}

}  // namespace tatezeta
