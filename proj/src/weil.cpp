#include "tatezeta/weil.hpp"

#include <array>
#include <cstdlib>

#include "tatezeta/errors.hpp"
#include "tatezeta/zeta_poly.hpp"

namespace tatezeta {

namespace {

// Weighted derivatives: d/du and d/dv acting through the Gaussian factor.
PolyUV weighted_du(const PolyUV& p) { return p.du() - p.mul_u(); }
PolyUV weighted_dv(const PolyUV& p) { return p.dv() - p.mul_v(); }

const GaussianRational kI = GaussianRational::i();

HermGaussFn scaled_hermite_fn(int m, int n, const GaussianRational& scale) {
    if (m < 0 || n < 0 || scale.is_zero()) return HermGaussFn();
    HermGaussFn f = hermite_fn(m, n);
    f *= scale;
    return f;
}

}  // namespace

HermGaussFn hermite_fn(int m, int n) {
    RatPoly hu = hermite_poly(m);
    RatPoly hv = hermite_poly(n);
    PolyUV p;
    for (int a = 0; a <= hu.degree(); ++a) {
        Rational cu = hu.coeff(static_cast<std::size_t>(a));
        if (cu == 0) continue;
        for (int b = 0; b <= hv.degree(); ++b) {
            Rational cv = hv.coeff(static_cast<std::size_t>(b));
            if (cv == 0) continue;
            p.add_term(a, b, GaussianRational(cu * cv));
        }
    }
    return HermGaussFn(std::move(p));
}

HermGaussFn apply_generator(SU2Generator x, const HermGaussFn& f) {
    const PolyUV& p = f.poly;
    switch (x) {
        case SU2Generator::J: {
            PolyUV mult = (PolyUV::monomial(2, 0) - PolyUV::monomial(0, 2)) * p;
            PolyUV diff = weighted_du(weighted_du(p)) - weighted_dv(weighted_dv(p));
            GaussianRational half_i = kI / GaussianRational(2);
            return HermGaussFn(half_i * (mult - diff));
        }
        case SU2Generator::K: {
            PolyUV mult = PolyUV::monomial(1, 1) * p;
            PolyUV diff = weighted_du(weighted_dv(p));
            return HermGaussFn(kI * (diff - mult));
        }
        default: {  // R
            return HermGaussFn(weighted_dv(p).mul_u() - weighted_du(p).mul_v());
        }
    }
}

bool ladder_check(int m, int n) {
    HermGaussFn f = hermite_fn(m, n);

    HermGaussFn j_lhs = apply_generator(SU2Generator::J, f);
    HermGaussFn j_rhs = scaled_hermite_fn(m, n, kI * GaussianRational(m - n));
    if (j_lhs != j_rhs)
        throw IdentityViolated("ladder J at (" + std::to_string(m) + "," + std::to_string(n) +
                               "): residual " + to_string(to_hermite(j_lhs - j_rhs)));

    HermGaussFn r_lhs = apply_generator(SU2Generator::R, f);
    HermGaussFn r_rhs = scaled_hermite_fn(m + 1, n - 1, GaussianRational(n)) -
                        scaled_hermite_fn(m - 1, n + 1, GaussianRational(m));
    if (r_lhs != r_rhs)
        throw IdentityViolated("ladder R at (" + std::to_string(m) + "," + std::to_string(n) +
                               "): residual " + to_string(to_hermite(r_lhs - r_rhs)));

    HermGaussFn k_lhs = apply_generator(SU2Generator::K, f);
    HermGaussFn k_rhs = scaled_hermite_fn(m + 1, n - 1, -kI * GaussianRational(n)) +
                        scaled_hermite_fn(m - 1, n + 1, -kI * GaussianRational(m));
    if (k_lhs != k_rhs)
        throw IdentityViolated("ladder K at (" + std::to_string(m) + "," + std::to_string(n) +
                               "): residual " + to_string(to_hermite(k_lhs - k_rhs)));
    return true;
}

namespace {

using Mat2 = std::array<std::array<GaussianRational, 2>, 2>;

Mat2 generator_matrix(SU2Generator g) {
    const GaussianRational one(1), i = kI, zero(0);
    switch (g) {
        case SU2Generator::J: return {{{zero, one}, {-one, zero}}};
        case SU2Generator::K: return {{{zero, i}, {i, zero}}};
        default: return {{{i, zero}, {zero, -i}}};
    }
}

Mat2 bracket(const Mat2& x, const Mat2& y) {
    Mat2 r;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            r[a][b] = x[a][0] * y[0][b] + x[a][1] * y[1][b] - y[a][0] * x[0][b] -
                      y[a][1] * x[1][b];
    return r;
}

// Expand an su(2) matrix as cj*J + ck*K + cr*R.
std::array<GaussianRational, 3> su2_coordinates(const Mat2& m) {
    GaussianRational cj = (m[0][1] - m[1][0]) / GaussianRational(2);
    GaussianRational ck = (m[0][1] + m[1][0]) / (GaussianRational(2) * kI);
    GaussianRational cr = m[0][0] / kI;
    Mat2 rebuilt;
    const auto j = generator_matrix(SU2Generator::J);
    const auto k = generator_matrix(SU2Generator::K);
    const auto r = generator_matrix(SU2Generator::R);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            rebuilt[a][b] = cj * j[a][b] + ck * k[a][b] + cr * r[a][b];
            if (rebuilt[a][b] != m[a][b])
                throw DomainError("su2_coordinates: matrix not in the su(2) span");
        }
    return {cj, ck, cr};
}

}  // namespace

bool commutator_check(SU2Generator x, SU2Generator y, int degree_bound) {
    auto coords = su2_coordinates(bracket(generator_matrix(x), generator_matrix(y)));
    for (int m = 0; m <= degree_bound; ++m) {
        for (int n = 0; m + n <= degree_bound; ++n) {
            HermGaussFn f = hermite_fn(m, n);
            HermGaussFn lhs = apply_generator(x, apply_generator(y, f)) -
                              apply_generator(y, apply_generator(x, f));
            HermGaussFn rhs;
            if (!coords[0].is_zero()) rhs += coords[0] * apply_generator(SU2Generator::J, f);
            if (!coords[1].is_zero()) rhs += coords[1] * apply_generator(SU2Generator::K, f);
            if (!coords[2].is_zero()) rhs += coords[2] * apply_generator(SU2Generator::R, f);
            if (lhs != rhs)
                throw IdentityViolated("commutator [" + to_string(x) + "," + to_string(y) +
                                       "] at (" + std::to_string(m) + "," + std::to_string(n) +
                                       "): residual " + to_string(to_hermite(lhs - rhs)));
        }
    }
    return true;
}

namespace {

HermGaussFn fourier_with_sign(const HermGaussFn& f, long sign) {
    HermiteExpansion e = to_hermite(f);
    HermiteExpansion out;
    for (const auto& [key, c] : e.terms)
        out.terms[key] = c * i_power(sign * (key.first - key.second));
    return from_hermite(out);
}

}  // namespace

HermGaussFn fourier_transform(const HermGaussFn& f) { return fourier_with_sign(f, 1); }

HermGaussFn inverse_fourier_transform(const HermGaussFn& f) { return fourier_with_sign(f, -1); }

bool intertwining_check(int degree_bound) {
    const GaussianRational half_i = kI / GaussianRational(2);
    const PolyUV uu_vv = PolyUV::monomial(2, 0) - PolyUV::monomial(0, 2);
    const PolyUV uv = PolyUV::monomial(1, 1);
    for (int m = 0; m <= degree_bound; ++m) {
        for (int n = 0; m + n <= degree_bound; ++n) {
            HermGaussFn f = hermite_fn(m, n);
            HermGaussFn fhat = fourier_transform(f);

            HermGaussFn lhs1 =
                inverse_fourier_transform(HermGaussFn(half_i * (uu_vv * fhat.poly)));
            HermGaussFn rhs1 = HermGaussFn(
                (-half_i) * (weighted_du(weighted_du(f.poly)) - weighted_dv(weighted_dv(f.poly))));
            if (lhs1 != rhs1)
                throw IdentityViolated("intertwining (u^2-v^2) at (" + std::to_string(m) + "," +
                                       std::to_string(n) + ")");

            HermGaussFn lhs2 = inverse_fourier_transform(HermGaussFn((-kI) * (uv * fhat.poly)));
            HermGaussFn rhs2 = HermGaussFn((-kI) * weighted_du(weighted_dv(f.poly)));
            if (lhs2 != rhs2)
                throw IdentityViolated("intertwining uv at (" + std::to_string(m) + "," +
                                       std::to_string(n) + ")");
        }
    }
    return true;
}

HermGaussFn bmn_fn(int m, int n) {
    int abs_n = std::abs(n);
    if (abs_n > m || (m - abs_n) % 2 != 0)
        throw DomainError("bmn_fn: need |n| <= m and m - |n| even, got (" + std::to_string(m) +
                          "," + std::to_string(n) + ")");
    PolyUV phase;  // (u + i v)^|n| for n >= 0, (u - i v)^|n| for n < 0
    {
        GaussianRational iv = n >= 0 ? kI : -kI;
        phase = PolyUV::constant(GaussianRational(1));
        PolyUV lin = PolyUV::monomial(1, 0) + iv * PolyUV::monomial(0, 1);
        for (int e = 0; e < abs_n; ++e) phase = phase * lin;
    }
    RatPoly lag = laguerre_poly((m - abs_n) / 2, abs_n);
    PolyUV radial;  // L(u^2 + v^2)
    PolyUV r2 = PolyUV::monomial(2, 0) + PolyUV::monomial(0, 2);
    PolyUV r2_pow = PolyUV::constant(GaussianRational(1));
    for (int j = 0; j <= lag.degree(); ++j) {
        Rational c = lag.coeff(static_cast<std::size_t>(j));
        if (c != 0) radial += GaussianRational(c) * r2_pow;
        r2_pow = r2_pow * r2;
    }
    return HermGaussFn(phase * radial);
}

bool rotation_eigen_check(int m, int n) {
    HermGaussFn b = bmn_fn(m, n);
    HermGaussFn lhs = apply_generator(SU2Generator::R, b);
    HermGaussFn rhs = b;
    rhs *= kI * GaussianRational(n);
    if (lhs != rhs)
        throw IdentityViolated("rotation eigenvalue at b(" + std::to_string(m) + "," +
                               std::to_string(n) + ")");
    return true;
}

bool membership_check(int m, int n) {
    HermiteExpansion e = to_hermite(bmn_fn(m, n));
    for (const auto& [key, c] : e.terms) {
        if (key.first + key.second != m)
            throw IdentityViolated("b(" + std::to_string(m) + "," + std::to_string(n) +
                                   ") leaves W_" + std::to_string(m) + ": component f[" +
                                   std::to_string(key.first) + "," + std::to_string(key.second) +
                                   "] = " + to_string(c));
    }
    return true;
}

GaussianRational inner_product(const HermGaussFn& f, const HermGaussFn& g) {
    // int u^a v^b e^{-(u^2+v^2)} du dv / (2 pi) = (a-1)!! (b-1)!! / 2^{(a+b)/2+1}
    // for even a, b; zero otherwise.
    PolyUV prod = f.poly * g.poly;
    GaussianRational acc(0);
    for (const auto& [key, c] : prod.terms()) {
        if (key.first % 2 || key.second % 2) continue;
        Rational moment(double_factorial(key.first - 1) * double_factorial(key.second - 1),
                        pow_int(2, static_cast<unsigned long>((key.first + key.second) / 2 + 1)));
        moment.canonicalize();
        acc += c * GaussianRational(moment);
    }
    return acc;
}

Rational inner_product_real(const HermGaussFn& f, const HermGaussFn& g) {
    GaussianRational z = inner_product(f, g);
    if (!z.is_real()) throw Error("inner_product_real: value has imaginary part");
    return z.re;
}

bool subspace_invariance_check(int m) {
    for (int j = 0; j <= m; ++j) {
        HermGaussFn f = hermite_fn(j, m - j);
        for (SU2Generator g : {SU2Generator::J, SU2Generator::K, SU2Generator::R}) {
            HermiteExpansion e = to_hermite(apply_generator(g, f));
            for (const auto& [key, c] : e.terms) {
                if (key.first + key.second != m)
                    throw IdentityViolated("generator " + to_string(g) + " leaves W_" +
                                           std::to_string(m) + " at f[" + std::to_string(j) + "," +
                                           std::to_string(m - j) + "]");
            }
        }
    }
    return true;
}

HermGaussFn harmonic_oscillator_apply(const HermGaussFn& f) {
    const PolyUV& p = f.poly;
    PolyUV mult = (PolyUV::monomial(2, 0) + PolyUV::monomial(0, 2)) * p;
    PolyUV diff = weighted_du(weighted_du(p)) + weighted_dv(weighted_dv(p));
    GaussianRational half(Rational(1, 2));
    return HermGaussFn(half * (mult - diff));
}

bool harmonic_oscillator_check(int m, int n) {
    HermGaussFn f = hermite_fn(m, n);
    HermGaussFn lhs = harmonic_oscillator_apply(f);
    HermGaussFn rhs = f;
    rhs *= GaussianRational(m + n + 1);
    if (lhs != rhs)
        throw IdentityViolated("oscillator eigenvalue at (" + std::to_string(m) + "," +
                               std::to_string(n) + ")");
    return true;
}

}  // namespace tatezeta
