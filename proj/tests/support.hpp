#pragma once

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "quatroots/quaternion.hpp"
#include "quatroots/solver.hpp"

namespace qt {

using quatroots::Complex;
using quatroots::ComplexPolynomial;
using quatroots::ConjugacyClass;
using quatroots::Quaternion;
using quatroots::SimplePolynomial;
using quatroots::ZeroSet;

inline const Quaternion I{0, 1, 0, 0};
inline const Quaternion J{0, 0, 1, 0};
inline const Quaternion K{0, 0, 0, 1};

// Product through the basis table e_a e_b = sign * e_c, independent of the
// closed-form Hamilton product in the library.
inline Quaternion table_mul(const Quaternion& p, const Quaternion& q) {
    static const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    const double a[4] = {p.a0, p.a1, p.a2, p.a3};
    const double b[4] = {q.a0, q.a1, q.a2, q.a3};
    double c[4] = {0, 0, 0, 0};
    for (int r = 0; r < 4; ++r) {
        for (int s = 0; s < 4; ++s) {
            c[idx[r][s]] += sgn[r][s] * a[r] * b[s];
        }
    }
    return {c[0], c[1], c[2], c[3]};
}

// Left-coefficient evaluation with table_mul and explicit powers.
inline Quaternion oracle_eval(const std::vector<Quaternion>& coeffs, const Quaternion& z) {
    Quaternion sum;
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        Quaternion pw(1.0);
        for (std::size_t m = 0; m < n; ++m) {
            pw = table_mul(pw, z);
        }
        const Quaternion t = table_mul(coeffs[n], pw);
        sum = Quaternion(sum.a0 + t.a0, sum.a1 + t.a1, sum.a2 + t.a2, sum.a3 + t.a3);
    }
    return sum;
}

inline double qdist(const Quaternion& a, const Quaternion& b) {
    return std::sqrt((a.a0 - b.a0) * (a.a0 - b.a0) + (a.a1 - b.a1) * (a.a1 - b.a1) +
                     (a.a2 - b.a2) * (a.a2 - b.a2) + (a.a3 - b.a3) * (a.a3 - b.a3));
}

inline double qabs(const Quaternion& a) { return qdist(a, Quaternion()); }

inline ::testing::AssertionResult QNear(const Quaternion& got, const Quaternion& want, double tol) {
    if (std::abs(got.a0 - want.a0) <= tol && std::abs(got.a1 - want.a1) <= tol &&
        std::abs(got.a2 - want.a2) <= tol && std::abs(got.a3 - want.a3) <= tol) {
        return ::testing::AssertionSuccess();
    }
    return ::testing::AssertionFailure() << got << " vs " << want << " (tol " << tol << ")";
}

inline ::testing::AssertionResult CNear(Complex got, Complex want, double tol) {
    if (std::abs(got - want) <= tol) {
        return ::testing::AssertionSuccess();
    }
    return ::testing::AssertionFailure() << got << " vs " << want << " (tol " << tol << ")";
}

// Coefficient-wise comparison; missing trailing entries count as zero.
inline ::testing::AssertionResult PolyNear(const ComplexPolynomial& got, const std::vector<Complex>& want,
                                           double tol) {
    const std::size_t n = std::max(got.coeffs().size(), want.size());
    for (std::size_t k = 0; k < n; ++k) {
        const Complex g = k < got.coeffs().size() ? got.coeffs()[k] : Complex{};
        const Complex w = k < want.size() ? want[k] : Complex{};
        if (std::abs(g - w) > tol) {
            return ::testing::AssertionFailure() << "coefficient " << k << ": " << g << " vs " << w << " in " << got;
        }
    }
    return ::testing::AssertionSuccess();
}

inline Complex naive_eval(const std::vector<Complex>& c, Complex t) {
    Complex s;
    for (std::size_t k = 0; k < c.size(); ++k) {
        s += c[k] * std::pow(t, static_cast<int>(k));
    }
    return s;
}

// i x^3 + j x^2 + k x + 1
inline SimplePolynomial example1() { return SimplePolynomial({Quaternion(1.0), K, J, I}); }
// x^3 + x^2 + x + 1
inline SimplePolynomial example2() { return SimplePolynomial({1.0, 1.0, 1.0, 1.0}); }
// z^6 + j z^5 + i z^4 - z^2 - j z - i
inline SimplePolynomial example3() {
    return SimplePolynomial({-1.0 * I, -1.0 * J, Quaternion(-1.0), Quaternion(), I, J, Quaternion(1.0)});
}

inline std::vector<Quaternion> example1_zeros() {
    const double h = std::sqrt(2.0) / 2.0;
    return {K, {h, 0.5, 0, 0.5}, {-h, 0.5, 0, 0.5}};
}

inline std::vector<Quaternion> example3_isolated() { return {{0.5, -0.5, -0.5, -0.5}, {-0.5, 0.5, -0.5, -0.5}}; }

inline Quaternion random_quaternion(std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    return {u(rng), u(rng), u(rng), u(rng)};
}

// Degree in [1, max_degree], integer components in [-5, 5], nonzero leading term.
inline SimplePolynomial random_integer_poly(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(1, max_degree);
    std::uniform_int_distribution<int> c(-5, 5);
    const int n = deg(rng);
    std::vector<Quaternion> q;
    for (int k = 0; k <= n; ++k) {
        Quaternion x;
        do {
            x = Quaternion(c(rng), c(rng), c(rng), c(rng));
        } while (k == n && x == Quaternion());
        q.push_back(x);
    }
    return SimplePolynomial(std::move(q));
}

inline bool has_isolated(const ZeroSet& zs, const Quaternion& q, double tol) {
    for (const auto& z : zs.isolated_zeros) {
        if (qdist(z, q) <= tol) {
            return true;
        }
    }
    return false;
}

inline bool has_real(const ZeroSet& zs, double x, double tol) {
    for (double r : zs.real_zeros) {
        if (std::abs(r - x) <= tol) {
            return true;
        }
    }
    return false;
}

inline bool has_class(const ZeroSet& zs, double re, double modulus, double tol) {
    for (const auto& c : zs.spherical) {
        if (std::abs(c.re() - re) <= tol && std::abs(c.modulus() - modulus) <= tol) {
            return true;
        }
    }
    return false;
}

}  // namespace qt
