#include "quatroots/quaternion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "quatroots/errors.hpp"

namespace quatroots {

double norm(const Quaternion& q) {
    return std::sqrt(norm_sq(q));
}

double imag_norm(const Quaternion& q) {
    return std::sqrt(q.a1 * q.a1 + q.a2 * q.a2 + q.a3 * q.a3);
}

Quaternion inverse(const Quaternion& q) {
    const double n2 = norm_sq(q);
    if (n2 == 0.0) {
        throw ZeroDivision("inverse of the zero quaternion");
    }
    return conj(q) / n2;
}

double distance(const Quaternion& p, const Quaternion& q) {
    return norm(p - q);
}

bool is_real(const Quaternion& q, double tol) {
    return imag_norm(q) <= tol;
}

ComplexPair split(const Quaternion& q) {
    return {Complex(q.a0, q.a1), Complex(q.a2, q.a3)};
}

Quaternion assemble(const ComplexPair& pair) {
    return {pair.z1.real(), pair.z1.imag(), pair.z2.real(), pair.z2.imag()};
}

Quaternion embed_complex(Complex c) {
    return {c.real(), c.imag(), 0.0, 0.0};
}

ComplexMatrix2 operator*(const ComplexMatrix2& a, const ComplexMatrix2& b) {
    return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
            a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

ComplexMatrix2 operator+(const ComplexMatrix2& a, const ComplexMatrix2& b) {
    return {a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21, a.m22 + b.m22};
}

Complex det(const ComplexMatrix2& m) {
    return m.m11 * m.m22 - m.m12 * m.m21;
}

double max_abs_diff(const ComplexMatrix2& a, const ComplexMatrix2& b) {
    return std::max({std::abs(a.m11 - b.m11), std::abs(a.m12 - b.m12),
                     std::abs(a.m21 - b.m21), std::abs(a.m22 - b.m22)});
}

ComplexMatrix2 sigma(const Quaternion& q) {
    const auto [z1, z2] = split(q);
    return {z1, z2, -std::conj(z2), std::conj(z1)};
}

ConjugacyClass::ConjugacyClass(Complex representative) : rep_(representative) {
    if (!(representative.imag() > 0.0)) {
        throw std::invalid_argument("class representative needs a positive imaginary part");
    }
}

ConjugacyClass ConjugacyClass::of(const Quaternion& member) {
    return ConjugacyClass(Complex(member.a0, imag_norm(member)));
}

ConjugacyClass ConjugacyClass::of(Complex member) {
    return ConjugacyClass(Complex(member.real(), std::abs(member.imag())));
}

bool ConjugacyClass::contains(const Quaternion& q, double tol) const {
    return same_class(embed_complex(rep_), q, tol);
}

bool same_class(const Quaternion& u1, const Quaternion& u2, double tol) {
    const double n1 = norm(u1);
    const double n2 = norm(u2);
    const double s = std::max({1.0, n1, n2});
    return std::abs(u1.a0 - u2.a0) <= tol * s && std::abs(n1 - n2) <= tol * s;
}

std::vector<Quaternion> class_sample(const ConjugacyClass& cls, std::size_t n,
                                     std::uint64_t seed) {
    // golden angle in radians
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    const double phase = golden * static_cast<double>(seed % 1024);
    const double im = cls.representative().imag();

    std::vector<Quaternion> out;
    out.reserve(n);
    for (std::size_t m = 0; m < n; ++m) {
        const double h = 1.0 - 2.0 * (static_cast<double>(m) + 0.5) / static_cast<double>(n);
        const double r = std::sqrt(std::max(0.0, 1.0 - h * h));
        const double phi = golden * static_cast<double>(m) + phase;
        out.emplace_back(cls.re(), im * r * std::cos(phi), im * r * std::sin(phi), im * h);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.a0 << ", " << q.a1 << ", " << q.a2 << ", " << q.a3 << ')';
}

}  // namespace quatroots
