#pragma once

/**
 * @file quaternion.hpp
 * @brief Real quaternions q = a0 + a1 i + a2 j + a3 k.
 *
 * Besides the usual arithmetic this header provides the two views of H the
 * solvers rely on:
 *   - the complex pair q = z1 + z2 j with z1 = a0 + a1 i, z2 = a2 + a3 i,
 *   - the embedding sigma: H -> C^{2x2}, z1 + z2 j -> [[z1, z2], [-conj z2, conj z1]].
 *
 * Two quaternions are conjugate (u2 = a u1 a^-1) iff they share the real part
 * and the modulus, so a conjugacy class of a nonreal quaternion is a 2-sphere
 * and is stored here by its complex member with positive imaginary part.
 */

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace quatroots {

using Complex = std::complex<double>;

struct Quaternion {
    double a0 = 0.0;
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double r) : a0(r) {}  // NOLINT: reals embed implicitly
    constexpr Quaternion(double r, double i, double j, double k) : a0(r), a1(i), a2(j), a3(k) {}

    static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

    constexpr double real() const { return a0; }
    constexpr bool operator==(const Quaternion&) const = default;

    constexpr Quaternion operator-() const { return {-a0, -a1, -a2, -a3}; }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        a0 += o.a0;
        a1 += o.a1;
        a2 += o.a2;
        a3 += o.a3;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) { return *this += -o; }
    constexpr Quaternion& operator*=(double s) {
        a0 *= s;
        a1 *= s;
        a2 *= s;
        a3 *= s;
        return *this;
    }
};

constexpr Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
constexpr Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }
constexpr Quaternion operator*(Quaternion p, double s) { return p *= s; }
constexpr Quaternion operator*(double s, Quaternion p) { return p *= s; }
constexpr Quaternion operator/(Quaternion p, double s) { return p *= 1.0 / s; }

// Hamilton product: ij = -ji = k, jk = -kj = i, ki = -ik = j.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.a0 * q.a0 - p.a1 * q.a1 - p.a2 * q.a2 - p.a3 * q.a3,
            p.a0 * q.a1 + p.a1 * q.a0 + p.a2 * q.a3 - p.a3 * q.a2,
            p.a0 * q.a2 - p.a1 * q.a3 + p.a2 * q.a0 + p.a3 * q.a1,
            p.a0 * q.a3 + p.a1 * q.a2 - p.a2 * q.a1 + p.a3 * q.a0};
}

inline Quaternion mul(const Quaternion& p, const Quaternion& q) { return p * q; }

constexpr Quaternion conj(const Quaternion& q) { return {q.a0, -q.a1, -q.a2, -q.a3}; }
constexpr double norm_sq(const Quaternion& q) {
    return q.a0 * q.a0 + q.a1 * q.a1 + q.a2 * q.a2 + q.a3 * q.a3;
}
double norm(const Quaternion& q);
/// Modulus of the imaginary part sqrt(a1^2 + a2^2 + a3^2).
double imag_norm(const Quaternion& q);

/// conj(q) / |q|^2. Throws ZeroDivision for q = 0.
Quaternion inverse(const Quaternion& q);

/// |p - q|.
double distance(const Quaternion& p, const Quaternion& q);

bool is_real(const Quaternion& q, double tol = 0.0);

struct ComplexPair {
    Complex z1;
    Complex z2;
};

ComplexPair split(const Quaternion& q);
/// Inverse of split: z1 + z2 j.
Quaternion assemble(const ComplexPair& pair);

/// c as an element of H along the i axis.
Quaternion embed_complex(Complex c);

struct ComplexMatrix2 {
    Complex m11;
    Complex m12;
    Complex m21;
    Complex m22;

    bool operator==(const ComplexMatrix2&) const = default;
};

ComplexMatrix2 operator*(const ComplexMatrix2& a, const ComplexMatrix2& b);
ComplexMatrix2 operator+(const ComplexMatrix2& a, const ComplexMatrix2& b);
Complex det(const ComplexMatrix2& m);
/// Largest entry modulus of a - b.
double max_abs_diff(const ComplexMatrix2& a, const ComplexMatrix2& b);

ComplexMatrix2 sigma(const Quaternion& q);

/// A sphere {re + modulus_im * u : u unit imaginary} of conjugate quaternions,
/// stored through its member re + modulus_im * i.
class ConjugacyClass {
public:
    /// Throws std::invalid_argument unless Im(representative) > 0.
    explicit ConjugacyClass(Complex representative);

    /// Class of a nonreal quaternion. Throws std::invalid_argument for reals.
    static ConjugacyClass of(const Quaternion& member);
    /// Class of a nonreal complex number of either sign of imaginary part.
    static ConjugacyClass of(Complex member);

    Complex representative() const { return rep_; }
    double re() const { return rep_.real(); }
    double modulus() const { return std::abs(rep_); }
    bool contains(const Quaternion& q, double tol) const;

private:
    Complex rep_;
};

/// Re u1 = Re u2 and |u1| = |u2| to within tol * max(1, |u1|, |u2|).
bool same_class(const Quaternion& u1, const Quaternion& u2, double tol);

/// n members of cls whose imaginary directions follow a Fibonacci spiral over
/// the unit sphere in span{i, j, k}. The seed rotates the spiral about the i
/// axis; seed 0 with n = 1 yields the representative itself.
std::vector<Quaternion> class_sample(const ConjugacyClass& cls, std::size_t n,
                                     std::uint64_t seed = 0);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace quatroots
