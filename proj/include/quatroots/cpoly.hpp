#pragma once

/**
 * @file cpoly.hpp
 * @brief Dense univariate polynomials with complex coefficients.
 *
 * Coefficients are stored constant term first. Trailing coefficients whose
 * magnitude is at most 1e-30 times the largest one are trimmed on
 * construction, so the leading coefficient of a nonzero polynomial is
 * nonzero and the zero polynomial has no coefficients at all.
 */

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "quatroots/quaternion.hpp"

namespace quatroots {

class ComplexPolynomial {
public:
    static constexpr double kTrimThreshold = 1e-30;

    ComplexPolynomial() = default;
    explicit ComplexPolynomial(std::vector<Complex> coeffs);
    ComplexPolynomial(std::initializer_list<Complex> coeffs);

    static ComplexPolynomial constant(Complex c);
    /// c * t^power.
    static ComplexPolynomial monomial(Complex c, int power);
    /// Product of (t - r) over the given roots.
    static ComplexPolynomial from_roots(std::span<const Complex> roots);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    /// Coefficient of t^power; zero beyond the degree.
    Complex operator[](int power) const;
    Complex leading() const;
    double max_abs_coeff() const;
    /// Euclidean norm of the coefficient vector.
    double norm() const;

    bool operator==(const ComplexPolynomial&) const = default;

private:
    std::vector<Complex> coeffs_;
};

/// Horner evaluation; the zero polynomial evaluates to 0.
Complex eval(const ComplexPolynomial& p, Complex t);
/// Sum of |c_k| |t|^k, the magnitude against which eval's rounding is measured.
double eval_scale(const ComplexPolynomial& p, Complex t);

ComplexPolynomial conj_coeffs(const ComplexPolynomial& p);
ComplexPolynomial derivative(const ComplexPolynomial& p);
ComplexPolynomial monic(const ComplexPolynomial& p);

ComplexPolynomial add(const ComplexPolynomial& p, const ComplexPolynomial& q);
ComplexPolynomial mul(const ComplexPolynomial& p, const ComplexPolynomial& q);
ComplexPolynomial operator+(const ComplexPolynomial& p, const ComplexPolynomial& q);
ComplexPolynomial operator-(const ComplexPolynomial& p, const ComplexPolynomial& q);
ComplexPolynomial operator*(const ComplexPolynomial& p, const ComplexPolynomial& q);
ComplexPolynomial operator*(Complex c, const ComplexPolynomial& p);

/// Long division p = quotient * d + remainder with deg remainder < deg d.
/// Throws ZeroDivisor when d is the zero polynomial.
std::pair<ComplexPolynomial, ComplexPolynomial> divrem(const ComplexPolynomial& p,
                                                       const ComplexPolynomial& d);

/// Monic approximate gcd by the Euclidean remainder sequence, run after the
/// substitution t -> rho t that balances the higher-degree input. A remainder is
/// treated as zero once its norm is at most tol times the norm of the dividend
/// of that step. gcd(p, 0) = monic(p). Throws std::invalid_argument when both
/// inputs are zero.
ComplexPolynomial gcd(const ComplexPolynomial& p, const ComplexPolynomial& q, double tol);
/// Pairwise fold of gcd over the nonzero entries.
ComplexPolynomial gcd_many(std::span<const ComplexPolynomial> ps, double tol);

/// Every |Im c_k| is at most tol times the largest coefficient magnitude.
bool is_real_coeffs(const ComplexPolynomial& p, double tol);
/// Copy of p with the imaginary parts of its coefficients dropped.
ComplexPolynomial real_part(const ComplexPolynomial& p);

std::ostream& operator<<(std::ostream& os, const ComplexPolynomial& p);

}  // namespace quatroots
