#pragma once

/**
 * @file solver.hpp
 * @brief Zeros of simple (left-coefficient) quaternionic polynomials
 *        q_n x^n + ... + q_1 x + q_0 through the discriminant polynomial.
 *
 * Pipeline:
 *   1. normalize: left-multiply by q_0^-1 so the constant term d0 is 0 or 1.
 *   2. derived: split each p_k = t1_k + t2_k j into
 *        f1(t) = sum t1_k t^k + d0,  f2(t) = sum t2_k t^k,
 *      and their coefficient conjugates f1bar, f2bar.
 *   3. discriminant: f1 f1bar + f2 f2bar, a real polynomial of degree 2n that
 *      is nonnegative on the real line.
 *   4. Every real root is a zero. Every conjugate pair {eta, conj eta} either
 *      kills all four derived polynomials (a spherical class [eta]) or yields
 *      exactly one isolated zero omega(eta) in the class of eta.
 *
 * solve_alg1prime first pulls out g = gcd(f1, f2) so that p(t) = g (g1 + g2 j)
 * with g1, g2 coprime; then the only spherical classes are conjugate pairs of
 * roots of g and no vanishing test on the derived polynomials is needed.
 */

#include <span>
#include <vector>

#include "quatroots/cpoly.hpp"
#include "quatroots/quaternion.hpp"

namespace quatroots {

/// Thresholds shared by every solver path.
struct Tolerances {
    /// |Im z| below which a computed root counts as real.
    double real = 1e-5;
    /// Vanishing test for polynomial values, relative to their evaluation scale.
    double zero = 1e-10;
    /// Relative remainder cutoff of the approximate gcd.
    double gcd = 1e-8;
    /// Zeros closer than dedup * max(1, |z|) are reported once.
    double dedup = 1e-8;
    /// Root clustering distance, relative to 1 + |z|.
    double merge = 1e-6;
};

class SimplePolynomial {
public:
    SimplePolynomial() = default;
    /// Coefficients q_0 first. Trailing coefficients with modulus at most
    /// 1e-30 times the largest are dropped.
    explicit SimplePolynomial(std::vector<Quaternion> coeffs);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Quaternion>& coeffs() const { return coeffs_; }
    Quaternion operator[](int power) const;
    double max_abs_coeff() const;
    bool has_real_coeffs() const;
    bool has_complex_coeffs() const;

private:
    std::vector<Quaternion> coeffs_;
};

/// Left multiple c * p.
SimplePolynomial left_multiply(const Quaternion& c, const SimplePolynomial& p);
/// Coefficient-wise quaternion conjugate. The right-sided equation
/// x^n q_n + ... + q_0 = 0 holds iff conj(x) solves the left-sided equation
/// with conjugated coefficients.
SimplePolynomial conj_coeffs(const SimplePolynomial& p);

/// p_n x^n + ... + p_1 x + d0 with d0 in {0, 1}.
struct NormalizedPolynomial {
    /// Index = power; coeffs[0] is d0 as a quaternion.
    std::vector<Quaternion> coeffs;
    int d0 = 1;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

struct DerivedPolynomials {
    ComplexPolynomial f1;
    ComplexPolynomial f2;
    ComplexPolynomial f1bar;
    ComplexPolynomial f2bar;
};

struct ZeroSet {
    std::vector<double> real_zeros;
    std::vector<Quaternion> isolated_zeros;  ///< nonreal isolated zeros
    std::vector<ConjugacyClass> spherical;

    std::size_t class_count() const {
        return real_zeros.size() + isolated_zeros.size() + spherical.size();
    }
    bool empty() const { return class_count() == 0; }
};

/// Throws DegreeZero for constant polynomials.
NormalizedPolynomial normalize(const SimplePolynomial& p);
DerivedPolynomials derived(const NormalizedPolynomial& np);
/// f1 f1bar + f2 f2bar with the (vanishing) imaginary parts dropped. Throws
/// NonRealDiscriminant when an imaginary part exceeds 1e-10 of the largest
/// coefficient.
ComplexPolynomial discriminant(const DerivedPolynomials& dp);

enum class EtaClass { T1, T2 };

/// T1 when f1, f2, f1bar, f2bar all vanish at eta, i.e. [eta] is spherical.
EtaClass classify_eta(const DerivedPolynomials& dp, Complex eta, double tol_zero);

/// The isolated zero in the class of eta for eta in T2. Uses whichever of
/// |f1(eta)|^2 + |f2(eta)|^2 and |f1(conj eta)|^2 + |f2(conj eta)|^2 is
/// larger as denominator. Throws BothDenominatorsZero if both vanish.
Quaternion omega(const DerivedPolynomials& dp, Complex eta);

/// The same zero from the coprime factors g1, g2 of p = g (g1 + g2 j), built
/// from g1 and g2 at conj eta. Coprimality keeps the denominator nonzero.
Quaternion omega_reduced(const ComplexPolynomial& g1, const ComplexPolynomial& g2, Complex eta);

struct GFactorization {
    ComplexPolynomial g;
    ComplexPolynomial g1;
    ComplexPolynomial g2;
};

/// g = gcd(f1, f2), g1 = f1 / g, g2 = f2 / g. Throws InexactDivision when a
/// division leaves a remainder above tol times the dividend's norm.
GFactorization factor_g(const NormalizedPolynomial& np, double tol);

ZeroSet solve_alg1(const SimplePolynomial& p, const Tolerances& tol = {});
ZeroSet solve_alg1prime(const SimplePolynomial& p, const Tolerances& tol = {});

/// Direct route for coefficients in C: real roots stay, conjugate pairs of
/// roots become spherical classes and lone nonreal roots are isolated zeros.
/// Throws NotComplexCoefficients if any coefficient has a j or k part.
ZeroSet solve_complex_shortcut(const SimplePolynomial& p, const Tolerances& tol = {});

/// True iff the zero set has no spherical class, tested on the nonreal roots
/// of gcd(f1, f2, f1bar, f2bar).
bool is_finite_zero_set(const DerivedPolynomials& dp, const Tolerances& tol = {});

/// Sorts every part of a zero set into a canonical order.
void canonicalize(ZeroSet& zs);
/// Coefficient-wise conjugate of every zero; classes are unchanged.
ZeroSet conj_zeros(const ZeroSet& zs);

/// Collects zeros and drops ones that duplicate what is already present.
class ZeroSetBuilder {
public:
    explicit ZeroSetBuilder(double dedup_tol) : tol_(dedup_tol) {}

    void add_real(double x);
    void add_isolated(const Quaternion& q);
    void add_class(const ConjugacyClass& c);
    ZeroSet finish() &&;

private:
    double tol_;
    ZeroSet zs_;
};

}  // namespace quatroots
