#pragma once

// Companion-polynomial method, kept as an independent cross-check of the
// discriminant solvers. Every power of a quaternion x is a real combination
// x^j = alpha_j x + beta_j, so p(x) = A(x) x + B(x) with quaternion A, B, and
// the zeros follow from the roots z of the real companion polynomial
// sum conj(q_j) q_k x^(j+k) and from v = conj(A(z)) B(z).

#include <utility>
#include <vector>

#include "quatroots/cpoly.hpp"
#include "quatroots/solver.hpp"

namespace quatroots {

struct CompanionPolynomial {
    std::vector<double> b;  ///< b_0 .. b_2n

    ComplexPolynomial as_polynomial() const;
};

struct PowerDecomposition {
    std::vector<double> alpha;
    std::vector<double> beta;
};

/// q_n^-1 * p, so the leading coefficient is exactly 1.
SimplePolynomial monic_normalize(const SimplePolynomial& p);

/// b_k = sum_j conj(q_j) q_(k-j). Requires q_n = 1 (std::invalid_argument
/// otherwise); throws NonRealCompanion when some b_k is not real to 1e-10.
CompanionPolynomial companion(const SimplePolynomial& monic_p);

/// alpha_0 = 0, beta_0 = 1, alpha_(j+1) = 2 Re(x) alpha_j + beta_j,
/// beta_(j+1) = -|x|^2 alpha_j, for j = 0..n.
PowerDecomposition power_decomp(const Quaternion& x, int n);

/// A(z) = sum q_j alpha_j, B(z) = sum q_j beta_j.
std::pair<Quaternion, Quaternion> ab(const SimplePolynomial& p, const Quaternion& z);

ZeroSet solve_jo(const SimplePolynomial& p, const Tolerances& tol = {});

}  // namespace quatroots
