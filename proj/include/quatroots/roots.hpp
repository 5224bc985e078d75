#pragma once

/**
 * @file roots.hpp
 * @brief All complex roots of a complex polynomial.
 *
 * The finder is Aberth-Ehrlich simultaneous iteration without deflation.
 * Starting points sit on the circles given by the Newton polygon of the
 * coefficient moduli, phase-shifted by the golden angle so that no starting
 * configuration is symmetric about the real axis. Converged roots get a
 * guarded Newton pass and are then clustered into (value, multiplicity)
 * entries; clusters of multiplicity m can be refined further by Newton on the
 * (m-1)-th derivative, which has the cluster center as a simple root.
 */

#include <vector>

#include "quatroots/cpoly.hpp"

namespace quatroots {

struct Root {
    Complex value;
    int multiplicity = 1;
};

struct RootList {
    std::vector<Root> roots;
    int source_degree = 0;

    int total_multiplicity() const;
};

struct RealRoot {
    double value = 0.0;
    int multiplicity = 1;
};

struct AberthOptions {
    int max_iterations = 500;
    /// A root stops moving once its correction is below step_tol * (1 + |z|).
    double step_tol = 1e-14;
};

struct AberthResult {
    std::vector<Complex> roots;
    std::vector<double> residuals;  ///< |p(z)| per root
    int iterations = 0;
    bool converged = false;
};

/// Raw simultaneous iteration: deg(p) unclustered, unpolished roots.
/// Never throws on non-convergence; check `converged`. Requires deg(p) >= 1.
AberthResult aberth(const ComplexPolynomial& p, const AberthOptions& options = {});

struct RootOptions {
    AberthOptions aberth;
    /// Roots closer than merge_tol * (1 + |z|) form one cluster.
    double merge_tol = 1e-6;
};

/// Finds, polishes and clusters all roots. Clusters wider than merge_tol are
/// accepted when the polished multiple roots reproduce p to 1e-8 in norm;
/// otherwise merge_tol decides. Throws std::invalid_argument for
/// degree < 1 and NoConvergence when the iteration cap is reached while some
/// root still violates |p(z)| <= 1e-8 * max|c_k| * max(1, |z|)^deg.
RootList all_roots(const ComplexPolynomial& p, const RootOptions& options = {});

/// Newton on the (multiplicity-1)-th derivative of p from z0. Returns z0 when
/// the iteration fails to improve on it.
Complex polish_multiple(const ComplexPolynomial& p, Complex z0, int multiplicity);
inline Complex polish_double(const ComplexPolynomial& p, Complex z0) {
    return polish_multiple(p, z0, 2);
}

/// Applies polish_multiple to every entry of multiplicity >= 2.
RootList polish_clusters(const ComplexPolynomial& p, RootList rl);

struct RealClassification {
    std::vector<RealRoot> reals;
    /// One entry per conjugate pair, stored with Im > 0.
    std::vector<Root> pairs;
};

/// Splits the roots of a real-coefficient polynomial into real roots
/// (|Im| < tol_real, snapped to the real axis) and conjugate pairs. Partners
/// are matched within merge_tol and averaged, so the pairing is exact.
/// Throws UnpairedRoot when a nonreal root has no partner.
RealClassification classify_real(const RootList& rl, double tol_real = 1e-5,
                                 double merge_tol = 1e-6);

/// all_roots, classify_real, then polishing of every multiple root.
RealClassification real_roots(const ComplexPolynomial& p, double tol_real = 1e-5,
                              const RootOptions& options = {});

struct ConjugateSplit {
    std::vector<RealRoot> reals;
    /// Roots whose conjugate is also a root, stored once with Im > 0.
    std::vector<Root> pairs;
    /// Nonreal roots whose conjugate is not a root.
    std::vector<Root> unpaired;
};

/// Like classify_real but for arbitrary complex coefficients, where a nonreal
/// root need not have its conjugate among the roots.
ConjugateSplit split_conjugates(const RootList& rl, double tol_real = 1e-5,
                                double merge_tol = 1e-6);

}  // namespace quatroots
