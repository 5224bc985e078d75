#pragma once

/**
 * @file verify.hpp
 * @brief Residual audits and zero-set comparison.
 *
 * eval_qpoly is deliberately naive (explicit powers, left coefficients) and
 * shares nothing with the solvers except quaternion multiplication, so it can
 * serve as their oracle. Spherical classes are audited at a deterministic
 * sample of their members.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quatroots/solver.hpp"

namespace quatroots {

enum class Side { left, right };

/// sum q_j z^j (left) or sum z^j q_j (right).
Quaternion eval_qpoly(const SimplePolynomial& p, const Quaternion& z, Side side = Side::left);

/// sum |q_j| * max(1, |z|)^n, the scale residuals are judged against.
double residual_scale(const SimplePolynomial& p, const Quaternion& z);

struct ResidualEntry {
    std::string descriptor;  ///< e.g. "real 1", "isolated 0", "class 2 sample 5"
    Quaternion point;
    double residual = 0.0;  ///< |p(point)|
    double scale = 1.0;     ///< residual_scale(p, point)

    double relative() const { return residual / scale; }
};

struct AgreementDiff {
    std::vector<double> real_only_left;
    std::vector<double> real_only_right;
    std::vector<Quaternion> isolated_only_left;
    std::vector<Quaternion> isolated_only_right;
    std::vector<ConjugacyClass> spherical_only_left;
    std::vector<ConjugacyClass> spherical_only_right;

    bool empty() const;
};

struct VerificationReport {
    std::vector<ResidualEntry> entries;
    double max_residual = 0.0;           ///< largest |p(z)|
    double max_relative_residual = 0.0;  ///< largest |p(z)| / residual_scale
    bool residuals_ok = true;            ///< every relative residual <= rel_tol
    bool bounds_ok = true;               ///< at most n classes, at most n/2 spherical
    std::optional<AgreementDiff> agreement;

    bool ok() const { return residuals_ok && bounds_ok && (!agreement || agreement->empty()); }
};

struct AuditOptions {
    std::size_t samples_per_class = 8;
    double rel_tol = 1e-8;
    std::uint64_t seed = 0;
    Side side = Side::left;
};

VerificationReport audit(const SimplePolynomial& p, const ZeroSet& zs, const AuditOptions& options = {});

/// Greedy nearest matching per category; whatever stays unmatched within tol
/// (relative to max(1, |z|)) is listed.
AgreementDiff compare(const ZeroSet& left, const ZeroSet& right, double tol);

}  // namespace quatroots
