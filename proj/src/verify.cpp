#include "quatroots/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace quatroots {

namespace {

// Greedy matching: repeatedly pair the globally closest remaining items.
template <typename T>
void match(const std::vector<T>& left, const std::vector<T>& right, double tol,
           const std::function<double(const T&, const T&)>& dist,
           const std::function<double(const T&)>& size, std::vector<T>& only_left,
           std::vector<T>& only_right) {
    struct Candidate {
        double d;
        std::size_t i;
        std::size_t k;
    };
    std::vector<Candidate> cands;
    for (std::size_t i = 0; i < left.size(); ++i) {
        for (std::size_t k = 0; k < right.size(); ++k) {
            const double d = dist(left[i], right[k]);
            if (d <= tol * std::max({1.0, size(left[i]), size(right[k])})) {
                cands.push_back({d, i, k});
            }
        }
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) { return a.d < b.d; });
    std::vector<bool> used_l(left.size(), false);
    std::vector<bool> used_r(right.size(), false);
    for (const auto& c : cands) {
        if (!used_l[c.i] && !used_r[c.k]) {
            used_l[c.i] = true;
            used_r[c.k] = true;
        }
    }
    for (std::size_t i = 0; i < left.size(); ++i) {
        if (!used_l[i]) {
            only_left.push_back(left[i]);
        }
    }
    for (std::size_t k = 0; k < right.size(); ++k) {
        if (!used_r[k]) {
            only_right.push_back(right[k]);
        }
    }
}

}  // namespace

Quaternion eval_qpoly(const SimplePolynomial& p, const Quaternion& z, Side side) {
    Quaternion sum;
    Quaternion power(1.0);
    for (const auto& q : p.coeffs()) {
        sum += side == Side::left ? q * power : power * q;
        power = power * z;
    }
    return sum;
}

double residual_scale(const SimplePolynomial& p, const Quaternion& z) {
    double s = 0.0;
    for (const auto& q : p.coeffs()) {
        s += norm(q);
    }
    return s * std::pow(std::max(1.0, norm(z)), std::max(p.degree(), 0));
}

bool AgreementDiff::empty() const {
    return real_only_left.empty() && real_only_right.empty() && isolated_only_left.empty() &&
           isolated_only_right.empty() && spherical_only_left.empty() && spherical_only_right.empty();
}

VerificationReport audit(const SimplePolynomial& p, const ZeroSet& zs, const AuditOptions& options) {
    VerificationReport rep;
    auto add = [&](std::string what, const Quaternion& z) {
        ResidualEntry e;
        e.descriptor = std::move(what);
        e.point = z;
        e.residual = norm(eval_qpoly(p, z, options.side));
        e.scale = residual_scale(p, z);
        rep.max_residual = std::max(rep.max_residual, e.residual);
        rep.max_relative_residual = std::max(rep.max_relative_residual, e.relative());
        if (!(e.relative() <= options.rel_tol)) {
            rep.residuals_ok = false;
        }
        rep.entries.push_back(std::move(e));
    };
    for (std::size_t i = 0; i < zs.real_zeros.size(); ++i) {
        add("real " + std::to_string(i), Quaternion(zs.real_zeros[i]));
    }
    for (std::size_t i = 0; i < zs.isolated_zeros.size(); ++i) {
        add("isolated " + std::to_string(i), zs.isolated_zeros[i]);
    }
    for (std::size_t i = 0; i < zs.spherical.size(); ++i) {
        const auto members = class_sample(zs.spherical[i], options.samples_per_class, options.seed);
        for (std::size_t s = 0; s < members.size(); ++s) {
            add("class " + std::to_string(i) + " sample " + std::to_string(s), members[s]);
        }
    }
    const auto n = static_cast<std::size_t>(std::max(p.degree(), 0));
    rep.bounds_ok = zs.class_count() <= n && zs.spherical.size() <= n / 2;
    return rep;
}

AgreementDiff compare(const ZeroSet& left, const ZeroSet& right, double tol) {
    AgreementDiff diff;
    match<double>(
        left.real_zeros, right.real_zeros, tol, [](const double& a, const double& b) { return std::abs(a - b); },
        [](const double& a) { return std::abs(a); }, diff.real_only_left, diff.real_only_right);
    match<Quaternion>(
        left.isolated_zeros, right.isolated_zeros, tol,
        [](const Quaternion& a, const Quaternion& b) { return distance(a, b); },
        [](const Quaternion& a) { return norm(a); }, diff.isolated_only_left, diff.isolated_only_right);
    match<ConjugacyClass>(
        left.spherical, right.spherical, tol,
        [](const ConjugacyClass& a, const ConjugacyClass& b) {
            return std::hypot(a.re() - b.re(), a.modulus() - b.modulus());
        },
        [](const ConjugacyClass& a) { return a.modulus(); }, diff.spherical_only_left,
        diff.spherical_only_right);
    return diff;
}

}  // namespace quatroots
