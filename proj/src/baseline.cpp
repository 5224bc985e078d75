#include "quatroots/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "quatroots/errors.hpp"
#include "quatroots/roots.hpp"

namespace quatroots {

ComplexPolynomial CompanionPolynomial::as_polynomial() const {
    std::vector<Complex> c(b.begin(), b.end());
    return ComplexPolynomial(std::move(c));
}

SimplePolynomial monic_normalize(const SimplePolynomial& p) {
    if (p.degree() < 1) {
        throw DegreeZero("polynomial of degree " + std::to_string(p.degree()) + " has no zero set to solve for");
    }
    const Quaternion inv = inverse(p[p.degree()]);
    std::vector<Quaternion> c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) {
        c.push_back(inv * q);
    }
    c.back() = Quaternion(1.0);
    return SimplePolynomial(std::move(c));
}

CompanionPolynomial companion(const SimplePolynomial& monic_p) {
    const int n = monic_p.degree();
    if (n < 1 || distance(monic_p[n], Quaternion(1.0)) > 1e-12) {
        throw std::invalid_argument("companion polynomial expects a monic polynomial of degree >= 1");
    }
    CompanionPolynomial out;
    std::vector<Quaternion> raw(static_cast<std::size_t>(2 * n) + 1);
    double scale = 1.0;
    for (int k = 0; k <= 2 * n; ++k) {
        Quaternion s;
        for (int j = std::max(0, k - n); j <= std::min(k, n); ++j) {
            s += conj(monic_p[j]) * monic_p[k - j];
        }
        raw[static_cast<std::size_t>(k)] = s;
        scale = std::max(scale, norm(s));
    }
    for (int k = 0; k <= 2 * n; ++k) {
        const Quaternion& s = raw[static_cast<std::size_t>(k)];
        if (imag_norm(s) > 1e-10 * scale) {
            throw NonRealCompanion("companion coefficient b_" + std::to_string(k) + " is not real");
        }
        out.b.push_back(s.a0);
    }
    return out;
}

PowerDecomposition power_decomp(const Quaternion& x, int n) {
    PowerDecomposition pd;
    pd.alpha.resize(static_cast<std::size_t>(n) + 1);
    pd.beta.resize(static_cast<std::size_t>(n) + 1);
    pd.alpha[0] = 0.0;
    pd.beta[0] = 1.0;
    const double two_re = 2.0 * x.a0;
    const double n2 = norm_sq(x);
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
        pd.alpha[j + 1] = two_re * pd.alpha[j] + pd.beta[j];
        pd.beta[j + 1] = -n2 * pd.alpha[j];
    }
    return pd;
}

std::pair<Quaternion, Quaternion> ab(const SimplePolynomial& p, const Quaternion& z) {
    const PowerDecomposition pd = power_decomp(z, std::max(p.degree(), 0));
    Quaternion a;
    Quaternion b;
    for (int j = 0; j <= p.degree(); ++j) {
        a += p[j] * pd.alpha[static_cast<std::size_t>(j)];
        b += p[j] * pd.beta[static_cast<std::size_t>(j)];
    }
    return {a, b};
}

ZeroSet solve_jo(const SimplePolynomial& p, const Tolerances& tol) {
    const SimplePolynomial mp = monic_normalize(p);
    const ComplexPolynomial q2n = companion(mp).as_polynomial();
    RootOptions ro;
    ro.merge_tol = tol.merge;
    const RealClassification rc = real_roots(q2n, tol.real, ro);

    ZeroSetBuilder zs(tol.dedup);
    for (const auto& r : rc.reals) {
        zs.add_real(r.value);
    }
    for (const auto& pair : rc.pairs) {
        const Quaternion z = embed_complex(pair.value);
        const auto [a, b] = ab(mp, z);
        const Quaternion v = conj(a) * b;

        // v is a product of two sums over the coefficients; measure it
        // against the product of their magnitudes.
        const PowerDecomposition pd = power_decomp(z, mp.degree());
        double scale_a = 0.0;
        double scale_b = 0.0;
        for (int j = 0; j <= mp.degree(); ++j) {
            scale_a += norm(mp[j]) * std::abs(pd.alpha[static_cast<std::size_t>(j)]);
            scale_b += norm(mp[j]) * std::abs(pd.beta[static_cast<std::size_t>(j)]);
        }
        if (norm(v) < tol.zero * std::max(1.0, scale_a) * std::max(1.0, scale_b)) {
            zs.add_class(ConjugacyClass(pair.value));
            continue;
        }
        const double w = imag_norm(v);
        if (w == 0.0) {
            throw Error("conj(A) B is a nonzero real at a nonreal companion root");
        }
        const double f = -std::abs(pair.value.imag()) / w;
        zs.add_isolated({pair.value.real(), f * v.a1, f * v.a2, f * v.a3});
    }
    return std::move(zs).finish();
}

}  // namespace quatroots
