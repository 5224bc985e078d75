#include "quatroots/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "quatroots/errors.hpp"
#include "quatroots/roots.hpp"

namespace quatroots {

namespace {

constexpr double kTiny = std::numeric_limits<double>::min();

double max_abs(const std::vector<Quaternion>& qs) {
    double m = 0.0;
    for (const auto& q : qs) {
        m = std::max(m, norm(q));
    }
    return m;
}

RootOptions root_options(const Tolerances& tol) {
    RootOptions o;
    o.merge_tol = tol.merge;
    return o;
}

bool vanishes(const ComplexPolynomial& f, Complex t, double tol_zero, double scale) {
    return std::abs(eval(f, t)) <= tol_zero * scale;
}

// Is z within clustering distance of one of the roots?
bool near_any(Complex z, const std::vector<Complex>& roots, double merge_tol) {
    return std::any_of(roots.begin(), roots.end(), [&](const Complex& r) {
        return std::abs(z - r) <= merge_tol * (1.0 + std::abs(z));
    });
}

}  // namespace

SimplePolynomial::SimplePolynomial(std::vector<Quaternion> coeffs) : coeffs_(std::move(coeffs)) {
    const double cutoff = 1e-30 * max_abs(coeffs_);
    while (!coeffs_.empty() && norm(coeffs_.back()) <= cutoff) {
        coeffs_.pop_back();
    }
}

Quaternion SimplePolynomial::operator[](int power) const {
    if (power < 0 || power > degree()) {
        return {};
    }
    return coeffs_[static_cast<std::size_t>(power)];
}

double SimplePolynomial::max_abs_coeff() const {
    return max_abs(coeffs_);
}

bool SimplePolynomial::has_real_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Quaternion& q) { return q.a1 == 0.0 && q.a2 == 0.0 && q.a3 == 0.0; });
}

bool SimplePolynomial::has_complex_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Quaternion& q) { return q.a2 == 0.0 && q.a3 == 0.0; });
}

SimplePolynomial left_multiply(const Quaternion& c, const SimplePolynomial& p) {
    std::vector<Quaternion> out;
    out.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) {
        out.push_back(c * q);
    }
    return SimplePolynomial(std::move(out));
}

SimplePolynomial conj_coeffs(const SimplePolynomial& p) {
    std::vector<Quaternion> out;
    out.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) {
        out.push_back(conj(q));
    }
    return SimplePolynomial(std::move(out));
}

NormalizedPolynomial normalize(const SimplePolynomial& p) {
    if (p.degree() < 1) {
        throw DegreeZero("polynomial of degree " + std::to_string(p.degree()) + " has no zero set to solve for");
    }
    NormalizedPolynomial np;
    const Quaternion q0 = p[0];
    if (norm(q0) <= 1e-30 * p.max_abs_coeff()) {
        np.d0 = 0;
        np.coeffs = p.coeffs();
        np.coeffs[0] = Quaternion(0.0);
        return np;
    }
    const Quaternion inv = inverse(q0);
    np.d0 = 1;
    np.coeffs.reserve(p.coeffs().size());
    np.coeffs.emplace_back(1.0);
    for (int k = 1; k <= p.degree(); ++k) {
        np.coeffs.push_back(inv * p[k]);
    }
    return np;
}

DerivedPolynomials derived(const NormalizedPolynomial& np) {
    std::vector<Complex> t1(np.coeffs.size(), Complex(0.0));
    std::vector<Complex> t2(np.coeffs.size(), Complex(0.0));
    t1[0] = Complex(static_cast<double>(np.d0));
    for (std::size_t k = 1; k < np.coeffs.size(); ++k) {
        const auto [z1, z2] = split(np.coeffs[k]);
        t1[k] = z1;
        t2[k] = z2;
    }
    DerivedPolynomials dp;
    dp.f1 = ComplexPolynomial(std::move(t1));
    dp.f2 = ComplexPolynomial(std::move(t2));
    dp.f1bar = conj_coeffs(dp.f1);
    dp.f2bar = conj_coeffs(dp.f2);
    return dp;
}

ComplexPolynomial discriminant(const DerivedPolynomials& dp) {
    const ComplexPolynomial d = dp.f1 * dp.f1bar + dp.f2 * dp.f2bar;
    if (!is_real_coeffs(d, 1e-10)) {
        throw NonRealDiscriminant("discriminant polynomial has non-real coefficients");
    }
    return real_part(d);
}

EtaClass classify_eta(const DerivedPolynomials& dp, Complex eta, double tol_zero) {
    // f1 and f2 are measured together: either one may be rounding noise
    const double scale = eval_scale(dp.f1, eta) + eval_scale(dp.f2, eta);
    const bool all_vanish = vanishes(dp.f1, eta, tol_zero, scale) && vanishes(dp.f2, eta, tol_zero, scale) &&
                            vanishes(dp.f1bar, eta, tol_zero, scale) && vanishes(dp.f2bar, eta, tol_zero, scale);
    return all_vanish ? EtaClass::T1 : EtaClass::T2;
}

Quaternion omega(const DerivedPolynomials& dp, Complex eta) {
    const Complex f1 = eval(dp.f1, eta);
    const Complex f2 = eval(dp.f2, eta);
    const Complex f1c = eval(dp.f1, std::conj(eta));
    const Complex f2c = eval(dp.f2, std::conj(eta));
    const double d_plus = std::norm(f1) + std::norm(f2);
    const double d_minus = std::norm(f1c) + std::norm(f2c);
    if (std::max(d_plus, d_minus) <= kTiny) {
        throw BothDenominatorsZero("f1 and f2 vanish at both eta and conj(eta)");
    }
    const Quaternion e = embed_complex(eta);
    const Quaternion ebar = embed_complex(std::conj(eta));
    const double im = eta.imag();
    if (d_plus >= d_minus) {
        const Quaternion body = std::norm(f2) * e + std::norm(f1) * ebar -
                                2.0 * im * (embed_complex(f2 * std::conj(f1)) * Quaternion::k());
        return body / d_plus;
    }
    const Quaternion body = std::norm(f1c) * e + std::norm(f2c) * ebar +
                            2.0 * im * (embed_complex(f2c * std::conj(f1c)) * Quaternion::k());
    return body / d_minus;
}

Quaternion omega_reduced(const ComplexPolynomial& g1, const ComplexPolynomial& g2, Complex eta) {
    const Complex a = eval(g1, std::conj(eta));
    const Complex b = eval(g2, std::conj(eta));
    const double d = std::norm(a) + std::norm(b);
    if (d <= kTiny) {
        throw BothDenominatorsZero("g1 and g2 vanish together at conj(eta)");
    }
    const Quaternion body = std::norm(b) * embed_complex(std::conj(eta)) + std::norm(a) * embed_complex(eta) +
                            2.0 * eta.imag() * (embed_complex(b * std::conj(a)) * Quaternion::k());
    return body / d;
}

GFactorization factor_g(const NormalizedPolynomial& np, double tol) {
    DerivedPolynomials dp = derived(np);
    // a half that is rounding noise next to the other counts as zero
    const double joint = dp.f1.norm() + dp.f2.norm();
    if (dp.f1.norm() <= tol * joint) {
        dp.f1 = ComplexPolynomial();
    }
    if (dp.f2.norm() <= tol * joint) {
        dp.f2 = ComplexPolynomial();
    }
    GFactorization out;
    out.g = gcd(dp.f1, dp.f2, tol);
    auto exact_quotient = [&](const ComplexPolynomial& f, const char* name) {
        if (f.is_zero()) {
            return ComplexPolynomial{};
        }
        auto [q, r] = divrem(f, out.g);
        if (r.norm() > tol * f.norm()) {
            throw InexactDivision(std::string(name) + " is not divisible by gcd(f1, f2) to tolerance");
        }
        return q;
    };
    out.g1 = exact_quotient(dp.f1, "f1");
    out.g2 = exact_quotient(dp.f2, "f2");
    return out;
}

ZeroSet solve_alg1(const SimplePolynomial& p, const Tolerances& tol) {
    const DerivedPolynomials dp = derived(normalize(p));
    const ComplexPolynomial disc = discriminant(dp);
    const RealClassification rc = real_roots(disc, tol.real, root_options(tol));

    ZeroSetBuilder zs(tol.dedup);
    for (const auto& r : rc.reals) {
        zs.add_real(r.value);
    }
    for (const auto& pair : rc.pairs) {
        if (classify_eta(dp, pair.value, tol.zero) == EtaClass::T1) {
            zs.add_class(ConjugacyClass(pair.value));
        } else {
            zs.add_isolated(omega(dp, pair.value));
        }
    }
    return std::move(zs).finish();
}

ZeroSet solve_alg1prime(const SimplePolynomial& p, const Tolerances& tol) {
    const GFactorization gf = factor_g(normalize(p), tol.gcd);
    const RootOptions ro = root_options(tol);
    ZeroSetBuilder zs(tol.dedup);

    std::vector<Complex> g_nonreal;
    if (gf.g.degree() >= 1) {
        const ConjugateSplit cs =
            split_conjugates(polish_clusters(gf.g, all_roots(gf.g, ro)), tol.real, tol.merge);
        for (const auto& r : cs.reals) {
            zs.add_real(r.value);
        }
        for (const auto& pair : cs.pairs) {
            zs.add_class(ConjugacyClass(pair.value));
            g_nonreal.push_back(pair.value);
            g_nonreal.push_back(std::conj(pair.value));
        }
        for (const auto& r : cs.unpaired) {
            zs.add_isolated(omega_reduced(gf.g1, gf.g2, r.value));
            g_nonreal.push_back(r.value);
        }
    }

    const ComplexPolynomial gt_raw = gf.g1 * conj_coeffs(gf.g1) + gf.g2 * conj_coeffs(gf.g2);
    if (!is_real_coeffs(gt_raw, 1e-10)) {
        throw NonRealDiscriminant("g1 conj(g1) + g2 conj(g2) has non-real coefficients");
    }
    const ComplexPolynomial gt = real_part(gt_raw);
    if (gt.degree() >= 1) {
        const RealClassification rc = real_roots(gt, tol.real, ro);
        for (const auto& r : rc.reals) {
            zs.add_real(r.value);
        }
        for (const auto& pair : rc.pairs) {
            const Complex eta = pair.value;
            if (near_any(eta, g_nonreal, tol.merge) || near_any(std::conj(eta), g_nonreal, tol.merge)) {
                continue;
            }
            zs.add_isolated(omega_reduced(gf.g1, gf.g2, eta));
        }
    }
    return std::move(zs).finish();
}

ZeroSet solve_complex_shortcut(const SimplePolynomial& p, const Tolerances& tol) {
    if (!p.has_complex_coeffs()) {
        throw NotComplexCoefficients("the shortcut needs every coefficient in C (no j or k part)");
    }
    if (p.degree() < 1) {
        throw DegreeZero("polynomial of degree " + std::to_string(p.degree()) + " has no zero set to solve for");
    }
    std::vector<Complex> c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) {
        c.emplace_back(q.a0, q.a1);
    }
    const ComplexPolynomial cp(std::move(c));
    const ConjugateSplit cs =
        split_conjugates(polish_clusters(cp, all_roots(cp, root_options(tol))), tol.real, tol.merge);

    ZeroSetBuilder zs(tol.dedup);
    for (const auto& r : cs.reals) {
        zs.add_real(r.value);
    }
    for (const auto& pair : cs.pairs) {
        zs.add_class(ConjugacyClass(pair.value));
    }
    for (const auto& r : cs.unpaired) {
        zs.add_isolated(embed_complex(r.value));
    }
    return std::move(zs).finish();
}

bool is_finite_zero_set(const DerivedPolynomials& dp, const Tolerances& tol) {
    const std::vector<ComplexPolynomial> all{dp.f1, dp.f2, dp.f1bar, dp.f2bar};
    const ComplexPolynomial common = gcd_many(all, tol.gcd);
    if (common.degree() < 1) {
        return true;
    }
    const RootList rl = all_roots(common, root_options(tol));
    return std::none_of(rl.roots.begin(), rl.roots.end(),
                        [&](const Root& r) { return std::abs(r.value.imag()) >= tol.real; });
}

void canonicalize(ZeroSet& zs) {
    std::sort(zs.real_zeros.begin(), zs.real_zeros.end());
    std::sort(zs.isolated_zeros.begin(), zs.isolated_zeros.end(), [](const Quaternion& x, const Quaternion& y) {
        return std::tie(x.a0, x.a1, x.a2, x.a3) < std::tie(y.a0, y.a1, y.a2, y.a3);
    });
    std::sort(zs.spherical.begin(), zs.spherical.end(), [](const ConjugacyClass& x, const ConjugacyClass& y) {
        return std::pair(x.re(), x.modulus()) < std::pair(y.re(), y.modulus());
    });
}

ZeroSet conj_zeros(const ZeroSet& zs) {
    ZeroSet out = zs;
    for (auto& q : out.isolated_zeros) {
        q = conj(q);
    }
    canonicalize(out);
    return out;
}

void ZeroSetBuilder::add_real(double x) {
    const bool dup = std::any_of(zs_.real_zeros.begin(), zs_.real_zeros.end(), [&](double y) {
        return std::abs(x - y) <= tol_ * std::max({1.0, std::abs(x), std::abs(y)});
    });
    if (!dup) {
        zs_.real_zeros.push_back(x);
    }
}

void ZeroSetBuilder::add_isolated(const Quaternion& q) {
    const bool dup = std::any_of(zs_.isolated_zeros.begin(), zs_.isolated_zeros.end(), [&](const Quaternion& y) {
        return distance(q, y) <= tol_ * std::max({1.0, norm(q), norm(y)});
    });
    if (!dup) {
        zs_.isolated_zeros.push_back(q);
    }
}

void ZeroSetBuilder::add_class(const ConjugacyClass& c) {
    const Quaternion rep = embed_complex(c.representative());
    const bool dup = std::any_of(zs_.spherical.begin(), zs_.spherical.end(), [&](const ConjugacyClass& y) {
        return same_class(rep, embed_complex(y.representative()), tol_);
    });
    if (!dup) {
        zs_.spherical.push_back(c);
    }
}

ZeroSet ZeroSetBuilder::finish() && {
    canonicalize(zs_);
    return std::move(zs_);
}

}  // namespace quatroots
