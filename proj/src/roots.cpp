#include "quatroots/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>

#include "quatroots/errors.hpp"

namespace quatroots {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
const double kGoldenAngle = std::numbers::pi * (3.0 - std::sqrt(5.0));

struct PointEval {
    Complex log_derivative;  ///< p'(z) / p(z); unused when exact_zero
    double rel_residual = 0.0;  ///< |p(z)| / sum |a_k| |z|^k
    double bound_ratio = 0.0;   ///< |p(z)| / (max|a_k| * max(1, |z|)^n)
    bool exact_zero = false;
};

// Evaluates p and p' at z without forming |z|^n for |z| > 1: there the
// reversed polynomial is evaluated at 1/z instead.
PointEval evaluate(const std::vector<Complex>& a, double max_coeff, Complex z) {
    const int n = static_cast<int>(a.size()) - 1;
    PointEval out;
    if (std::abs(z) <= 1.0) {
        Complex p(0.0);
        Complex dp(0.0);
        double scale = 0.0;
        const double r = std::abs(z);
        for (int k = n; k >= 0; --k) {
            dp = dp * z + p;
            p = p * z + a[static_cast<std::size_t>(k)];
            scale = scale * r + std::abs(a[static_cast<std::size_t>(k)]);
        }
        out.exact_zero = (p == Complex(0.0));
        out.log_derivative = out.exact_zero ? Complex(0.0) : dp / p;
        out.rel_residual = std::abs(p) / scale;
        out.bound_ratio = std::abs(p) / max_coeff;
        return out;
    }
    const Complex w = 1.0 / z;
    const double r = std::abs(w);
    Complex rev(0.0);
    Complex drev(0.0);
    double scale = 0.0;
    for (int k = 0; k <= n; ++k) {
        drev = drev * w + rev;
        rev = rev * w + a[static_cast<std::size_t>(k)];
        scale = scale * r + std::abs(a[static_cast<std::size_t>(k)]);
    }
    out.exact_zero = (rev == Complex(0.0));
    // p = z^n rev(w), p' = z^(n-1) (n rev - w rev')
    out.log_derivative =
        out.exact_zero ? Complex(0.0) : (static_cast<double>(n) * rev - w * drev) / (z * rev);
    out.rel_residual = std::abs(rev) / scale;
    out.bound_ratio = std::abs(rev) / max_coeff;
    return out;
}

// Starting points on the Newton-polygon circles of the coefficient moduli.
std::vector<Complex> initial_guesses(const std::vector<Complex>& a) {
    const int n = static_cast<int>(a.size()) - 1;
    std::vector<int> idx;
    std::vector<double> lg;
    for (int k = 0; k <= n; ++k) {
        const double m = std::abs(a[static_cast<std::size_t>(k)]);
        if (m > 0.0) {
            idx.push_back(k);
            lg.push_back(std::log(m));
        }
    }
    // upper convex hull of the points (k, log|a_k|)
    std::vector<std::size_t> hull;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        while (hull.size() >= 2) {
            const auto o = hull[hull.size() - 2];
            const auto b = hull.back();
            const double cross = (idx[b] - idx[o]) * (lg[i] - lg[o]) - (lg[b] - lg[o]) * (idx[i] - idx[o]);
            if (cross >= 0.0) {
                hull.pop_back();
            } else {
                break;
            }
        }
        hull.push_back(i);
    }

    std::vector<Complex> z;
    z.reserve(static_cast<std::size_t>(n));
    for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
        const int k0 = idx[hull[e]];
        const int k1 = idx[hull[e + 1]];
        const int m = k1 - k0;
        const double radius = std::exp((lg[hull[e]] - lg[hull[e + 1]]) / m);
        const double phase = kGoldenAngle * static_cast<double>(e + 1) + 0.25;
        for (int j = 0; j < m; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / m + phase;
            z.push_back(std::polar(radius, theta));
        }
    }
    return z;
}

}  // namespace

int RootList::total_multiplicity() const {
    int s = 0;
    for (const auto& r : roots) {
        s += r.multiplicity;
    }
    return s;
}

AberthResult aberth(const ComplexPolynomial& p, const AberthOptions& options) {
    if (p.degree() < 1) {
        throw std::invalid_argument("root finding needs degree >= 1");
    }
    // Exact zero roots are split off first; the Newton polygon needs a_0 != 0.
    std::size_t zeros = 0;
    while (p.coeffs()[zeros] == Complex(0.0)) {
        ++zeros;
    }
    const std::vector<Complex> a(p.coeffs().begin() + static_cast<std::ptrdiff_t>(zeros),
                                 p.coeffs().end());
    const int n = static_cast<int>(a.size()) - 1;
    const double max_coeff = p.max_abs_coeff();

    AberthResult result;
    result.roots.assign(zeros, Complex(0.0));

    std::vector<Complex> z;
    std::vector<bool> done;
    if (n == 1) {
        z.push_back(-a[0] / a[1]);
        done.push_back(true);
    } else if (n > 1) {
        z = initial_guesses(a);
        done.assign(z.size(), false);
    }

    int it = 0;
    std::size_t remaining = static_cast<std::size_t>(std::count(done.begin(), done.end(), false));
    for (; it < options.max_iterations && remaining > 0; ++it) {
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (done[i]) {
                continue;
            }
            const PointEval ev = evaluate(a, max_coeff, z[i]);
            if (ev.exact_zero || ev.rel_residual <= 4.0 * kEps * n) {
                done[i] = true;
                --remaining;
                continue;
            }
            Complex s(0.0);
            for (std::size_t j = 0; j < z.size(); ++j) {
                if (j != i) {
                    s += 1.0 / (z[i] - z[j]);
                }
            }
            Complex denom = ev.log_derivative - s;
            if (denom == Complex(0.0)) {
                denom = Complex(kEps, kEps);
            }
            const Complex step = 1.0 / denom;
            z[i] -= step;
            if (std::abs(step) <= options.step_tol * (1.0 + std::abs(z[i]))) {
                done[i] = true;
                --remaining;
            }
        }
    }

    // Guarded Newton pass: a step is kept only when it lowers the residual,
    // so clustered (multiple) roots are left where the iteration put them.
    for (auto& zi : z) {
        for (int k = 0; k < 2; ++k) {
            const PointEval ev = evaluate(a, max_coeff, zi);
            if (ev.exact_zero || ev.log_derivative == Complex(0.0)) {
                break;
            }
            const Complex cand = zi - 1.0 / ev.log_derivative;
            if (evaluate(a, max_coeff, cand).rel_residual < ev.rel_residual) {
                zi = cand;
            } else {
                break;
            }
        }
    }

    result.iterations = it;
    result.converged = (remaining == 0);
    result.roots.insert(result.roots.end(), z.begin(), z.end());
    result.residuals.reserve(result.roots.size());
    for (const auto& r : result.roots) {
        result.residuals.push_back(std::abs(eval(p, r)));
    }
    return result;
}

namespace {

AberthResult checked_aberth(const ComplexPolynomial& p, const RootOptions& options) {
    AberthResult raw = aberth(p, options.aberth);
    if (!raw.converged) {
        const double max_coeff = p.max_abs_coeff();
        const int n = p.degree();
        for (const auto& r : raw.roots) {
            const PointEval ev = evaluate(p.coeffs(), max_coeff, r);
            if (!(ev.exact_zero || ev.bound_ratio <= 1e-8)) {
                throw NoConvergence("root iteration hit its cap of " +
                                        std::to_string(options.aberth.max_iterations) +
                                        " sweeps at degree " + std::to_string(n),
                                    raw.roots, raw.residuals);
            }
        }
    }
    return raw;
}

// union-find over pairwise proximity
RootList cluster(const std::vector<Complex>& z, double radius, int degree) {
    const std::size_t m = z.size();
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&parent](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const double tol = radius * (1.0 + std::max(std::abs(z[i]), std::abs(z[j])));
            if (std::abs(z[i] - z[j]) <= tol) {
                parent[find(i)] = find(j);
            }
        }
    }
    std::vector<Complex> sum(m, Complex(0.0));
    std::vector<int> count(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        const auto r = find(i);
        sum[r] += z[i];
        ++count[r];
    }
    RootList out;
    out.source_degree = degree;
    for (std::size_t i = 0; i < m; ++i) {
        if (count[i] > 0) {
            out.roots.push_back({sum[i] / static_cast<double>(count[i]), count[i]});
        }
    }
    return out;
}

// p(rho t) with rho the geometric mean root modulus, which balances the
// coefficients so that large and small roots weigh alike. rho is 0 when it
// cannot be formed.
std::pair<ComplexPolynomial, double> balanced(const ComplexPolynomial& p) {
    const auto& c = p.coeffs();
    const int n = p.degree();
    std::size_t lo = 0;
    while (c[lo] == Complex(0.0)) {
        ++lo;
    }
    double rho = 1.0;
    if (static_cast<int>(lo) < n) {
        rho = std::pow(std::abs(c[lo]) / std::abs(c.back()), 1.0 / (n - static_cast<int>(lo)));
    }
    std::vector<Complex> sc = c;
    for (std::size_t k = 0; k < sc.size(); ++k) {
        sc[k] *= std::pow(rho, static_cast<double>(k));
        if (!std::isfinite(std::abs(sc[k]))) {
            return {p, 0.0};
        }
    }
    if (!std::isfinite(rho) || rho <= 0.0) {
        return {p, 0.0};
    }
    return {ComplexPolynomial(std::move(sc)), rho};
}

// Normwise backward error of the factored form lead * prod (t - z)^m.
double backward_error(const ComplexPolynomial& p, const RootList& rl) {
    std::vector<Complex> expanded;
    for (const auto& r : rl.roots) {
        expanded.insert(expanded.end(), static_cast<std::size_t>(r.multiplicity), r.value);
    }
    const std::vector<Complex> got = ComplexPolynomial::from_roots(expanded).coeffs();
    const auto& c = p.coeffs();
    if (got.size() != c.size()) {
        return std::numeric_limits<double>::infinity();
    }
    double err = 0.0;
    double size = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        err = std::max(err, std::abs(c.back() * got[k] - c[k]));
        size = std::max(size, std::abs(c[k]));
    }
    return err / size;
}

// A root of multiplicity m leaves the iteration spread over a disc of radius
// about eps^(1/m), far wider than the merge tolerance once m >= 3. Wider
// clusterings are tried from the loosest down; a clustering is accepted when
// its polished roots, expanded with their multiplicities, reproduce p. All of
// this runs on the balanced polynomial.
std::optional<RootList> structured_roots(const ComplexPolynomial& p_in, const std::vector<Complex>& raw_in) {
    constexpr double kAccept = 1e-8;
    const auto [p, rho] = balanced(p_in);
    if (rho == 0.0) {
        return std::nullopt;
    }
    std::vector<Complex> raw = raw_in;
    for (auto& z : raw) {
        z /= rho;
    }
    std::size_t last_count = 0;
    for (double radius : {1e-1, 3e-2, 1e-2, 3e-3, 1e-3, 3e-4, 1e-4, 3e-5, 1e-5}) {
        RootList rl = cluster(raw, radius, p.degree());
        if (rl.roots.size() == last_count) {
            continue;
        }
        last_count = rl.roots.size();
        if (rl.roots.size() == raw.size()) {
            return std::nullopt;
        }
        for (auto& r : rl.roots) {
            if (r.multiplicity >= 2) {
                r.value = polish_multiple(p, r.value, r.multiplicity);
            }
        }
        if (backward_error(p, rl) <= kAccept) {
            for (auto& r : rl.roots) {
                r.value *= rho;
            }
            return rl;
        }
    }
    return std::nullopt;
}

}  // namespace

RootList all_roots(const ComplexPolynomial& p, const RootOptions& options) {
    const AberthResult raw = checked_aberth(p, options);
    if (auto rl = structured_roots(p, raw.roots)) {
        return *rl;
    }
    return cluster(raw.roots, options.merge_tol, p.degree());
}

Complex polish_multiple(const ComplexPolynomial& p, Complex z0, int multiplicity) {
    ComplexPolynomial q = p;
    for (int k = 1; k < multiplicity; ++k) {
        q = derivative(q);
    }
    if (q.degree() < 1) {
        return z0;
    }
    const ComplexPolynomial dq = derivative(q);
    auto rel = [&q](Complex z) { return std::abs(eval(q, z)) / eval_scale(q, z); };

    Complex z = z0;
    Complex best = z0;
    double best_rel = rel(z0);
    for (int it = 0; it < 50 && best_rel > 0.0; ++it) {
        const Complex d = eval(dq, z);
        if (d == Complex(0.0)) {
            break;
        }
        const Complex step = eval(q, z) / d;
        z -= step;
        const double r = rel(z);
        if (r < best_rel) {
            best_rel = r;
            best = z;
        }
        if (std::abs(step) <= 4.0 * kEps * (1.0 + std::abs(z))) {
            break;
        }
    }
    // a polish that wanders off its cluster has converged to some other point
    if (std::abs(best - z0) > 1e-3 * (1.0 + std::abs(z0))) {
        return z0;
    }
    return best;
}

RootList polish_clusters(const ComplexPolynomial& p, RootList rl) {
    for (auto& r : rl.roots) {
        if (r.multiplicity >= 2) {
            r.value = polish_multiple(p, r.value, r.multiplicity);
        }
    }
    return rl;
}

RealClassification classify_real(const RootList& rl, double tol_real, double merge_tol) {
    // Fold every root into the closed upper half plane and cluster there; a
    // conjugate pair then lands in one cluster with equal upper and lower
    // multiplicity.
    struct Folded {
        Complex value;
        int upper = 0;
        int lower = 0;
        int real = 0;
    };
    std::vector<Folded> clusters;
    for (const auto& r : rl.roots) {
        const Complex f(r.value.real(), std::abs(r.value.imag()));
        Folded* hit = nullptr;
        for (auto& c : clusters) {
            if (std::abs(c.value - f) <= merge_tol * (1.0 + std::abs(f))) {
                hit = &c;
                break;
            }
        }
        if (hit == nullptr) {
            clusters.push_back({Complex(0.0)});
            hit = &clusters.back();
        }
        const int before = hit->upper + hit->lower + hit->real;
        hit->value = (hit->value * static_cast<double>(before) + f * static_cast<double>(r.multiplicity)) /
                     static_cast<double>(before + r.multiplicity);
        if (r.value.imag() > 0.0) {
            hit->upper += r.multiplicity;
        } else if (r.value.imag() < 0.0) {
            hit->lower += r.multiplicity;
        } else {
            hit->real += r.multiplicity;
        }
    }

    RealClassification out;
    for (const auto& c : clusters) {
        const int total = c.upper + c.lower + c.real;
        if (std::abs(c.value.imag()) < tol_real) {
            out.reals.push_back({c.value.real(), total});
            continue;
        }
        if (c.upper != c.lower || c.real != 0) {
            throw UnpairedRoot("nonreal root near (" + std::to_string(c.value.real()) + ", " +
                               std::to_string(c.value.imag()) +
                               ") has no conjugate partner of equal multiplicity");
        }
        out.pairs.push_back({c.value, c.upper});
    }
    std::sort(out.reals.begin(), out.reals.end(),
              [](const RealRoot& x, const RealRoot& y) { return x.value < y.value; });
    return out;
}

RealClassification real_roots(const ComplexPolynomial& p, double tol_real,
                              const RootOptions& options) {
    RealClassification rc = classify_real(all_roots(p, options), tol_real, options.merge_tol);
    for (auto& r : rc.reals) {
        if (r.multiplicity >= 2) {
            r.value = polish_multiple(p, Complex(r.value), r.multiplicity).real();
        }
    }
    for (auto& r : rc.pairs) {
        if (r.multiplicity >= 2) {
            r.value = polish_multiple(p, r.value, r.multiplicity);
        }
    }
    return rc;
}

ConjugateSplit split_conjugates(const RootList& rl, double tol_real, double merge_tol) {
    ConjugateSplit out;
    std::vector<const Root*> upper;
    std::vector<const Root*> lower;
    for (const auto& r : rl.roots) {
        if (std::abs(r.value.imag()) < tol_real) {
            out.reals.push_back({r.value.real(), r.multiplicity});
        } else if (r.value.imag() > 0.0) {
            upper.push_back(&r);
        } else {
            lower.push_back(&r);
        }
    }
    std::vector<bool> lower_used(lower.size(), false);
    for (const Root* u : upper) {
        std::size_t best = lower.size();
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < lower.size(); ++k) {
            if (lower_used[k]) {
                continue;
            }
            const double d = std::abs(u->value - std::conj(lower[k]->value));
            if (d < best_dist) {
                best_dist = d;
                best = k;
            }
        }
        if (best < lower.size() && best_dist <= merge_tol * (1.0 + std::abs(u->value))) {
            lower_used[best] = true;
            out.pairs.push_back({0.5 * (u->value + std::conj(lower[best]->value)),
                                 std::min(u->multiplicity, lower[best]->multiplicity)});
        } else {
            out.unpaired.push_back(*u);
        }
    }
    for (std::size_t k = 0; k < lower.size(); ++k) {
        if (!lower_used[k]) {
            out.unpaired.push_back(*lower[k]);
        }
    }
    std::sort(out.reals.begin(), out.reals.end(),
              [](const RealRoot& x, const RealRoot& y) { return x.value < y.value; });
    return out;
}

}  // namespace quatroots
