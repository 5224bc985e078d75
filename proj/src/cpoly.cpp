#include "quatroots/cpoly.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "quatroots/errors.hpp"

namespace quatroots {

namespace {

void trim(std::vector<Complex>& c) {
    double biggest = 0.0;
    for (const auto& x : c) {
        biggest = std::max(biggest, std::abs(x));
    }
    if (biggest == 0.0) {
        c.clear();
        return;
    }
    const double cutoff = ComplexPolynomial::kTrimThreshold * biggest;
    while (!c.empty() && std::abs(c.back()) <= cutoff) {
        c.pop_back();
    }
}

ComplexPolynomial scaled_to_unit_norm(const ComplexPolynomial& p) {
    return Complex(1.0 / p.norm()) * p;
}

// Unit-norm copy without leading coefficients of modulus <= tol. A rounding
// residue in the leading slot would otherwise be divided by.
// p(s t)
ComplexPolynomial substitute_scale(const ComplexPolynomial& p, double s) {
    std::vector<Complex> c = p.coeffs();
    double f = 1.0;
    for (auto& x : c) {
        x *= f;
        f *= s;
    }
    return ComplexPolynomial(std::move(c));
}

// (|c_lo| / |c_n|)^(1 / (n - lo)) for the lowest nonzero c_lo, or 1 when that
// is degenerate or would overflow the substitution.
double root_scale(const ComplexPolynomial& p) {
    const auto& c = p.coeffs();
    const int n = p.degree();
    std::size_t lo = 0;
    while (lo < c.size() && c[lo] == Complex(0.0)) {
        ++lo;
    }
    if (n < 1 || static_cast<int>(lo) >= n) {
        return 1.0;
    }
    const double rho = std::pow(std::abs(c[lo]) / std::abs(c.back()), 1.0 / (n - static_cast<int>(lo)));
    if (!std::isfinite(rho) || rho <= 0.0 || !std::isfinite(std::pow(std::max(rho, 1.0 / rho), n))) {
        return 1.0;
    }
    return rho;
}

ComplexPolynomial effective(const ComplexPolynomial& p, double tol) {
    std::vector<Complex> c = scaled_to_unit_norm(p).coeffs();
    while (c.size() > 1 && std::abs(c.back()) <= tol) {
        c.pop_back();
    }
    return scaled_to_unit_norm(ComplexPolynomial(std::move(c)));
}

}  // namespace

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    trim(coeffs_);
}

ComplexPolynomial::ComplexPolynomial(std::initializer_list<Complex> coeffs)
    : ComplexPolynomial(std::vector<Complex>(coeffs)) {}

ComplexPolynomial ComplexPolynomial::constant(Complex c) {
    return ComplexPolynomial(std::vector<Complex>{c});
}

ComplexPolynomial ComplexPolynomial::monomial(Complex c, int power) {
    std::vector<Complex> v(static_cast<std::size_t>(power) + 1, Complex(0.0));
    v.back() = c;
    return ComplexPolynomial(std::move(v));
}

ComplexPolynomial ComplexPolynomial::from_roots(std::span<const Complex> roots) {
    std::vector<Complex> c{Complex(1.0)};
    for (const auto& r : roots) {
        c.push_back(Complex(0.0));
        for (std::size_t k = c.size() - 1; k > 0; --k) {
            c[k] = c[k - 1] - r * c[k];
        }
        c[0] = -r * c[0];
    }
    return ComplexPolynomial(std::move(c));
}

Complex ComplexPolynomial::operator[](int power) const {
    if (power < 0 || power > degree()) {
        return Complex(0.0);
    }
    return coeffs_[static_cast<std::size_t>(power)];
}

Complex ComplexPolynomial::leading() const {
    return coeffs_.empty() ? Complex(0.0) : coeffs_.back();
}

double ComplexPolynomial::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : coeffs_) {
        m = std::max(m, std::abs(c));
    }
    return m;
}

double ComplexPolynomial::norm() const {
    double s = 0.0;
    for (const auto& c : coeffs_) {
        s += std::norm(c);
    }
    return std::sqrt(s);
}

Complex eval(const ComplexPolynomial& p, Complex t) {
    Complex acc(0.0);
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

double eval_scale(const ComplexPolynomial& p, Complex t) {
    const double r = std::abs(t);
    double acc = 0.0;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * r + std::abs(*it);
    }
    return acc;
}

ComplexPolynomial conj_coeffs(const ComplexPolynomial& p) {
    std::vector<Complex> c = p.coeffs();
    for (auto& x : c) {
        x = std::conj(x);
    }
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial derivative(const ComplexPolynomial& p) {
    if (p.degree() < 1) {
        return {};
    }
    std::vector<Complex> c(static_cast<std::size_t>(p.degree()));
    for (int k = 1; k <= p.degree(); ++k) {
        c[static_cast<std::size_t>(k - 1)] = static_cast<double>(k) * p[k];
    }
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial monic(const ComplexPolynomial& p) {
    if (p.is_zero()) {
        return p;
    }
    return (Complex(1.0) / p.leading()) * p;
}

ComplexPolynomial add(const ComplexPolynomial& p, const ComplexPolynomial& q) {
    const auto n = std::max(p.coeffs().size(), q.coeffs().size());
    std::vector<Complex> c(n);
    for (std::size_t k = 0; k < n; ++k) {
        c[k] = p[static_cast<int>(k)] + q[static_cast<int>(k)];
    }
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial mul(const ComplexPolynomial& p, const ComplexPolynomial& q) {
    if (p.is_zero() || q.is_zero()) {
        return {};
    }
    const auto& a = p.coeffs();
    const auto& b = q.coeffs();
    std::vector<Complex> c(a.size() + b.size() - 1, Complex(0.0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < b.size(); ++k) {
            c[i + k] += a[i] * b[k];
        }
    }
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial operator+(const ComplexPolynomial& p, const ComplexPolynomial& q) {
    return add(p, q);
}

ComplexPolynomial operator-(const ComplexPolynomial& p, const ComplexPolynomial& q) {
    return add(p, Complex(-1.0) * q);
}

ComplexPolynomial operator*(const ComplexPolynomial& p, const ComplexPolynomial& q) {
    return mul(p, q);
}

ComplexPolynomial operator*(Complex s, const ComplexPolynomial& p) {
    std::vector<Complex> c = p.coeffs();
    for (auto& x : c) {
        x *= s;
    }
    return ComplexPolynomial(std::move(c));
}

std::pair<ComplexPolynomial, ComplexPolynomial> divrem(const ComplexPolynomial& p,
                                                       const ComplexPolynomial& d) {
    if (d.is_zero()) {
        throw ZeroDivisor("polynomial division by zero");
    }
    const int dd = d.degree();
    if (p.degree() < dd) {
        return {ComplexPolynomial{}, p};
    }
    std::vector<Complex> r = p.coeffs();
    std::vector<Complex> q(static_cast<std::size_t>(p.degree() - dd) + 1, Complex(0.0));
    const Complex lead = d.leading();
    for (int k = p.degree() - dd; k >= 0; --k) {
        const auto top = static_cast<std::size_t>(k + dd);
        const Complex c = r[top] / lead;
        q[static_cast<std::size_t>(k)] = c;
        for (int m = 0; m < dd; ++m) {
            r[static_cast<std::size_t>(k + m)] -= c * d[m];
        }
        r[top] = Complex(0.0);
    }
    r.resize(static_cast<std::size_t>(dd));
    return {ComplexPolynomial(std::move(q)), ComplexPolynomial(std::move(r))};
}

ComplexPolynomial gcd(const ComplexPolynomial& p, const ComplexPolynomial& q, double tol) {
    if (p.is_zero() && q.is_zero()) {
        throw std::invalid_argument("gcd of two zero polynomials");
    }
    if (q.is_zero()) {
        return monic(p);
    }
    if (p.is_zero()) {
        return monic(q);
    }
    // Remainders are rescaled to unit norm; this leaves the gcd unchanged and
    // keeps long remainder sequences away from under- and overflow.
    // Inputs lose only leading rounding residue; remainders are cut at tol.
    constexpr double residue = 1e-14;
    ComplexPolynomial a = effective(p, residue);
    ComplexPolynomial b = effective(q, residue);
    if (a.degree() < b.degree()) {
        std::swap(a, b);
    }
    // Euclid runs on a(rho t), b(rho t) with rho the geometric mean root
    // modulus of a; strongly graded coefficients wreck the remainder sequence.
    const double rho = root_scale(a);
    a = scaled_to_unit_norm(substitute_scale(a, rho));
    b = scaled_to_unit_norm(substitute_scale(b, rho));
    while (b.degree() > 0) {
        auto r = divrem(a, b).second;
        if (r.is_zero() || r.norm() <= tol * a.norm()) {
            return monic(substitute_scale(b, 1.0 / rho));
        }
        a = std::move(b);
        b = effective(r, tol);
    }
    return ComplexPolynomial::constant(1.0);
}

ComplexPolynomial gcd_many(std::span<const ComplexPolynomial> ps, double tol) {
    ComplexPolynomial acc;
    for (const auto& p : ps) {
        if (p.is_zero()) {
            continue;
        }
        acc = acc.is_zero() ? monic(p) : gcd(acc, p, tol);
        if (acc.degree() == 0) {
            break;
        }
    }
    if (acc.is_zero()) {
        throw std::invalid_argument("gcd_many needs at least one nonzero polynomial");
    }
    return acc;
}

bool is_real_coeffs(const ComplexPolynomial& p, double tol) {
    const double cutoff = tol * p.max_abs_coeff();
    return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                       [cutoff](const Complex& c) { return std::abs(c.imag()) <= cutoff; });
}

ComplexPolynomial real_part(const ComplexPolynomial& p) {
    std::vector<Complex> c = p.coeffs();
    for (auto& x : c) {
        x = Complex(x.real(), 0.0);
    }
    return ComplexPolynomial(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const ComplexPolynomial& p) {
    if (p.is_zero()) {
        return os << "0";
    }
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Complex c = p[k];
        if (c == Complex(0.0)) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        os << c;
        if (k > 0) {
            os << " t^" << k;
        }
    }
    return os;
}

}  // namespace quatroots
