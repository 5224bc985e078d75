#include <gtest/gtest.h>

#include <random>

#include "quatroots/baseline.hpp"
#include "quatroots/verify.hpp"
#include "support.hpp"

using namespace quatroots;
using qt::I;
using qt::J;
using qt::K;

namespace {

ZeroSet example1_set() {
    ZeroSet zs;
    zs.isolated_zeros = qt::example1_zeros();
    return zs;
}

ZeroSet example3_set() {
    ZeroSet zs;
    zs.real_zeros = {-1.0, 1.0};
    zs.isolated_zeros = qt::example3_isolated();
    zs.spherical.emplace_back(Complex(0, 1));
    return zs;
}

}  // namespace

TEST(Verify, EvalQpoly) {
    EXPECT_LE(norm(eval_qpoly(qt::example1(), K)), 1e-15);
    // j^3 + j^2 + j + 1 = -j - 1 + j + 1
    EXPECT_LE(norm(eval_qpoly(qt::example2(), J)), 1e-15);
    const Quaternion q{0.3, -1, 2, 0.5};
    EXPECT_LE(norm(eval_qpoly(SimplePolynomial({-1.0 * q, 1.0}), q)), 1e-15);
}

TEST(Verify, EvalQpolyMatchesOracles) {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int t = 0; t < 200; ++t) {
        const auto p = qt::random_integer_poly(rng, 8);
        const Quaternion z = qt::random_quaternion(rng);
        EXPECT_LE(qt::qdist(eval_qpoly(p, z), qt::oracle_eval(p.coeffs(), z)), 1e-12 * residual_scale(p, z));

        // complex coefficients at a complex point reduce to complex Horner
        std::vector<Complex> c(1 + t % 7);
        std::vector<Quaternion> qc;
        for (auto& x : c) {
            x = {u(rng), u(rng)};
            qc.push_back(embed_complex(x));
        }
        const Complex w(u(rng), u(rng));
        const Complex h = qt::naive_eval(c, w);
        const Quaternion e = eval_qpoly(SimplePolynomial(qc), embed_complex(w));
        EXPECT_LE(qt::qdist(e, embed_complex(h)), 1e-12 * std::max(1.0, std::abs(h)) * 10);
    }
}

TEST(Verify, RightSidedEvaluation) {
    // j k + i = 2i, k j + i = 0
    const SimplePolynomial p({I, J});
    EXPECT_EQ(eval_qpoly(p, K, Side::left), 2.0 * I);
    EXPECT_EQ(eval_qpoly(p, K, Side::right), Quaternion());
}

TEST(Verify, AuditPublishedSets) {
    const VerificationReport r1 = audit(qt::example1(), example1_set());
    EXPECT_LT(r1.max_residual, 1e-10);
    EXPECT_TRUE(r1.ok());
    EXPECT_EQ(r1.entries.size(), 3u);

    AuditOptions ao;
    ao.samples_per_class = 8;
    const VerificationReport r3 = audit(qt::example3(), example3_set(), ao);
    EXPECT_LT(r3.max_residual, 1e-10);
    EXPECT_EQ(r3.entries.size(), 2u + 2u + 8u);
    EXPECT_TRUE(r3.ok());
}

TEST(Verify, AuditCatchesCorruption) {
    ZeroSet bad = example1_set();
    bad.isolated_zeros[0] = K + Quaternion(0, 0, 0, 0.1);
    const Quaternion oracle = qt::oracle_eval(qt::example1().coeffs(), bad.isolated_zeros[0]);
    EXPECT_GT(qt::qabs(oracle), 1e-2);
    const VerificationReport r = audit(qt::example1(), bad);
    EXPECT_GT(r.max_residual, 1e-2);
    EXPECT_NEAR(r.max_residual, qt::qabs(oracle), 1e-12);
    EXPECT_FALSE(r.residuals_ok);
    EXPECT_FALSE(r.ok());
}

TEST(Verify, AuditCountBounds) {
    ZeroSet zs;
    zs.spherical = {ConjugacyClass(Complex(0, 1)), ConjugacyClass(Complex(0, 2))};
    // degree 3 allows one spherical class at most
    EXPECT_FALSE(audit(qt::example2(), zs).bounds_ok);
}

TEST(Verify, MaxResidualIsMaxOfEntries) {
    const VerificationReport r = audit(qt::example3(), solve_jo(qt::example3()));
    double m = 0.0;
    for (const auto& e : r.entries) m = std::max(m, e.residual);
    EXPECT_EQ(r.max_residual, m);
}

TEST(Verify, Compare) {
    EXPECT_TRUE(compare(solve_alg1(qt::example2()), solve_jo(qt::example2()), 1e-6).empty());
    EXPECT_TRUE(compare(example3_set(), example3_set(), 1e-6).empty());

    ZeroSet iso;
    iso.isolated_zeros = {I};
    ZeroSet sph;
    sph.spherical = {ConjugacyClass(Complex(0, 1))};
    const AgreementDiff d = compare(iso, sph, 1e-6);
    EXPECT_FALSE(d.empty());
    EXPECT_EQ(d.isolated_only_left.size(), 1u);
    EXPECT_EQ(d.spherical_only_right.size(), 1u);
}

TEST(Verify, CompareIsSymmetric) {
    std::mt19937_64 rng(62);
    for (int t = 0; t < 50; ++t) {
        ZeroSet a = example3_set();
        ZeroSet b = example3_set();
        if (t % 2 == 0) b.isolated_zeros[0] = b.isolated_zeros[0] + qt::random_quaternion(rng) * 1e-3;
        if (t % 3 == 0) b.real_zeros.push_back(5.0);
        EXPECT_EQ(compare(a, b, 1e-6).empty(), compare(b, a, 1e-6).empty());
    }
}
