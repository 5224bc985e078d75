#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "quatroots/roots.hpp"
#include "support.hpp"

using namespace quatroots;
using qt::CNear;

namespace {

const Complex i1(0, 1);

ComplexPolynomial q12() { return ComplexPolynomial({1, 0, 1, 0, -1, 0, -2, 0, -1, 0, 1, 0, 1}); }

bool contains(const RootList& rl, Complex z, double tol, int mult = 0) {
    return std::any_of(rl.roots.begin(), rl.roots.end(), [&](const Root& r) {
        return std::abs(r.value - z) <= tol && (mult == 0 || r.multiplicity == mult);
    });
}

}  // namespace

TEST(Roots, Quadratic) {
    const RootList rl = all_roots(ComplexPolynomial({1, 0, 1}));
    EXPECT_EQ(rl.total_multiplicity(), 2);
    EXPECT_TRUE(contains(rl, i1, 1e-14));
    EXPECT_TRUE(contains(rl, -i1, 1e-14));
}

TEST(Roots, EighthRootsOfUnityHalf) {
    const RootList rl = all_roots(ComplexPolynomial({1, 0, 0, 0, 1}));
    EXPECT_EQ(rl.roots.size(), 4u);
    for (int k : {1, 3, 5, 7}) {
        EXPECT_TRUE(contains(rl, std::polar(1.0, k * std::numbers::pi / 4), 1e-14)) << k;
    }
}

TEST(Roots, Example3Discriminant) {
    const RootList rl = all_roots(q12());
    EXPECT_EQ(rl.total_multiplicity(), 12);
    const double s = std::sqrt(3.0) / 2;
    for (Complex z : {Complex(0.5, s), Complex(0.5, -s), Complex(-0.5, s), Complex(-0.5, -s)}) {
        EXPECT_TRUE(contains(rl, z, 1e-12, 1)) << z;
    }
    for (Complex z : {Complex(1), Complex(-1), i1, -i1}) {
        EXPECT_TRUE(contains(rl, z, 1e-7, 2)) << z;
    }
}

TEST(Roots, RandomRootsRecovered) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int t = 0; t < 100; ++t) {
        std::vector<Complex> want(1 + t % 12);
        for (auto& z : want) z = {u(rng), u(rng)};
        const RootList rl = all_roots(ComplexPolynomial::from_roots(want));
        EXPECT_EQ(rl.total_multiplicity(), static_cast<int>(want.size()));
        for (Complex z : want) {
            EXPECT_TRUE(contains(rl, z, 1e-6)) << z;
        }
    }
}

TEST(Roots, AberthHighDegree) {
    // z^200 - 2 spans a wide coefficient range and needs sane starting points
    std::vector<Complex> c(201);
    c[0] = -2;
    c[200] = 1;
    const AberthResult ar = aberth(ComplexPolynomial(c));
    ASSERT_TRUE(ar.converged);
    ASSERT_EQ(ar.roots.size(), 200u);
    const double r = std::pow(2.0, 1.0 / 200);
    for (Complex z : ar.roots) {
        EXPECT_NEAR(std::abs(z), r, 1e-12);
    }
}

TEST(Roots, QuadrupleConjugatePair) {
    // ((t^2 + 2t + 17)^2)^2 (t - 3): the quadruple roots scatter far past the merge tolerance
    const std::vector<Complex> want{{-1, 4}, {-1, 4}, {-1, 4}, {-1, 4}, {-1, -4}, {-1, -4}, {-1, -4}, {-1, -4}, 3};
    const RootList rl = all_roots(ComplexPolynomial::from_roots(want));
    EXPECT_EQ(rl.roots.size(), 3u);
    EXPECT_TRUE(contains(rl, Complex(-1, 4), 1e-9, 4));
    EXPECT_TRUE(contains(rl, Complex(-1, -4), 1e-9, 4));
    EXPECT_TRUE(contains(rl, 3, 1e-12, 1));
}

TEST(Roots, TripleRealRoot) {
    const RootList rl = all_roots(ComplexPolynomial::from_roots(std::vector<Complex>{2, 2, 2, -1}));
    EXPECT_EQ(rl.roots.size(), 2u);
    EXPECT_TRUE(contains(rl, 2, 1e-10, 3));
    EXPECT_TRUE(contains(rl, -1, 1e-12, 1));
}

TEST(Roots, CloseDistinctRootsStaySeparate) {
    const RootList rl = all_roots(ComplexPolynomial::from_roots(std::vector<Complex>{1, 1.001, 2.0 * i1}));
    EXPECT_EQ(rl.roots.size(), 3u);
    EXPECT_TRUE(contains(rl, 1, 1e-10, 1));
    EXPECT_TRUE(contains(rl, 1.001, 1e-10, 1));
}

TEST(Roots, ZeroRootsSplitOff) {
    const RootList rl = all_roots(ComplexPolynomial({0, 0, 1, 1}));
    EXPECT_TRUE(contains(rl, 0, 0, 2));
    EXPECT_TRUE(contains(rl, -1, 1e-14, 1));
}

TEST(Roots, ClassifyReal) {
    // (t - 1)^2 (t^2 + 1)
    const ComplexPolynomial p = ComplexPolynomial({1, -2, 1}) * ComplexPolynomial({1, 0, 1});
    const RealClassification rc = classify_real(all_roots(p));
    ASSERT_EQ(rc.reals.size(), 1u);
    EXPECT_NEAR(rc.reals[0].value, 1.0, 1e-7);
    EXPECT_EQ(rc.reals[0].multiplicity, 2);
    ASSERT_EQ(rc.pairs.size(), 1u);
    EXPECT_TRUE(CNear(rc.pairs[0].value, i1, 1e-14));
    EXPECT_EQ(rc.pairs[0].multiplicity, 1);
}

TEST(Roots, ClassifyRealExample2) {
    // (t^3 + t^2 + t + 1)^2 = (t + 1)^2 (t^2 + 1)^2
    const ComplexPolynomial f({1, 1, 1, 1});
    const RealClassification rc = real_roots(f * f);
    ASSERT_EQ(rc.reals.size(), 1u);
    EXPECT_NEAR(rc.reals[0].value, -1.0, 1e-12);
    EXPECT_EQ(rc.reals[0].multiplicity, 2);
    ASSERT_EQ(rc.pairs.size(), 1u);
    EXPECT_TRUE(CNear(rc.pairs[0].value, i1, 1e-12));
    EXPECT_EQ(rc.pairs[0].multiplicity, 2);
}

TEST(Roots, ClassifyRealRootTable) {
    // the published contaminated roots of the Example 3 discriminant
    RootList rl;
    rl.source_degree = 12;
    for (Complex z : {Complex(-1.000000000000001, 0.000000002066542), Complex(-1.000000000000001, -0.000000002066542),
                      Complex(-0.5, 0.866025403784440), Complex(-0.5, -0.866025403784440),
                      Complex(0.999999990102304, 0), Complex(1.000000009897694, 0),
                      Complex(0.5, 0.866025403784439), Complex(0.5, -0.866025403784439),
                      Complex(0.000000000016075, 1.000000008531051), Complex(0.000000000016075, -1.000000008531051),
                      Complex(-0.000000000016074, 0.999999991468949),
                      Complex(-0.000000000016074, -0.999999991468949)}) {
        rl.roots.push_back({z, 1});
    }
    const RealClassification rc = classify_real(rl);
    ASSERT_EQ(rc.reals.size(), 2u);
    for (const auto& r : rc.reals) {
        EXPECT_NEAR(std::abs(r.value), 1.0, 1e-7);
        EXPECT_EQ(r.multiplicity, 2);
    }
    ASSERT_EQ(rc.pairs.size(), 3u);
    const double s = std::sqrt(3.0) / 2;
    for (const auto& [z, m] : std::vector<std::pair<Complex, int>>{{i1, 2}, {{0.5, s}, 1}, {{-0.5, s}, 1}}) {
        const bool found = std::any_of(rc.pairs.begin(), rc.pairs.end(), [&](const Root& r) {
            return std::abs(r.value - z) < 1e-7 && r.multiplicity == m;
        });
        EXPECT_TRUE(found) << z;
    }
}

TEST(Roots, UnpairedNonRealThrows) {
    RootList rl;
    rl.source_degree = 1;
    rl.roots.push_back({i1, 1});
    EXPECT_ANY_THROW(classify_real(rl));
}

TEST(Roots, PolishDouble) {
    EXPECT_TRUE(CNear(polish_double(ComplexPolynomial({1, -2, 1}), 1.0000001), 1.0, 1e-12));
    const ComplexPolynomial sq = ComplexPolynomial({1, 0, 1}) * ComplexPolynomial({1, 0, 1});
    EXPECT_TRUE(CNear(polish_double(sq, Complex(0.0000000000161, 1.0000000085)), i1, 1e-12));
    // (t - 2)^2 (t + 1)
    const ComplexPolynomial p = ComplexPolynomial({4, -4, 1}) * ComplexPolynomial({1, 1});
    EXPECT_TRUE(CNear(polish_double(p, 2 + 1e-7), 2.0, 1e-12));
}

TEST(Roots, PolishDoubleMatchesBruteForceNewton) {
    // Newton on p' written out by hand for (t - 2)^2 (t + 1) = t^3 - 3t^2 + 4
    Complex z = 2 + 1e-7;
    for (int k = 0; k < 30; ++k) {
        const Complex d1 = 3.0 * z * z - 6.0 * z;
        const Complex d2 = 6.0 * z - 6.0;
        z -= d1 / d2;
    }
    const ComplexPolynomial p({4, 0, -3, 1});
    EXPECT_TRUE(CNear(polish_double(p, 2 + 1e-7), z, 1e-13));
}

TEST(Roots, SplitConjugates) {
    // (t - i)(t + i)(t - 2i)(t - 3)
    const std::vector<Complex> rts{i1, -i1, 2.0 * i1, 3.0};
    const ConjugateSplit cs = split_conjugates(all_roots(ComplexPolynomial::from_roots(rts)));
    ASSERT_EQ(cs.reals.size(), 1u);
    EXPECT_NEAR(cs.reals[0].value, 3.0, 1e-12);
    ASSERT_EQ(cs.pairs.size(), 1u);
    EXPECT_TRUE(CNear(cs.pairs[0].value, i1, 1e-12));
    ASSERT_EQ(cs.unpaired.size(), 1u);
    EXPECT_TRUE(CNear(cs.unpaired[0].value, 2.0 * i1, 1e-12));
}
