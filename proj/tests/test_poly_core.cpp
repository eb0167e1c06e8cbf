#include "rsharp/bivar_poly.hpp"
#include "rsharp/errors.hpp"
#include "rsharp/univar_poly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace rsharp;

namespace {

BivarPoly m(long num, long den, int a, int b) { return BivarPoly::monomial(rat(num, den), a, b); }

// z1^4 + z1^2 z2 + z2^2/6
BivarPoly twisted_i() { return m(1, 1, 4, 0) + m(1, 1, 2, 1) + m(1, 6, 0, 2); }

BivarPoly curve_sq() {
    BivarPoly f = BivarPoly::z2() - m(1, 1, 2, 0);
    return f * f;
}

BivarPoly random_poly(std::mt19937& g, int deg) {
    std::uniform_int_distribution<int> e(0, deg), c(-5, 5);
    BivarPoly p;
    for (int k = 0; k < 5; ++k) p += m(c(g), 1 + (k % 3), e(g), e(g));
    return p;
}

}  // namespace

TEST(Support, ReadsTermsInOrder) {
    std::vector<Exponent> want = {{0, 2}, {2, 1}, {4, 0}};
    EXPECT_EQ(twisted_i().support(), want);
    EXPECT_EQ(curve_sq().support(), want);
    EXPECT_TRUE(BivarPoly().support().empty());
}

TEST(Arithmetic, CancellationRemovesTerms) {
    BivarPoly p = m(3, 1, 2, 1) + m(-3, 1, 2, 1);
    EXPECT_TRUE(p.is_zero());
    EXPECT_EQ((curve_sq() - curve_sq()).size(), 0u);
}

TEST(Arithmetic, RingAxiomsOnRandomPolynomials) {
    std::mt19937 g(11);
    for (int i = 0; i < 50; ++i) {
        BivarPoly a = random_poly(g, 4), b = random_poly(g, 4), c = random_poly(g, 4);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a.pow(2), a * a);
    }
}

TEST(Arithmetic, ProductRuleForDerivatives) {
    std::mt19937 g(5);
    for (int i = 0; i < 30; ++i) {
        BivarPoly a = random_poly(g, 5), b = random_poly(g, 5);
        for (int v = 1; v <= 2; ++v)
            EXPECT_EQ((a * b).derivative(v), a.derivative(v) * b + a * b.derivative(v));
    }
}

TEST(Derivative, Fixtures) {
    EXPECT_EQ((m(1, 1, 4, 0) + m(1, 1, 2, 1)).derivative(1), m(4, 1, 3, 0) + m(2, 1, 1, 1));
    EXPECT_TRUE(m(1, 1, 4, 0).derivative(2).is_zero());
    EXPECT_EQ(curve_sq().derivative(1), m(4, 1, 3, 0) - m(4, 1, 1, 1));
}

TEST(Hessian, Fixtures) {
    EXPECT_EQ(hessian_determinant(twisted_i()), m(2, 3, 0, 1));
    EXPECT_EQ(hessian_determinant(BivarPoly::z1() * BivarPoly::z2()), BivarPoly::constant(-1));
    EXPECT_EQ(hessian_determinant(curve_sq()), m(8, 1, 2, 0) - m(8, 1, 0, 1));
    // z1^3 z2^2: 6*2*z1^4 z2^2 - (6 z1^2 z2)^2
    EXPECT_EQ(hessian_determinant(m(1, 1, 3, 2)), m(-24, 1, 4, 2));
}

TEST(MixedWeight, Fixtures) {
    MixedWeight w = mixed_weight(twisted_i());
    EXPECT_EQ(w.kappa1, rat(1, 4));
    EXPECT_EQ(w.kappa2, rat(1, 2));
    EXPECT_EQ(w.r, 2);
    EXPECT_EQ(w.s, 1);
    EXPECT_EQ(w.m, 4);
    EXPECT_EQ(w.d_h, rat(4, 3));

    MixedWeight a = mixed_weight(m(1, 1, 2, 0) + m(1, 1, 0, 3));
    EXPECT_EQ(a.kappa1, rat(1, 2));
    EXPECT_EQ(a.kappa2, rat(1, 3));
    EXPECT_EQ(a.r, 2);
    EXPECT_EQ(a.s, 3);
    EXPECT_EQ(a.m, 6);
    EXPECT_EQ(a.d_h, rat(6, 5));
}

TEST(MixedWeight, Rejections) {
    auto kind = [](const BivarPoly& p) {
        try {
            mixed_weight(p);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::ConsistencyFailure;
    };
    EXPECT_EQ(kind(m(1, 1, 2, 0) + m(1, 1, 1, 0) + BivarPoly::constant(1)), ErrorKind::NotMixedHomogeneous);
    EXPECT_EQ(kind(m(1, 1, 2, 0) + m(1, 1, 1, 0)), ErrorKind::NotMixedHomogeneous);
    EXPECT_EQ(kind(BivarPoly()), ErrorKind::NotMixedHomogeneous);
    // (2,0) and (3,1) force kappa = (1/2, -1/2)
    EXPECT_EQ(kind(m(1, 1, 2, 0) + m(1, 1, 3, 1)), ErrorKind::NonpositiveWeight);
}

TEST(Evaluate, Fixtures) {
    EXPECT_DOUBLE_EQ((BivarPoly::z1() * BivarPoly::z2()).eval(2.0, 3.0), 6.0);
    EXPECT_EQ(curve_sq().eval(rat(1), rat(1)), 0);
    EXPECT_EQ(twisted_i().eval(rat(1), rat(1)), rat(13, 6));
    EXPECT_NEAR(twisted_i().eval(1.0, 1.0), 13.0 / 6.0, 1e-15);
}

TEST(Format, Canonical) {
    EXPECT_EQ(BivarPoly().format(), "0");
    EXPECT_EQ(m(-2, 1, 2, 1).format(), "-2*z1^2*z2");
    EXPECT_EQ(curve_sq().format(), "z1^4 - 2*z1^2*z2 + z2^2");
}

TEST(DegreeCap, Enforced) {
    EXPECT_THROW(m(1, 1, BivarPoly::kDegreeCap + 1, 0), Error);
    EXPECT_THROW(m(1, 1, 40, 0) * m(1, 1, 40, 0), Error);
}

TEST(Shear, IsAnAutomorphism) {
    std::mt19937 g(3);
    for (int i = 0; i < 20; ++i) {
        BivarPoly p = random_poly(g, 4);
        EXPECT_EQ(p.shear(rat(3, 2)).shear(rat(-3, 2)), p);
        EXPECT_EQ(p.swap_vars().swap_vars(), p);
    }
}

TEST(Univar, SquarefreeDecomposition) {
    UnivarPoly um1 = UnivarPoly::linear_root(1);
    auto d = squarefree_decomposition(um1 * um1);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d[0].first, um1);
    EXPECT_EQ(d[0].second, 2);

    UnivarPoly u2p1({1, 0, 1});
    d = squarefree_decomposition(u2p1);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d[0].second, 1);

    UnivarPoly cubic({0, -1, 0, 1});
    d = squarefree_decomposition(cubic);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d[0].first.degree(), 3);
}

TEST(Univar, SquarefreeProductRecoversInput) {
    std::mt19937 g(21);
    std::uniform_int_distribution<int> c(-4, 4), k(1, 3);
    for (int i = 0; i < 30; ++i) {
        UnivarPoly p = UnivarPoly::constant(1);
        for (int f = 0; f < 3; ++f) {
            UnivarPoly lin = UnivarPoly::linear_root(rat(c(g), 1 + f));
            for (int j = k(g); j > 0; --j) p = p * lin;
        }
        UnivarPoly back = UnivarPoly::constant(1);
        for (auto& [f, mult] : squarefree_decomposition(p))
            for (int j = 0; j < mult; ++j) back = back * f;
        EXPECT_EQ(back.monic(), p.monic());
    }
}

TEST(Univar, RealRoots) {
    auto r = isolate_real_roots(UnivarPoly::linear_root(1));
    ASSERT_EQ(r.size(), 1u);
    EXPECT_TRUE(r[0].exact);
    EXPECT_EQ(r[0].value, 1);

    EXPECT_TRUE(isolate_real_roots(UnivarPoly({1, 0, 1})).empty());

    auto s = isolate_real_roots(UnivarPoly({-2, 0, 1}));
    ASSERT_EQ(s.size(), 2u);
    EXPECT_NEAR(s[0].approx, -1.41421356237, 1e-10);
    EXPECT_NEAR(s[1].approx, 1.41421356237, 1e-10);
    for (const auto& x : s) {
        EXPECT_FALSE(x.exact);
        EXPECT_LE(Rational(x.hi - x.lo), rat(1, 1000000000000L));
    }
    EXPECT_EQ(sturm_count(UnivarPoly({-2, 0, 1}), -2, 2), 2);
}

TEST(Univar, RootsOfAProductOfRationals) {
    // (u - 1/3)(u + 5/2)(u - 7)
    UnivarPoly p = UnivarPoly::linear_root(rat(1, 3)) * UnivarPoly::linear_root(rat(-5, 2)) *
                   UnivarPoly::linear_root(7);
    auto r = isolate_real_roots(p);
    ASSERT_EQ(r.size(), 3u);
    EXPECT_EQ(r[0].value, rat(-5, 2));
    EXPECT_EQ(r[1].value, rat(1, 3));
    EXPECT_EQ(r[2].value, 7);
}
