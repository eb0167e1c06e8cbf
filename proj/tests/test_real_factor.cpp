#include "rsharp/errors.hpp"
#include "rsharp/expr_parser.hpp"
#include "rsharp/real_factor.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace rsharp;

namespace {

FactorDecomposition fd_of(const char* s) {
    BivarPoly p = parse_polynomial(s);
    MixedWeight w = mixed_weight(p);
    return factor_decomposition(p, w.r, w.s);
}

}  // namespace

TEST(Associated, Fixtures) {
    auto a = associated_univariate(parse_polynomial("(z2 - z1^2)^2"), 2, 1);
    EXPECT_EQ(a.nu1, 0);
    EXPECT_EQ(a.nu2, 0);
    EXPECT_EQ(a.p, UnivarPoly({1, -2, 1}));

    auto b = associated_univariate(parse_polynomial("z1^4 + z1^2*z2 + 1/6*z2^2"), 2, 1);
    EXPECT_EQ(b.p, UnivarPoly({1, 1, rat(1, 6)}));

    auto c = associated_univariate(parse_polynomial("z1^3*z2"), 1, 1);
    EXPECT_EQ(c.nu1, 3);
    EXPECT_EQ(c.nu2, 1);
    EXPECT_EQ(c.p, UnivarPoly({1}));
}

TEST(Associated, ReconstructsThePolynomial) {
    // phi = z1^nu1 z2^nu2 z1^{rL} p(z2^s / z1^r)
    for (const char* s : {"(z2 - z1^2)^2*z1^3*z2", "z1^5 + z1^3*z2 + 9/40*z1*z2^2", "z1^2 + z2^3", "z1^2*z2^2"}) {
        BivarPoly phi = parse_polynomial(s);
        MixedWeight w = mixed_weight(phi);
        auto a = associated_univariate(phi, w.r, w.s);
        BivarPoly back;
        for (int k = 0; k <= a.p.degree(); ++k)
            back += BivarPoly::monomial(a.p.coeff(k), a.nu1 + static_cast<int>(w.r) * (a.L - k),
                                        a.nu2 + static_cast<int>(w.s) * k);
        EXPECT_EQ(back, phi) << s;
    }
}

TEST(Decomposition, Fixtures) {
    auto a = fd_of("(z2 - z1^2)^2");
    EXPECT_EQ(a.constant, 1);
    ASSERT_EQ(a.real.size(), 1u);
    EXPECT_TRUE(a.real[0].lambda.exact);
    EXPECT_EQ(a.real[0].lambda.value, 1);
    EXPECT_EQ(a.real[0].mult, 2);
    EXPECT_EQ(a.complex_mult_sum, 0);

    // 1 + u + u^2/6 has roots -3 +- sqrt(3)
    auto b = fd_of("z1^4 + z1^2*z2 + 1/6*z2^2");
    ASSERT_EQ(b.real.size(), 2u);
    EXPECT_NEAR(b.real[0].lambda.approx, -3 - std::sqrt(3.0), 1e-12);
    EXPECT_NEAR(b.real[1].lambda.approx, -3 + std::sqrt(3.0), 1e-12);
    EXPECT_EQ(b.real[0].mult, 1);

    auto c = fd_of("z1^2 + z2^3");
    EXPECT_EQ(c.r, 2);
    EXPECT_EQ(c.s, 3);
    ASSERT_EQ(c.real.size(), 1u);
    EXPECT_EQ(c.real[0].lambda.value, -1);
}

TEST(Decomposition, MaxMultiplicity) {
    EXPECT_EQ(max_irreducible_multiplicity(fd_of("(z2 - z1^2)^3")), 3);
    EXPECT_EQ(max_irreducible_multiplicity(fd_of("z1*z2")), 1);
    EXPECT_EQ(max_irreducible_multiplicity(fd_of("z1^2 + z2^2")), 1);  // irreducible over the reals
    EXPECT_EQ(max_irreducible_multiplicity(fd_of("(z1^2 + z2^2)^3*z1")), 3);
    EXPECT_EQ(max_irreducible_multiplicity(fd_of("z1^4*z2")), 4);
}

TEST(Decomposition, MultiplicitiesOfRandomProducts) {
    // Build z1^a z2^b prod (z2 - l_i z1^2)^{k_i} and read the multiplicities back.
    std::mt19937 g(4);
    std::uniform_int_distribution<int> e(0, 3), k(1, 3), l(-6, 6);
    for (int it = 0; it < 40; ++it) {
        int a = e(g), b = e(g);
        BivarPoly phi = BivarPoly::monomial(1, a, b);
        std::map<Rational, int> want;
        for (int f = 0; f < 2; ++f) {
            int num = l(g);
            Rational lam = rat(num == 0 ? 7 : num, 1 + f);
            int kk = k(g);
            want[lam] += kk;
            phi = phi * (BivarPoly::z2() - BivarPoly::monomial(lam, 2, 0)).pow(kk);
        }
        auto fd = factor_decomposition(phi, 2, 1);
        EXPECT_EQ(fd.nu1, a);
        EXPECT_EQ(fd.nu2, b);
        std::map<Rational, int> got;
        for (const auto& c : fd.real) {
            ASSERT_TRUE(c.lambda.exact);
            got[c.lambda.value] = c.mult;
        }
        EXPECT_EQ(got, want) << phi.format();
    }
}

TEST(Adaptation, Fixtures) {
    BivarPoly p = parse_polynomial("(z2 - z1)^3*z1");
    EXPECT_FALSE(is_linearly_adapted(p));
    Adaptation a = linearly_adapt(p);
    ASSERT_TRUE(a.shear);
    EXPECT_EQ(*a.shear, 1);
    EXPECT_EQ(a.adapted, parse_polynomial("z2^3*z1"));
    EXPECT_TRUE(is_linearly_adapted(parse_polynomial("(z2 - z1^2)^2")));
    EXPECT_TRUE(is_linearly_adapted(parse_polynomial("z1^2*z2^2")));
}

TEST(Adaptation, ConjugateLinesNeverNeedAShear) {
    // Conjugate lines share a multiplicity, so neither can exceed half the degree.
    EXPECT_TRUE(is_linearly_adapted(parse_polynomial("(z2^2 - 2*z1^2)^3")));
    EXPECT_TRUE(is_linearly_adapted(parse_polynomial("(z2^2 - 2*z1^2)^2*z1*z2")));
}
