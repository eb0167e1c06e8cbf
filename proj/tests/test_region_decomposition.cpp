#include "rsharp/decomposition.hpp"
#include "rsharp/expr_parser.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace rsharp;

namespace {

SurfaceInvariants C(const char* s) { return classify(parse_polynomial(s)); }

}  // namespace

TEST(Membership, CurveRegionFixture) {
    SurfaceInvariants inv = C("(z2 - z1^2)^2");
    Decomposition dec = decompose(*inv.omega_factors, rat(1, 16));
    ASSERT_EQ(dec.regions.size(), 2u);
    const RegionSpec& rt = dec.regions[1];
    EXPECT_EQ(rt.kind, RegionKind::Curve);
    EXPECT_TRUE(dec.contains(rt, 0.5, 0.26));   // |0.26 - 0.25| = 0.01 < 0.25/16
    EXPECT_FALSE(dec.contains(rt, 0.5, 0.5));   // 0.25 >= 0.015625
    EXPECT_FALSE(dec.contains(dec.regions[0], 0.5, 0.26));
    EXPECT_TRUE(dec.contains(dec.regions[0], 0.5, 0.5));
}

TEST(Membership, ExtendedDropsTheSquare) {
    SurfaceInvariants inv = C("(z2 - z1^2)^2");
    Decomposition dec = decompose(*inv.omega_factors, rat(1, 16));
    EXPECT_FALSE(dec.contains(dec.regions[1], 1.2, 1.44));
    EXPECT_TRUE(dec.contains(dec.regions[1], 1.2, 1.44, true));
}

TEST(Decompose, HeavyRegionIsFound) {
    SurfaceInvariants n = C("(z2 - z1^2)^3");
    Decomposition dn = decompose(n);
    ASSERT_GE(dn.heavy_index, 1);
    EXPECT_EQ(dn.regions[dn.heavy_index].mult, 3);

    SurfaceInvariants a = C("z1^2 + z2^3");
    Decomposition da = decompose(a);
    ASSERT_GE(da.heavy_index, 1);
    EXPECT_EQ(da.regions[da.heavy_index].kind, RegionKind::AxisZ2);

    SurfaceInvariants d = C("z1*z2");
    Decomposition dd = decompose(d);
    EXPECT_EQ(dd.regions.size(), 1u);
    EXPECT_EQ(dd.heavy_index, -1);
}

TEST(Decompose, EpsTildeIsADyadicAtMostOneSixteenth) {
    for (const char* s : {"(z2 - z1^2)^2", "z1^4 + z1^2*z2 + z2^2", "z1^3*z2^2", "(z2 - z1^2)*(z2 - 2*z1^2)*z1"}) {
        SurfaceInvariants inv = C(s);
        Rational e = decompose(inv).eps_tilde;
        EXPECT_LE(e, rat(1, 16)) << s;
        EXPECT_EQ(e.get_num(), 1);
        EXPECT_EQ(mpz_popcount(e.get_den_mpz_t()), 1u);
    }
}

TEST(Decompose, RegionsCoverAndFactorRegionsAreDisjoint) {
    std::mt19937_64 g(2);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (const char* s : {"(z2 - z1^2)*(z2 - 2*z1^2)*z1^3*z2", "z1^3*z2^2", "z1^4 + z1^2*z2 + 1/6*z2^2",
                          "(z2 - z1)*(z2 + z1)*(z2 - 3*z1)^3"}) {
        SurfaceInvariants inv = C(s);
        Decomposition dec = decompose(inv);
        for (int i = 0; i < 20000; ++i) {
            double z1 = u(g), z2 = u(g);
            int hits = 0;
            for (std::size_t j = 1; j < dec.regions.size(); ++j) hits += dec.contains(dec.regions[j], z1, z2);
            EXPECT_LE(hits, 1) << s << " at " << z1 << "," << z2;
            EXPECT_EQ(dec.contains(dec.regions[0], z1, z2), hits == 0);
            int k = dec.locate(z1, z2);
            EXPECT_TRUE(dec.contains(dec.regions[k], z1, z2));
        }
    }
}

TEST(Decompose, MultiplicitiesComeFromTheHessian) {
    // z1^3 z2^2 has omega = -24 z1^4 z2^2
    Decomposition dec = decompose(C("z1^3*z2^2"));
    int z1 = 0, z2 = 0;
    for (const auto& r : dec.regions) {
        if (r.kind == RegionKind::AxisZ1) z1 = r.mult;
        if (r.kind == RegionKind::AxisZ2) z2 = r.mult;
    }
    EXPECT_EQ(z1, 4);
    EXPECT_EQ(z2, 2);
}
