#include "rsharp/errors.hpp"
#include "rsharp/expr_parser.hpp"
#include "rsharp/numeric/verify.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

using namespace rsharp;
using namespace rsharp::numeric;

namespace {

SurfaceInvariants C(const char* s) { return classify(parse_polynomial(s)); }

double overlap(double a0, double a1, double b0, double b1) { return std::max(0.0, std::min(a1, b1) - std::max(a0, b0)); }

// Deterministic quadrature of the pairing: midpoint in x1, x2 over F and in t1, t2 over the slices
// where x - t can lie in E, with the x3 integral done exactly as an interval overlap.
double pairing_quadrature(const PairingProblem& p, int nx, int nt) {
    const SourceBox& F = p.F;
    const TargetSet& E = p.E;
    const double hx1 = F.x1.width() / nx, hx2 = F.x2.width() / nx;
    double total = 0.0;
    for (int i = 0; i < nx; ++i) {
        const double x1 = F.x1.lo + (i + 0.5) * hx1;
        const double t1lo = std::max(-1.0, x1 - E.y1.hi), t1hi = std::min(1.0, x1 - E.y1.lo);
        if (t1hi <= t1lo) continue;
        const double ht1 = (t1hi - t1lo) / nt;
        for (int j = 0; j < nx; ++j) {
            const double x2 = F.x2.lo + (j + 0.5) * hx2;
            for (int a = 0; a < nt; ++a) {
                const double t1 = t1lo + (a + 0.5) * ht1;
                const double y1 = x1 - t1;
                const double c2 = E.off2 + (E.c2.empty() ? 0.0 : E.c2(y1, 0.0));
                const double t2lo = std::max(-1.0, x2 - c2 - E.h2), t2hi = std::min(1.0, x2 - c2 + E.h2);
                if (t2hi <= t2lo) continue;
                const double ht2 = (t2hi - t2lo) / nt;
                double row = 0.0;
                for (int b = 0; b < nt; ++b) {
                    const double t2 = t2lo + (b + 0.5) * ht2;
                    const double c3 = E.off3 + (E.c3.empty() ? 0.0 : E.c3(y1, x2 - t2)) + p.phi(t1, t2);
                    row += overlap(F.x3.lo, F.x3.hi, c3 - E.h3, c3 + E.h3);
                }
                total += row * ht2 * ht1;
            }
        }
    }
    return total * hx1 * hx2;
}

void expect_matches_quadrature(const char* phi, Condition c, double eps, int nx, int nt) {
    SurfaceInvariants inv = C(phi);
    FamilyInstance fi = build_family(inv, c, eps);
    double want = pairing_quadrature(fi.problem, nx, nt);
    Estimate got = estimate_pairing_parallel(fi.problem, 400000, 77);
    double tol = std::max(3.0 * got.stderr_, 0.02 * want);
    EXPECT_NEAR(got.value, want, tol) << phi << " " << condition_name(c) << " eps=" << eps;
}

class ThreadEnv {
public:
    explicit ThreadEnv(const char* n) {
        const char* old = std::getenv("RSHARP_THREADS");
        had_ = old != nullptr;
        if (had_) old_ = old;
        setenv("RSHARP_THREADS", n, 1);
    }
    ~ThreadEnv() {
        if (had_)
            setenv("RSHARP_THREADS", old_.c_str(), 1);
        else
            unsetenv("RSHARP_THREADS");
    }

private:
    bool had_ = false;
    std::string old_;
};

}  // namespace

TEST(SlopeFit, RecoversExactLine) {
    SlopeFit f = fit_line({1, 2, 3, 4, 5}, {3, 5, 7, 9, 11});
    EXPECT_DOUBLE_EQ(f.slope, 2.0);
    EXPECT_DOUBLE_EQ(f.intercept, 1.0);
    EXPECT_NEAR(f.residual, 0.0, 1e-14);
}

TEST(SlopeFit, PowerLawInLogLog) {
    std::vector<double> x, y;
    for (int k = 3; k <= 8; ++k) {
        x.push_back(std::ldexp(1.0, -k));
        y.push_back(5.0 * std::pow(x.back(), 2.5));
    }
    EXPECT_NEAR(fit_loglog(x, y).slope, 2.5, 1e-12);
}

TEST(SlopeFit, RejectsBadInput) {
    EXPECT_THROW(fit_line({1}, {1}), std::invalid_argument);
    EXPECT_THROW(fit_line({1, 1}, {1, 2}), std::invalid_argument);
    EXPECT_THROW(fit_loglog({1, 2}, {0, 1}), std::invalid_argument);
}

TEST(Pairing, FullOverlapIsExact) {
    // Every (x, t) lands in E: the pairing is |F| * |[-1,1]^2| = 8 * 4.
    PairingProblem p;
    p.phi = NumPoly(parse_polynomial("z1*z2"));
    p.E = TargetSet::box({-3, 3}, {-3, 3}, {-3, 3});
    p.F = {{-1, 1}, {-1, 1}, {-1, 1}};
    p.proposal = Proposal::uniform({-1, 1}, {-1, 1});
    Estimate e = estimate_pairing_serial(p, 100000, 3);
    EXPECT_DOUBLE_EQ(e.value, 32.0);
    EXPECT_DOUBLE_EQ(e.stderr_, 0.0);
}

TEST(Pairing, DisjointSetsGiveZero) {
    PairingProblem p;
    p.phi = NumPoly(parse_polynomial("z1*z2"));
    p.E = TargetSet::box({10, 11}, {-1, 1}, {-1, 1});
    p.F = {{-1, 1}, {-1, 1}, {-1, 1}};
    p.proposal = Proposal::uniform({-1, 1}, {-1, 1});
    EXPECT_EQ(estimate_pairing_parallel(p, 50000, 3).value, 0.0);
}

TEST(Pairing, HalfSlabAgainstClosedForm) {
    // phi = z1^2, F3 = [0, 1], E3 = [-1/2, 1/2]: the x3 overlap is t^2 + 1/2 for t^2 <= 1/2 and 3/2 - t^2 beyond.
    PairingProblem p;
    p.phi = NumPoly(parse_polynomial("z1^2"));
    p.E = TargetSet::box({-3, 3}, {-3, 3}, {-0.5, 0.5});
    p.F = {{-1, 1}, {-1, 1}, {0, 1}};
    p.proposal = Proposal::uniform({-1, 1}, {-1, 1});
    const double r = 1.0 / std::sqrt(2.0);
    const double I = 2.0 * ((r * r * r / 3 + r / 2) + (1.5 * (1 - r) - (1 - r * r * r) / 3));
    const double want = 4.0 * 2.0 * I;  // x1, x2 area times the t2 length
    Estimate e = estimate_pairing_parallel(p, 400000, 5);
    EXPECT_NEAR(e.value, want, 4.0 * e.stderr_ + 1e-9);
    EXPECT_NEAR(pairing_quadrature(p, 4, 400), want, 1e-4);
}

TEST(Pairing, QuadratureOracleBoxFamilies) {
    for (double eps : {0.125, 1.0 / 64}) {
        expect_matches_quadrature("(z2 - z1^2)^2", Condition::CaseN1OverN, eps, 2, 1200);
        expect_matches_quadrature("(z2 - z1^2)^2", Condition::ScalingLine, eps, 2, 600);
        expect_matches_quadrature("z1^3*z2^2", Condition::CaseNu, eps, 2, 600);
        expect_matches_quadrature("z1^2 + z2^3", Condition::QGeP, eps, 2, 200);
    }
}

TEST(Pairing, QuadratureOracleSlabFamilies) {
    for (double eps : {0.125, 1.0 / 64}) {
        expect_matches_quadrature("z1^2 + z2^3", Condition::CaseASlope, eps, 6, 200);
        expect_matches_quadrature("(z2 - z1^2)^2", Condition::CaseNSlope, eps, 6, 200);
        expect_matches_quadrature("(z2 - z1^2)^3", Condition::CaseNSlope, eps, 6, 200);
        expect_matches_quadrature("z1^4 + z1^2*z2 + 1/6*z2^2", Condition::QLe3P, eps, 6, 120);
    }
}

TEST(Pairing, SerialAndParallelAreBitIdentical) {
    ThreadEnv four("4");
    SurfaceInvariants inv = C("(z2 - z1^2)^2");
    for (Condition c : {Condition::CaseN1OverN, Condition::CaseNSlope, Condition::QLe3P}) {
        FamilyInstance fi = build_family(inv, c, 1.0 / 32);
        Estimate a = estimate_pairing_serial(fi.problem, 300000, 11);
        Estimate b = estimate_pairing_parallel(fi.problem, 300000, 11);
        EXPECT_EQ(a.value, b.value);
        EXPECT_EQ(a.stderr_, b.stderr_);
    }
}

TEST(Pairing, SeedsMatter) {
    FamilyInstance fi = build_family(C("(z2 - z1^2)^2"), Condition::CaseN1OverN, 1.0 / 32);
    Estimate a = estimate_pairing(fi.problem, 100000, 1);
    Estimate b = estimate_pairing(fi.problem, 100000, 1);
    Estimate c = estimate_pairing(fi.problem, 100000, 2);
    EXPECT_EQ(a.value, b.value);
    EXPECT_NE(a.value, c.value);
}

TEST(Families, VolumeExponents) {
    for (const char* phi : {"(z2 - z1^2)^2", "z1^2 + z2^3", "z1^3*z2^2", "(z2 - z1^2)^3"}) {
        SurfaceInvariants inv = C(phi);
        for (Condition c : all_conditions()) {
            if (!condition_applicable(inv, c)) continue;
            FamilyInstance a = build_family(inv, c, 1.0 / 16), b = build_family(inv, c, 1.0 / 32);
            EXPECT_NEAR(std::log2(a.problem.E.volume() / b.problem.E.volume()), a.e_exponent, 1e-9)
                << phi << " " << condition_name(c);
            EXPECT_NEAR(std::log2(a.problem.F.volume() / b.problem.F.volume()), a.f_exponent, 1e-9)
                << phi << " " << condition_name(c);
        }
    }
}

TEST(Families, Applicability) {
    EXPECT_FALSE(condition_applicable(C("z1*z2"), Condition::CaseN1OverN));
    EXPECT_TRUE(condition_applicable(C("(z2 - z1^2)^2"), Condition::CaseNSlope));
    EXPECT_TRUE(condition_applicable(C("z1^2 + z2^3"), Condition::CaseASlope));
    EXPECT_TRUE(condition_applicable(C("z1^3*z2^2"), Condition::CaseNu));
    try {
        build_family(C("z1*z2"), Condition::CaseN1OverN, 0.1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InapplicableCondition);
    }
    try {
        build_family(C("z1*z2"), Condition::QGeP, 1.5);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DegenerateBox);
    }
}

TEST(Families, NamesRoundTrip) {
    for (Condition c : all_conditions()) EXPECT_EQ(parse_condition(condition_name(c)), c);
    EXPECT_FALSE(parse_condition("bogus"));
}

TEST(Necessity, SlopeOnAFixture) {
    VerifyOptions opt;
    opt.samples = 200000;
    VerificationReport r = necessity_slope_test(C("(z2 - z1^2)^2"), Condition::CaseN1OverN, opt);
    ASSERT_TRUE(r.fit);
    EXPECT_EQ(r.verdict, "PASS");
    EXPECT_NEAR(r.fit->slope, 3.0, 0.1);
    EXPECT_EQ(r.estimates.size(), 6u);
}

TEST(Necessity, NeedsFiveGridPoints) {
    VerifyOptions opt;
    opt.grid = {0.1, 0.05};
    EXPECT_THROW(necessity_slope_test(C("z1*z2"), Condition::QGeP, opt), Error);
}

TEST(Scaling, ResidualVanishesOnFixtures) {
    for (const char* phi : {"(z2 - z1^2)^2", "z1^2 + z2^3", "z1^4 + z1^2*z2 + 1/6*z2^2", "z1*z2"}) {
        SurfaceInvariants inv = C(phi);
        for (double s : {0.5, 2.0, 4.0}) {
            ScalingResult r = scaling_identity_serial(inv, s, 256);
            EXPECT_LT(r.max_residual, 1e-6) << phi << " sigma=" << s;
            double mass = 0.0;
            for (double v : r.lhs) mass += v;
            EXPECT_GT(mass, 0.0);
        }
    }
}

TEST(Scaling, UnscaledSideMatchesDirectCount) {
    // At sigma = 1 both sides are the same midpoint sum; compare against an independent loop.
    SurfaceInvariants inv = C("(z2 - z1^2)^2");
    ScalingResult r = scaling_identity_serial(inv, 1.0, 64);
    const double h = 2.0 / 64;
    double x1 = -0.3711, x2 = -0.3711, x3 = -0.2113, count = 0;
    for (int i = 0; i < 64; ++i)
        for (int j = 0; j < 64; ++j) {
            double t1 = -1 + (i + 0.5) * h, t2 = -1 + (j + 0.5) * h;
            double p = std::pow(t2 - t1 * t1, 2);
            count += std::fabs(x1 - t1) <= 2 && std::fabs(x2 - t2) <= 2 && std::fabs(x3 - p) <= 2;
        }
    EXPECT_DOUBLE_EQ(r.lhs[0], count * h * h);
    EXPECT_DOUBLE_EQ(r.rhs[0], r.lhs[0]);
}

TEST(Scaling, SerialAndParallelAgree) {
    ThreadEnv four("4");
    SurfaceInvariants inv = C("z1^2 + z2^3");
    ScalingResult a = scaling_identity_serial(inv, 2.0, 128), b = scaling_identity_parallel(inv, 2.0, 128);
    EXPECT_EQ(a.lhs, b.lhs);
    EXPECT_EQ(a.rhs, b.rhs);
}

TEST(Measure, RegionsPartitionTheSquare) {
    // omega = 12 z2, so |{|omega| <= L} cap [-1,1]^2| = L/3; the regions must add up to it.
    SurfaceInvariants inv = C("z1^2 + z2^3");
    Decomposition dec = decompose(inv);
    ASSERT_GE(dec.regions.size(), 2u);
    for (double L : {6.0, 0.75}) {
        double sum = 0.0, var = 0.0;
        for (const auto& reg : dec.regions) {
            MeasureProblem mp;
            mp.omega = NumPoly(inv.omega);
            mp.decomposition = &dec;
            mp.region = reg.index;
            mp.lo = 0.0;
            mp.hi = L;
            mp.proposal = Proposal::uniform({-1, 1}, {-1, 1});
            Estimate e = estimate_measure_parallel(mp, 400000, 9);
            sum += e.value;
            var += e.stderr_ * e.stderr_;
        }
        EXPECT_NEAR(sum, L / 3.0, 4.0 * std::sqrt(var) + 1e-12) << L;
    }
}

TEST(Measure, SlopeOnAFixture) {
    SurfaceInvariants inv = C("(z2 - z1^2)^2");
    Decomposition dec = decompose(inv);
    VerifyOptions opt;
    opt.samples = 100000;
    for (const auto& reg : dec.regions) {
        VerificationReport r = measure_slope_test(inv, dec, reg.index, opt);
        EXPECT_EQ(r.verdict, "PASS") << reg.label << " " << (r.fit ? r.fit->slope : 0.0);
    }
}

TEST(Measure, Inapplicable) {
    // z1^2 z2^2: the z2-axis factor of omega has multiplicity d_omega = 2.
    SurfaceInvariants inv = C("z1^2*z2^2");
    Decomposition dec = decompose(inv);
    int axis = -1;
    for (const auto& r : dec.regions)
        if (r.kind == RegionKind::AxisZ2) axis = r.index;
    ASSERT_GE(axis, 0);
    EXPECT_THROW(measure_slope_test(inv, dec, axis, {}), Error);

    SurfaceInvariants flat = C("z1*z2");
    Decomposition d2 = decompose(flat);
    EXPECT_EQ(measure_slope_test(flat, d2, 0, {}).verdict, "SKIP");
}
