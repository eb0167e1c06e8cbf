#include "rsharp/errors.hpp"
#include "rsharp/expr_parser.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace rsharp;

namespace {

ErrorKind kind_of(const std::string& s) {
    try {
        parse_polynomial(s);
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "parsed: " << s;
    return ErrorKind::ConsistencyFailure;
}

std::size_t offset_of(const std::string& s) {
    try {
        parse_polynomial(s);
    } catch (const ParseError& e) {
        return e.offset();
    }
    return std::string::npos;
}

}  // namespace

TEST(Parse, Fixtures) {
    BivarPoly want = BivarPoly::monomial(1, 0, 2) - BivarPoly::monomial(2, 2, 1) + BivarPoly::monomial(1, 4, 0);
    EXPECT_EQ(parse_polynomial("(z2 - z1^2)^2"), want);
    EXPECT_EQ(parse_polynomial("z1*z2"), BivarPoly::monomial(1, 1, 1));
    EXPECT_EQ(parse_polynomial("z1^4 + z1^2*z2 + 1/6*z2^2"),
              BivarPoly::monomial(1, 4, 0) + BivarPoly::monomial(1, 2, 1) + BivarPoly::monomial(rat(1, 6), 0, 2));
}

TEST(Parse, Aliases) {
    EXPECT_EQ(parse_polynomial("x*y"), parse_polynomial("z1*z2"));
    EXPECT_EQ(parse_polynomial("t1^2 - t2"), parse_polynomial("z1^2 - z2"));
}

TEST(Parse, PowerIsRightAssociativeAndTightest) {
    EXPECT_EQ(parse_polynomial("z1^2^3"), BivarPoly::monomial(1, 8, 0));
    EXPECT_EQ(parse_polynomial("-z1^2"), BivarPoly::monomial(-1, 2, 0));
    EXPECT_EQ(parse_polynomial("2*z1^2"), BivarPoly::monomial(2, 2, 0));
    EXPECT_EQ(parse_polynomial("(2*z1)^2"), BivarPoly::monomial(4, 2, 0));
    EXPECT_EQ(parse_polynomial("z1^(1+1)"), BivarPoly::monomial(1, 2, 0));
}

TEST(Parse, RationalLiterals) {
    EXPECT_EQ(parse_polynomial("9/40"), BivarPoly::constant(rat(9, 40)));
    EXPECT_EQ(parse_polynomial("6/4*z1"), BivarPoly::monomial(rat(3, 2), 1, 0));
    EXPECT_EQ(parse_polynomial("123456789012345678901234567890*z1").coeff(1, 0),
              Rational("123456789012345678901234567890"));
}

TEST(Parse, LeadingZerosAreDecimal) {
    EXPECT_EQ(parse_polynomial("010*z1^08"), BivarPoly::monomial(10, 8, 0));
    EXPECT_EQ(parse_polynomial("09/012"), BivarPoly::constant(rat(3, 4)));
}

TEST(Parse, Errors) {
    EXPECT_EQ(kind_of(""), ErrorKind::SyntaxError);
    EXPECT_EQ(kind_of("z1 +"), ErrorKind::SyntaxError);
    EXPECT_EQ(kind_of("2 z1"), ErrorKind::SyntaxError);
    EXPECT_EQ(kind_of("(z1"), ErrorKind::SyntaxError);
    EXPECT_EQ(kind_of("z1)"), ErrorKind::SyntaxError);
    EXPECT_EQ(kind_of("z3"), ErrorKind::UnknownVariable);
    EXPECT_EQ(kind_of("z1^-1"), ErrorKind::NegativeExponent);
    EXPECT_EQ(kind_of("z1^(1/2)"), ErrorKind::SyntaxError);
    EXPECT_EQ(kind_of("z1^z2"), ErrorKind::SyntaxError);
    EXPECT_EQ(kind_of("1/0"), ErrorKind::SyntaxError);
    EXPECT_EQ(kind_of("z1 & z2"), ErrorKind::SyntaxError);
    EXPECT_EQ(kind_of("z1^65"), ErrorKind::DegreeCapExceeded);
    EXPECT_EQ(kind_of("z1^99999"), ErrorKind::DegreeCapExceeded);
    EXPECT_EQ(kind_of("(z1+z2)^40*(z1+z2)^40"), ErrorKind::DegreeCapExceeded);
}

TEST(Parse, ErrorOffsets) {
    EXPECT_EQ(offset_of("z1 + z3"), 5u);
    EXPECT_EQ(offset_of("z1 + * z2"), 5u);
    EXPECT_EQ(offset_of("(z1 + z2"), 8u);
}

TEST(Parse, DeepNestingIsRejectedNotOverflowed) {
    std::string deep(5000, '(');
    deep += "z1" + std::string(5000, ')');
    EXPECT_EQ(kind_of(deep), ErrorKind::SyntaxError);
    std::string minus(5000, '-');
    EXPECT_EQ(kind_of(minus + "z1"), ErrorKind::SyntaxError);
}

TEST(Parse, FormatRoundTrip) {
    std::mt19937 g(17);
    std::uniform_int_distribution<int> e(0, 6), c(-9, 9), d(1, 7);
    for (int i = 0; i < 200; ++i) {
        BivarPoly p;
        for (int k = 0; k < 4; ++k) p += BivarPoly::monomial(rat(c(g), d(g)), e(g), e(g));
        EXPECT_EQ(parse_polynomial(p.format()), p) << p.format();
    }
}
