#pragma once

#include "rsharp/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rsharp {

using Exponent = std::pair<int, int>;  // (alpha1, alpha2)

// Sparse polynomial in z1, z2 with exact rational coefficients.
class BivarPoly {
public:
    static constexpr int kDegreeCap = 64;

    BivarPoly() = default;
    static BivarPoly constant(const Rational& c);
    static BivarPoly monomial(const Rational& c, int a1, int a2);
    static BivarPoly z1() { return monomial(1, 1, 0); }
    static BivarPoly z2() { return monomial(1, 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    Rational coeff(int a1, int a2) const;
    std::vector<Exponent> support() const;

    int degree_in(int var) const;  // var is 1 or 2; -1 for the zero polynomial
    int total_degree() const;
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }

    BivarPoly operator-() const;
    BivarPoly& operator+=(const BivarPoly& o);
    BivarPoly& operator-=(const BivarPoly& o);
    BivarPoly& operator*=(const Rational& c);
    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator*(BivarPoly a, const Rational& c) { return a *= c; }
    friend BivarPoly operator*(const Rational& c, BivarPoly a) { return a *= c; }
    friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }

    BivarPoly pow(unsigned e) const;
    BivarPoly derivative(int var) const;
    BivarPoly swap_vars() const;
    // phi(z1, z2 + lambda*z1)
    BivarPoly shear(const Rational& lambda) const;

    Rational eval(const Rational& x, const Rational& y) const;
    double eval(double x, double y) const;

    // Graded-lex, highest total degree first: "z1^4 - 2*z1^2*z2 + z2^2".
    std::string format() const;

private:
    void add_term(int a1, int a2, const Rational& c);
    std::map<Exponent, Rational> terms_;
};

// omega = phi_11 * phi_22 - phi_12^2
BivarPoly hessian_determinant(const BivarPoly& p);

struct MixedWeight {
    Rational kappa1;
    Rational kappa2;
    long r = 1;  // kappa1 = s/m, kappa2 = r/m, gcd(r, s) = 1
    long s = 1;
    long m = 0;
    Rational d_h;  // 1/(kappa1+kappa2)
};

// Throws NotMixedHomogeneous / NonpositiveWeight. A single monomial gets kappa1 = kappa2.
MixedWeight mixed_weight(const BivarPoly& p);

// Common value of s*a1 + r*a2 over the support, if any.
std::optional<long> weighted_degree(const BivarPoly& p, long r, long s);

}  // namespace rsharp
