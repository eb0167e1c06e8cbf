#pragma once

#include "rsharp/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace rsharp {

// Dense univariate polynomial over Q, coefficients low degree first.
class UnivarPoly {
public:
    UnivarPoly() = default;
    explicit UnivarPoly(std::vector<Rational> coeffs);
    static UnivarPoly constant(const Rational& c) { return UnivarPoly({c}); }
    static UnivarPoly linear_root(const Rational& root) { return UnivarPoly({-root, 1}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& lead() const { return c_.back(); }
    Rational coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }

    UnivarPoly operator-() const;
    friend UnivarPoly operator+(const UnivarPoly& a, const UnivarPoly& b);
    friend UnivarPoly operator-(const UnivarPoly& a, const UnivarPoly& b);
    friend UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b);
    friend UnivarPoly operator*(const UnivarPoly& a, const Rational& k);
    friend bool operator==(const UnivarPoly& a, const UnivarPoly& b) { return a.c_ == b.c_; }

    // Euclidean division; b must be nonzero.
    static std::pair<UnivarPoly, UnivarPoly> divmod(const UnivarPoly& a, const UnivarPoly& b);
    UnivarPoly derivative() const;
    UnivarPoly monic() const;
    // Positive multiple with coprime integer coefficients.
    UnivarPoly primitive() const;

    Rational eval(const Rational& x) const;
    double eval(double x) const;
    int sign_at(const Rational& x) const;

    std::string format(const char* var = "u") const;

private:
    void trim();
    std::vector<Rational> c_;
};

UnivarPoly gcd(UnivarPoly a, UnivarPoly b);  // monic, gcd(0,0) = 0

// Yun: pairs (squarefree factor, multiplicity), multiplicities increasing, factors nonconstant.
std::vector<std::pair<UnivarPoly, int>> squarefree_decomposition(const UnivarPoly& p);

// A real algebraic number given by a squarefree defining polynomial and an isolating interval.
struct RealRoot {
    bool exact = false;
    Rational value;   // valid when exact
    Rational lo, hi;  // lo < root < hi, no other root of `defining` in [lo, hi]
    double approx = 0.0;
    UnivarPoly defining;
};

// Isolates every real root of a squarefree polynomial, refined to width <= tol.
std::vector<RealRoot> isolate_real_roots(const UnivarPoly& squarefree, const Rational& tol = rat(1, 1000000000000L));

// Number of distinct roots of a squarefree q in the open interval (a, b); q(a), q(b) nonzero.
int sturm_count(const UnivarPoly& q, const Rational& a, const Rational& b);

bool is_root_of(const RealRoot& root, const UnivarPoly& p);
bool same_root(const RealRoot& a, const RealRoot& b);

}  // namespace rsharp
