#include "rsharp/bivar_poly.hpp"
#include "rsharp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rsharp {

Rational rpow(const Rational& a, unsigned e) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), a.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), a.get_den_mpz_t(), e);
    out.canonicalize();
    return out;
}

Integer igcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

static void check_cap(int a1, int a2) {
    if (a1 > BivarPoly::kDegreeCap || a2 > BivarPoly::kDegreeCap)
        throw Error(ErrorKind::DegreeCapExceeded,
                    "degree exceeds cap of " + std::to_string(BivarPoly::kDegreeCap) + " per variable");
}

void BivarPoly::add_term(int a1, int a2, const Rational& c) {
    if (c == 0) return;
    check_cap(a1, a2);
    auto [it, inserted] = terms_.try_emplace({a1, a2}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BivarPoly BivarPoly::constant(const Rational& c) { return monomial(c, 0, 0); }

BivarPoly BivarPoly::monomial(const Rational& c, int a1, int a2) {
    BivarPoly p;
    p.add_term(a1, a2, c);
    return p;
}

Rational BivarPoly::coeff(int a1, int a2) const {
    auto it = terms_.find({a1, a2});
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Exponent> BivarPoly::support() const {
    std::vector<Exponent> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back(e);
    return out;
}

int BivarPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, var == 1 ? e.first : e.second);
    return d;
}

int BivarPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
}

bool BivarPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
}

BivarPoly& BivarPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return out;
}

BivarPoly BivarPoly::pow(unsigned e) const {
    if (e == 0) return constant(1);
    if (!is_constant()) {
        int d1 = degree_in(1), d2 = degree_in(2);
        if (static_cast<long>(d1) * e > kDegreeCap || static_cast<long>(d2) * e > kDegreeCap)
            check_cap(static_cast<int>(std::min<long>(static_cast<long>(d1) * e, kDegreeCap + 1)),
                      static_cast<int>(std::min<long>(static_cast<long>(d2) * e, kDegreeCap + 1)));
    }
    BivarPoly result = constant(1), base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

BivarPoly BivarPoly::derivative(int var) const {
    BivarPoly out;
    for (const auto& [e, c] : terms_) {
        int k = var == 1 ? e.first : e.second;
        if (k == 0) continue;
        if (var == 1)
            out.add_term(e.first - 1, e.second, c * k);
        else
            out.add_term(e.first, e.second - 1, c * k);
    }
    return out;
}

BivarPoly BivarPoly::swap_vars() const {
    BivarPoly out;
    for (const auto& [e, c] : terms_) out.add_term(e.second, e.first, c);
    return out;
}

BivarPoly BivarPoly::shear(const Rational& lambda) const {
    // z2 -> z2 + lambda*z1
    BivarPoly out;
    BivarPoly lin = z2() + monomial(lambda, 1, 0);
    for (const auto& [e, c] : terms_) {
        BivarPoly t = lin.pow(e.second);
        t = t * monomial(c, e.first, 0);
        out += t;
    }
    return out;
}

Rational BivarPoly::eval(const Rational& x, const Rational& y) const {
    Rational s = 0;
    for (const auto& [e, c] : terms_) s += c * rpow(x, e.first) * rpow(y, e.second);
    return s;
}

double BivarPoly::eval(double x, double y) const {
    double s = 0.0;
    for (const auto& [e, c] : terms_) s += c.get_d() * std::pow(x, e.first) * std::pow(y, e.second);
    return s;
}

std::string BivarPoly::format() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponent, Rational>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
        int dl = l.first.first + l.first.second, dr = r.first.first + r.first.second;
        if (dl != dr) return dl > dr;
        return l.first.first > r.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ordered) {
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        bool has_var = e.first > 0 || e.second > 0;
        std::string factors;
        auto add_var = [&](const char* name, int k) {
            if (k == 0) return;
            if (!factors.empty()) factors += "*";
            factors += name;
            if (k > 1) factors += "^" + std::to_string(k);
        };
        add_var("z1", e.first);
        add_var("z2", e.second);
        if (!has_var)
            os << mag.get_str();
        else if (mag == 1)
            os << factors;
        else
            os << mag.get_str() << "*" << factors;
    }
    return os.str();
}

BivarPoly hessian_determinant(const BivarPoly& p) {
    BivarPoly p1 = p.derivative(1), p2 = p.derivative(2);
    BivarPoly p11 = p1.derivative(1), p22 = p2.derivative(2), p12 = p1.derivative(2);
    return p11 * p22 - p12 * p12;
}

MixedWeight mixed_weight(const BivarPoly& p) {
    if (p.is_zero()) throw Error(ErrorKind::NotMixedHomogeneous, "zero polynomial has no mixed weight");
    auto supp = p.support();
    Rational k1, k2;
    if (supp.size() == 1) {
        auto [a, b] = supp[0];
        if (a + b == 0) throw Error(ErrorKind::NotMixedHomogeneous, "constant polynomial has no mixed weight");
        k1 = k2 = rat(1, a + b);
    } else {
        auto [a0, b0] = supp[0];
        bool solved = false;
        for (std::size_t i = 1; i < supp.size() && !solved; ++i) {
            auto [a1, b1] = supp[i];
            long det = static_cast<long>(a0) * b1 - static_cast<long>(a1) * b0;
            if (det == 0) continue;
            k1 = rat(b1 - b0, det);
            k2 = rat(a0 - a1, det);
            solved = true;
        }
        if (!solved) throw Error(ErrorKind::NotMixedHomogeneous, "support lies on a ray through the origin");
        for (auto [a, b] : supp)
            if (k1 * a + k2 * b != 1)
                throw Error(ErrorKind::NotMixedHomogeneous, "support is not contained in a single weighted line");
    }
    if (k1 <= 0 || k2 <= 0) throw Error(ErrorKind::NonpositiveWeight, "mixed weight has a nonpositive component");
    Rational ratio = k1 / k2;  // = s/r
    MixedWeight w;
    w.kappa1 = k1;
    w.kappa2 = k2;
    w.s = ratio.get_num().get_si();
    w.r = ratio.get_den().get_si();
    Rational m = Rational(w.s) / k1;
    if (!is_integer(m)) consistency_failure("mixed weight scale is not integral");
    w.m = m.get_num().get_si();
    w.d_h = 1 / (k1 + k2);
    return w;
}

std::optional<long> weighted_degree(const BivarPoly& p, long r, long s) {
    std::optional<long> out;
    for (const auto& [e, c] : p.terms()) {
        long v = s * e.first + r * e.second;
        if (out && *out != v) return std::nullopt;
        out = v;
    }
    return out;
}

}  // namespace rsharp
