#include "rsharp/univar_poly.hpp"
#include "rsharp/errors.hpp"

#include <algorithm>
#include <sstream>

namespace rsharp {

UnivarPoly::UnivarPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UnivarPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UnivarPoly UnivarPoly::operator-() const {
    UnivarPoly p = *this;
    for (auto& c : p.c_) c = -c;
    return p;
}

UnivarPoly operator+(const UnivarPoly& a, const UnivarPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return UnivarPoly(std::move(c));
}

UnivarPoly operator-(const UnivarPoly& a, const UnivarPoly& b) { return a + (-b); }

UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UnivarPoly(std::move(c));
}

UnivarPoly operator*(const UnivarPoly& a, const Rational& k) {
    std::vector<Rational> c = a.c_;
    for (auto& v : c) v *= k;
    return UnivarPoly(std::move(c));
}

std::pair<UnivarPoly, UnivarPoly> UnivarPoly::divmod(const UnivarPoly& a, const UnivarPoly& b) {
    if (b.is_zero()) consistency_failure("polynomial division by zero");
    std::vector<Rational> rem = a.c_;
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) return {UnivarPoly{}, a};
    std::vector<Rational> q(dq + 1);
    for (int k = dq; k >= 0; --k) {
        Rational f = rem[k + db] / b.lead();
        q[k] = f;
        if (f == 0) continue;
        for (int j = 0; j <= db; ++j) rem[k + j] -= f * b.c_[j];
    }
    rem.resize(db);
    return {UnivarPoly(std::move(q)), UnivarPoly(std::move(rem))};
}

UnivarPoly UnivarPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<long>(i);
    return UnivarPoly(std::move(c));
}

UnivarPoly UnivarPoly::monic() const {
    if (is_zero()) return {};
    return *this * (1 / lead());
}

UnivarPoly UnivarPoly::primitive() const {
    if (is_zero()) return {};
    Integer l = 1;
    for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    Integer g = 0;
    for (const auto& c : c_) {
        Integer v = c.get_num() * (l / c.get_den());
        g = igcd(g, v);
    }
    Rational k(l, g);
    k.canonicalize();
    return *this * k;
}

Rational UnivarPoly::eval(const Rational& x) const {
    Rational s = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + *it;
    return s;
}

double UnivarPoly::eval(double x) const {
    double s = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + it->get_d();
    return s;
}

int UnivarPoly::sign_at(const Rational& x) const { return sgn(eval(x)); }

std::string UnivarPoly::format(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[i];
        if (c == 0) continue;
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

UnivarPoly gcd(UnivarPoly a, UnivarPoly b) {
    while (!b.is_zero()) {
        auto r = UnivarPoly::divmod(a, b).second;
        a = std::move(b);
        b = r.primitive();
    }
    return a.monic();
}

std::vector<std::pair<UnivarPoly, int>> squarefree_decomposition(const UnivarPoly& p) {
    std::vector<std::pair<UnivarPoly, int>> out;
    if (p.degree() < 1) return out;
    UnivarPoly f = p.monic();
    UnivarPoly fp = f.derivative();
    UnivarPoly a = gcd(f, fp);
    UnivarPoly b = UnivarPoly::divmod(f, a).first;
    UnivarPoly c = UnivarPoly::divmod(fp, a).first;
    UnivarPoly d = c - b.derivative();
    for (int i = 1; b.degree() >= 1; ++i) {
        UnivarPoly ai = gcd(b, d);
        UnivarPoly bn = UnivarPoly::divmod(b, ai).first;
        UnivarPoly cn = UnivarPoly::divmod(d, ai).first;
        if (ai.degree() >= 1) out.emplace_back(ai, i);
        d = cn - bn.derivative();
        b = bn;
    }
    return out;
}

namespace {

class SturmChain {
public:
    explicit SturmChain(const UnivarPoly& q) {
        seq_.push_back(q.primitive());
        if (q.degree() < 1) return;
        seq_.push_back(q.derivative().primitive());
        while (true) {
            auto r = UnivarPoly::divmod(seq_[seq_.size() - 2], seq_.back()).second;
            if (r.is_zero()) break;
            seq_.push_back((-r).primitive());
        }
    }
    int variations(const Rational& x) const {
        int count = 0, prev = 0;
        for (const auto& p : seq_) {
            int s = p.sign_at(x);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    }
    int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

private:
    std::vector<UnivarPoly> seq_;
};

Rational cauchy_bound(const UnivarPoly& q) {
    Rational mx = 0;
    for (int i = 0; i < q.degree(); ++i) mx = std::max<Rational>(mx, abs(q.coeff(i) / q.lead()));
    return 1 + mx;
}

RealRoot exact_root(const Rational& v, const Rational& tol) {
    RealRoot r;
    r.exact = true;
    r.value = v;
    r.lo = v - tol;
    r.hi = v + tol;
    r.approx = v.get_d();
    r.defining = UnivarPoly::linear_root(v);
    return r;
}

}  // namespace

int sturm_count(const UnivarPoly& q, const Rational& a, const Rational& b) {
    if (q.degree() < 1) return 0;
    return SturmChain(q).count(a, b);
}

std::vector<RealRoot> isolate_real_roots(const UnivarPoly& squarefree, const Rational& tol) {
    std::vector<RealRoot> out;
    UnivarPoly q = squarefree.primitive();
    std::vector<std::pair<Rational, Rational>> isolated;
    while (q.degree() >= 1) {
        isolated.clear();
        SturmChain chain(q);
        Rational B = cauchy_bound(q);
        std::vector<std::pair<Rational, Rational>> stack{{-B, B}};
        bool deflated = false;
        while (!stack.empty() && !deflated) {
            auto [lo, hi] = stack.back();
            stack.pop_back();
            int c = chain.count(lo, hi);
            if (c == 0) continue;
            if (c == 1) {
                isolated.emplace_back(lo, hi);
                continue;
            }
            Rational mid = (lo + hi) / 2;
            if (q.eval(mid) == 0) {
                out.push_back(exact_root(mid, tol));
                q = UnivarPoly::divmod(q, UnivarPoly::linear_root(mid)).first.primitive();
                deflated = true;
                break;
            }
            stack.emplace_back(lo, mid);
            stack.emplace_back(mid, hi);
        }
        if (!deflated) break;
    }
    if (q.degree() >= 1) {
        Integer lead = abs(q.lead().get_num());
        Rational grid(1);
        grid /= Rational(lead);
        Rational half = grid / 2;
        Rational width = std::min(tol, half);
        for (auto [lo, hi] : isolated) {
            int slo = q.sign_at(lo);
            bool done = false;
            while (hi - lo > width) {
                Rational mid = (lo + hi) / 2;
                int sm = q.sign_at(mid);
                if (sm == 0) {
                    out.push_back(exact_root(mid, tol));
                    done = true;
                    break;
                }
                if (sm == slo)
                    lo = mid;
                else
                    hi = mid;
            }
            if (done) continue;
            // Rational roots of a primitive integer polynomial lie on the lattice (1/lead)Z.
            Rational k = hi * Rational(lead);
            Integer kf;
            mpz_fdiv_q(kf.get_mpz_t(), k.get_num_mpz_t(), k.get_den_mpz_t());
            Rational cand(kf, lead);
            cand.canonicalize();
            if (cand > lo && cand < hi && q.eval(cand) == 0) {
                out.push_back(exact_root(cand, tol));
                continue;
            }
            RealRoot r;
            r.lo = lo;
            r.hi = hi;
            r.approx = Rational((lo + hi) / 2).get_d();
            r.defining = q;
            out.push_back(std::move(r));
        }
    }
    std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) { return a.approx < b.approx; });
    return out;
}

bool is_root_of(const RealRoot& root, const UnivarPoly& p) {
    if (p.is_zero()) return true;
    if (root.exact) return p.eval(root.value) == 0;
    UnivarPoly g = gcd(root.defining, p);
    if (g.degree() < 1) return false;
    return sturm_count(g, root.lo, root.hi) == 1;
}

bool same_root(const RealRoot& a, const RealRoot& b) {
    if (a.exact && b.exact) return a.value == b.value;
    if (a.exact) return b.lo < a.value && a.value < b.hi && b.defining.eval(a.value) == 0;
    if (b.exact) return same_root(b, a);
    Rational lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
    if (lo >= hi) return false;
    UnivarPoly g = gcd(a.defining, b.defining);
    if (g.degree() < 1) return false;
    return sturm_count(g, lo, hi) == 1;
}

}  // namespace rsharp
