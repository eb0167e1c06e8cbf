#include "rsharp/newton.hpp"
#include "rsharp/errors.hpp"

#include <algorithm>
#include <map>

namespace rsharp {

namespace {

long cross(const Exponent& o, const Exponent& a, const Exponent& b) {
    return static_cast<long>(a.first - o.first) * (b.second - o.second) -
           static_cast<long>(a.second - o.second) * (b.first - o.first);
}

}  // namespace

std::vector<Exponent> newton_chain(std::vector<Exponent> support) {
    if (support.empty()) return {};
    std::map<int, int> lowest;
    for (auto [a, b] : support) {
        auto [it, ins] = lowest.try_emplace(a, b);
        if (!ins) it->second = std::min(it->second, b);
    }
    std::vector<Exponent> hull;
    for (auto [a, b] : lowest) {
        Exponent p{a, b};
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
        hull.push_back(p);
    }
    std::vector<Exponent> chain{hull.front()};
    for (std::size_t i = 1; i < hull.size() && hull[i].second < chain.back().second; ++i) chain.push_back(hull[i]);
    return chain;
}

Rational newton_distance(const std::vector<Exponent>& support) {
    auto chain = newton_chain(support);
    if (chain.empty()) consistency_failure("Newton distance of an empty support");
    const auto& f = chain.front();
    if (f.first >= f.second) return f.first;
    const auto& l = chain.back();
    if (l.second >= l.first) return l.second;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        long g0 = chain[i].second - chain[i].first;
        long g1 = chain[i + 1].second - chain[i + 1].first;
        if (g0 >= 0 && g1 <= 0) {
            Rational t(g0, g0 - g1);
            t.canonicalize();
            return chain[i].first + t * (chain[i + 1].first - chain[i].first);
        }
    }
    consistency_failure("bisectrix misses the Newton boundary");
}

std::optional<Rational> reduced_distance(const std::vector<Exponent>& support, int var) {
    std::vector<Exponent> kept;
    for (const auto& e : support)
        if ((var == 1 ? e.first : e.second) != 0) kept.push_back(e);
    if (kept.empty()) return std::nullopt;
    return newton_distance(kept);
}

NewtonData newton_data(const BivarPoly& phi) {
    auto supp = phi.support();
    NewtonData nd;
    nd.chain = newton_chain(supp);
    nd.d = newton_distance(supp);
    nd.d_R1 = reduced_distance(supp, 1);
    nd.d_R2 = reduced_distance(supp, 2);
    if (!nd.d_R1 && !nd.d_R2) throw Error(ErrorKind::NotMixedHomogeneous, "reduced Newton polyhedra are empty");
    if (nd.d_R1 && (!nd.d_R2 || *nd.d_R1 >= *nd.d_R2)) {
        nd.d_R = *nd.d_R1;
        nd.reduced_select = 1;
    } else {
        nd.d_R = *nd.d_R2;
        nd.reduced_select = 2;
    }
    return nd;
}

}  // namespace rsharp
