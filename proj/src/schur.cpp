#include "pleth/schur.hpp"

#include "pleth/util.hpp"

namespace pleth {

void SchurExpansion::add(const Partition& mu, long long c) {
    if (c == 0) return;
    auto it = terms.find(mu);
    if (it == terms.end()) {
        terms.emplace(mu, c);
        return;
    }
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms.erase(it);
}

long long SchurExpansion::coeff(const Partition& mu) const {
    auto it = terms.find(mu);
    return it == terms.end() ? 0 : it->second;
}

SchurExpansion schur_unit(const Partition& mu) {
    SchurExpansion f;
    f.add(mu, 1);
    return f;
}

SchurExpansion scaled(const SchurExpansion& f, long long c) {
    SchurExpansion out;
    for (const auto& [mu, a] : f.terms) out.add(mu, checked_mul(a, c));
    return out;
}

SchurExpansion sum(const SchurExpansion& f, const SchurExpansion& g) {
    SchurExpansion out = f;
    for (const auto& [mu, a] : g.terms) out.add(mu, a);
    return out;
}

// All nu >= mu with nu/mu a horizontal n-strip: per row, nu[r] ranges over
// [mu[r], mu[r-1]] (row 0 unbounded), total added cells n.
static void strips(const Partition& mu, int row, int remaining, Partition& cur,
                   SchurExpansion& out, long long c) {
    if (row == static_cast<int>(mu.size()) + 1) {
        if (remaining == 0) {
            Partition nu = cur;
            while (!nu.empty() && nu.back() == 0) nu.pop_back();
            out.add(nu, c);
        }
        return;
    }
    int base = row < static_cast<int>(mu.size()) ? mu[row] : 0;
    int cap = row == 0 ? base + remaining : cur[row - 1];
    if (row > 0 && row - 1 < static_cast<int>(mu.size())) {
        // strip condition: no two added cells in a column
        cap = std::min(cap, mu[row - 1]);
    }
    for (int v = base; v <= std::min(cap, base + remaining); ++v) {
        cur.push_back(v);
        strips(mu, row + 1, remaining - (v - base), cur, out, c);
        cur.pop_back();
    }
}

SchurExpansion pieri_h(const SchurExpansion& f, int n) {
    SchurExpansion out;
    for (const auto& [mu, c] : f.terms) {
        Partition cur;
        strips(mu, 0, n, cur, out, c);
    }
    return out;
}

SchurExpansion h_power_expansion(const Partition& lambda, int m) {
    SchurExpansion f = schur_unit({});
    for (int part : lambda) {
        for (int i = 0; i < m; ++i) f = pieri_h(f, part);
    }
    return f;
}

SchurExpansion omega(const SchurExpansion& f) {
    SchurExpansion out;
    for (const auto& [mu, c] : f.terms) out.add(conjugate(mu), c);
    return out;
}

long long scalar_product(const SchurExpansion& f, const SchurExpansion& g) {
    long long s = 0;
    for (const auto& [mu, c] : f.terms) s = checked_add(s, checked_mul(c, g.coeff(mu)));
    return s;
}

}  // namespace pleth
