#include "pleth/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "pleth/util.hpp"

namespace pleth {

void DensePoly::add(const std::vector<int>& e, long long c) {
    if (c == 0) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, c);
        return;
    }
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms.erase(it);
}

// K_{lambda,beta} = coefficient of s_lambda in h_beta, by iterated Pieri.
static long long kostka(const Partition& lambda, const Partition& beta) {
    static std::map<Partition, SchurExpansion> cache;
    auto it = cache.find(beta);
    if (it == cache.end()) it = cache.emplace(beta, h_power_expansion(beta, 1)).first;
    return it->second.coeff(lambda);
}

DensePoly schur_poly(const Partition& lambda, int nvars) {
    static std::map<std::pair<Partition, int>, DensePoly> cache;
    auto key = std::make_pair(lambda, nvars);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    DensePoly p;
    p.nvars = nvars;
    int n = static_cast<int>(weight(lambda));
    for (const Partition& beta : partitions_of(n, nvars)) {
        long long k = kostka(lambda, beta);
        if (k == 0) continue;
        std::vector<int> expo(nvars, 0);
        std::copy(beta.begin(), beta.end(), expo.begin());
        std::sort(expo.begin(), expo.end());
        do {
            p.add(expo, k);
        } while (std::next_permutation(expo.begin(), expo.end()));
    }
    cache.emplace(key, p);
    return p;
}

DensePoly expand_in_vars(const SchurExpansion& f, int nvars) {
    DensePoly p;
    p.nvars = nvars;
    for (const auto& [mu, c] : f.terms) {
        for (const auto& [e, k] : schur_poly(mu, nvars).terms) p.add(e, checked_mul(c, k));
    }
    return p;
}

SchurExpansion schur_extract(const DensePoly& p) {
    DensePoly rest = p;
    SchurExpansion out;
    while (!rest.terms.empty()) {
        auto lead = rest.terms.begin();
        std::vector<int> expo = lead->first;
        long long c = lead->second;
        for (size_t i = 0; i + 1 < expo.size(); ++i) {
            if (expo[i] < expo[i + 1])
                throw std::runtime_error("schur_extract: polynomial is not symmetric");
        }
        Partition mu = expo;
        while (!mu.empty() && mu.back() == 0) mu.pop_back();
        for (const auto& [e, k] : schur_poly(mu, rest.nvars).terms)
            rest.add(e, -checked_mul(c, k));
        if (!rest.terms.empty() && !(rest.terms.begin()->first < expo))
            throw std::runtime_error("schur_extract: leading term did not decrease");
        out.add(mu, c);
    }
    return out;
}

// --- evaluation of s_nu on a monomial multiset ----------------------------

namespace {

using Mons = std::vector<std::pair<std::vector<int>, long long>>;
using Acc = std::unordered_map<std::vector<int>, long long, VecIntHash>;

void acc_add(Acc& acc, const std::vector<int>& e, long long w) {
    if (w == 0) return;
    auto [it, fresh] = acc.emplace(e, w);
    if (!fresh) it->second = checked_add(it->second, w);
}

long long c2(long long m) { return m * (m - 1) / 2; }     // C(m,2)
long long h2w(long long m) { return m * (m + 1) / 2; }    // C(m+1,2)
long long c3(long long m) { return m * (m - 1) * (m - 2) / 6; }
long long h3w(long long m) { return m * (m + 1) * (m + 2) / 6; }

enum class Shape3 { H3, E3, S21 };

// Weight of choosing monomial classes d1 <= d2 <= d3 (sizes m1,m2,m3) as the
// three cell values; combinations-with-repetition for row shapes, plain
// combinations for columns, and the worked (2,1) case split.
long long triple_weight(Shape3 s, int eq, long long m1, long long m2, long long m3) {
    // eq: 0 = all distinct, 1 = d1==d2<d3, 2 = d1<d2==d3, 3 = all equal
    switch (s) {
        case Shape3::H3:
            switch (eq) {
                case 0: return checked_mul(checked_mul(m1, m2), m3);
                case 1: return checked_mul(h2w(m1), m3);
                case 2: return checked_mul(m1, h2w(m2));
                default: return h3w(m1);
            }
        case Shape3::E3:
            switch (eq) {
                case 0: return checked_mul(checked_mul(m1, m2), m3);
                case 1: return checked_mul(c2(m1), m3);
                case 2: return checked_mul(m1, c2(m2));
                default: return c3(m1);
            }
        case Shape3::S21:
            switch (eq) {
                case 0: return 2 * checked_mul(checked_mul(m1, m2), m3);
                case 1: return checked_mul(checked_mul(m1, m1), m3);
                case 2: return checked_mul(m1, checked_mul(m2, m2));
                default: return m1 * (m1 * m1 - 1) / 3;
            }
    }
    return 0;
}

Acc eval_degree3(Shape3 s, const Mons& mons, int nvars) {
    Acc acc;
    acc.reserve(1 << 14);
    size_t d = mons.size();
    std::vector<int> e12(nvars), e(nvars);
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = i; j < d; ++j) {
            for (int v = 0; v < nvars; ++v) e12[v] = mons[i].first[v] + mons[j].first[v];
            for (size_t k = j; k < d; ++k) {
                int eq = i == j ? (j == k ? 3 : 1) : (j == k ? 2 : 0);
                long long w =
                    triple_weight(s, eq, mons[i].second, mons[j].second, mons[k].second);
                if (w == 0) continue;
                for (int v = 0; v < nvars; ++v) e[v] = e12[v] + mons[k].first[v];
                acc_add(acc, e, w);
            }
        }
    }
    return acc;
}

Acc eval_degree2(bool strict, const Mons& mons, int nvars) {
    Acc acc;
    std::vector<int> e(nvars);
    for (size_t i = 0; i < mons.size(); ++i) {
        for (size_t j = i; j < mons.size(); ++j) {
            long long w = i == j ? (strict ? c2(mons[i].second) : h2w(mons[i].second))
                                 : checked_mul(mons[i].second, mons[j].second);
            if (w == 0) continue;
            for (int v = 0; v < nvars; ++v) e[v] = mons[i].first[v] + mons[j].first[v];
            acc_add(acc, e, w);
        }
    }
    return acc;
}

Acc eval_schur_on_monomials(const Partition& nu, const Mons& mons, int nvars) {
    if (nu == Partition{1}) {
        Acc acc;
        for (const auto& [e, m] : mons) acc_add(acc, e, m);
        return acc;
    }
    if (nu == Partition{2}) return eval_degree2(false, mons, nvars);
    if (nu == Partition{1, 1}) return eval_degree2(true, mons, nvars);
    if (nu == Partition{3}) return eval_degree3(Shape3::H3, mons, nvars);
    if (nu == Partition{2, 1}) return eval_degree3(Shape3::S21, mons, nvars);
    if (nu == Partition{1, 1, 1}) return eval_degree3(Shape3::E3, mons, nvars);
    throw std::invalid_argument("plethysm_oracle: |nu| must be <= 3");
}

}  // namespace

SchurExpansion plethysm_oracle(const Partition& nu, const SchurExpansion& g, int nvars) {
    DensePoly gp = expand_in_vars(g, nvars);
    Mons mons;
    mons.reserve(gp.terms.size());
    for (const auto& [e, c] : gp.terms) {
        if (c < 0)
            throw std::invalid_argument("plethysm_oracle: g must be monomial-positive");
        mons.emplace_back(e, c);
    }
    Acc acc = eval_schur_on_monomials(nu, mons, nvars);
    DensePoly p;
    p.nvars = nvars;
    for (auto& [e, c] : acc) p.add(e, c);
    return schur_extract(p);
}

SchurExpansion poly_product(const SchurExpansion& f, const SchurExpansion& g, int nvars) {
    DensePoly fp = expand_in_vars(f, nvars);
    DensePoly gp = expand_in_vars(g, nvars);
    Acc acc;
    std::vector<int> e(nvars);
    for (const auto& [ef, cf] : fp.terms) {
        for (const auto& [eg, cg] : gp.terms) {
            for (int v = 0; v < nvars; ++v) e[v] = ef[v] + eg[v];
            acc_add(acc, e, checked_mul(cf, cg));
        }
    }
    DensePoly p;
    p.nvars = nvars;
    for (auto& [ee, c] : acc) p.add(ee, c);
    return schur_extract(p);
}

SchurExpansion h_lambda(const Partition& lambda) { return h_power_expansion(lambda, 1); }

SchurExpansion e_lambda(const Partition& lambda) { return omega(h_lambda(lambda)); }

}  // namespace pleth
