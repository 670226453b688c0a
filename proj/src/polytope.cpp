#include "pleth/polytope.hpp"

#include <algorithm>
#include <stdexcept>

#include "pleth/attribution.hpp"

namespace pleth {

std::vector<P4> enumerate_Pn(int n) {
    std::vector<P4> out;
    for (int k3 = 0; k3 <= std::min(1, n); ++k3) {
        for (int k4 = 0; k3 + k4 <= n; ++k4) {
            for (int k2 = 0; k3 + k4 + k2 <= n; ++k2) {
                int k1 = n - k2 - k3 - k4;
                if (k1 + k2 < k4) continue;
                out.push_back({k1, k2, k3, k4});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Kappa> enumerate_PPn(int n) {
    std::vector<Kappa> out;
    for (int m = 0; m <= n; ++m) {
        for (const P4& p : enumerate_Pn(m)) out.push_back(lift(p, n - m));
    }
    return out;
}

int strand_j(const P4& p) { return p.k2 + p.k3 + 2 * p.k4; }

Strand strand(int n, int j) {
    Strand s;
    s.n = n;
    s.j = j;
    for (const P4& p : enumerate_Pn(n)) {
        if (strand_j(p) == j) s.points.push_back(p);
    }
    std::sort(s.points.begin(), s.points.end(),
              [](const P4& a, const P4& b) { return a.k2 < b.k2; });
    return s;
}

P4 include_step(const P4& p) { return {p.k1 + 1, p.k2, p.k3, p.k4}; }

std::pair<int, int> first_occurrence(int j) {
    int n0 = (2 * j + 2) / 3;
    int count = j % 3 + 1;
    return {n0, count};
}

std::pair<long long, long long> count_formula(int n) {
    auto pm = [](long long m) {
        return (m + 2) * (m + 1) / 2 + (m / 2) * ((m + 1) / 2);
    };
    long long total = 0;
    for (int m = 0; m <= n; ++m) total += pm(m);
    return {pm(n), total};
}

P4 final_point(int n, int j) {
    if (j < 0 || 2 * j > 3 * n) throw std::invalid_argument("final_point: j out of range");
    if (j <= n) return {n - j, j, 0, 0};
    return {0, 2 * n - j, 0, j - n};
}

TypeT point_type(const P4& p) { return type_of_two_row(strand_j(p), p.k2); }

Kappa lift(const P4& p, int k5) {
    Kappa k;
    k.k1 = p.k1;
    k.k2 = p.k2;
    k.k3 = p.k3;
    k.k4 = p.k4;
    k.k5 = k5;
    if (!k.valid()) throw std::logic_error("lift: invalid kappa");
    return k;
}

}  // namespace pleth
