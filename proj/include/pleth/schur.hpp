#pragma once

#include <map>

#include "pleth/partition.hpp"

namespace pleth {

// Homogeneous symmetric function in the Schur basis. Keys iterate in
// reverse-lexicographic (largest-first) order for reproducible output.
struct SchurExpansion {
    std::map<Partition, long long, std::greater<Partition>> terms;

    void add(const Partition& mu, long long c);
    long long coeff(const Partition& mu) const;
    bool empty() const { return terms.empty(); }
    bool operator==(const SchurExpansion&) const = default;
};

SchurExpansion schur_unit(const Partition& mu);  // single term s_mu
SchurExpansion scaled(const SchurExpansion& f, long long c);
SchurExpansion sum(const SchurExpansion& f, const SchurExpansion& g);

// Pieri rule: multiply by h_n (horizontal n-strips), termwise.
SchurExpansion pieri_h(const SchurExpansion& f, int n);

// Expansion of (h_{lambda_1} ... h_{lambda_k})^m, i.e. h_{lambda^m}.
SchurExpansion h_power_expansion(const Partition& lambda, int m);

SchurExpansion omega(const SchurExpansion& f);
long long scalar_product(const SchurExpansion& f, const SchurExpansion& g);

}  // namespace pleth
