#pragma once

#include <map>
#include <vector>

#include "pleth/partition.hpp"
#include "pleth/schur.hpp"

namespace pleth {

// Polynomial in a fixed number of variables, keyed by exponent vector in
// lexicographic-descending order (so begin() is the leading term).
struct DensePoly {
    int nvars = 0;
    std::map<std::vector<int>, long long, std::greater<std::vector<int>>> terms;

    void add(const std::vector<int>& e, long long c);
    bool operator==(const DensePoly&) const = default;
};

// Schur polynomial of lambda in nvars variables (monomial coefficients are
// Kostka numbers, computed by iterated Pieri). Cached internally.
DensePoly schur_poly(const Partition& lambda, int nvars);

DensePoly expand_in_vars(const SchurExpansion& f, int nvars);

// Inverse of expand_in_vars by repeated leading-term subtraction; throws
// std::runtime_error when the input is not symmetric.
SchurExpansion schur_extract(const DensePoly& p);

// Brute-force s_nu[g] (|nu| <= 3) by substituting the monomials of g, with
// multiplicity, as variables of the Schur polynomial s_nu.
SchurExpansion plethysm_oracle(const Partition& nu, const SchurExpansion& g, int nvars);

SchurExpansion poly_product(const SchurExpansion& f, const SchurExpansion& g, int nvars);

// h_lambda / e_lambda in the Schur basis (inputs for the oracle).
SchurExpansion h_lambda(const Partition& lambda);
SchurExpansion e_lambda(const Partition& lambda);

}  // namespace pleth
