#pragma once

#include <map>
#include <vector>

#include "pleth/schur.hpp"
#include "pleth/tableau.hpp"
#include "pleth/type_tableau.hpp"

namespace pleth {

// Kronecker map: fibering of pairs of m-cell standard tableaux whose fiber
// shape-counts are the Kronecker coefficients; tables fixed as printed.
struct KroneckerMap {
    int m = 0;
    std::map<std::pair<TypeT, TypeT>, TypeT> table;
};

const KroneckerMap& kronecker_F22();
const KroneckerMap& kronecker_F32();

TypeT kronecker_apply(const KroneckerMap& f, TypeT t1, TypeT t2);
TypeT kronecker_fold(const KroneckerMap& f, const std::vector<TypeT>& ts);

// lambda with each part repeated m times, as a content vector.
std::vector<int> lambda_power_content(const Partition& lambda, int m);

// All SSYT of the given content over every shape (reverse-lex shape order).
std::vector<Tableau> all_ssyt_of_content(const std::vector<int>& content);

// Dec_m: rectified entry-band subtableaux ((i-1)m+1 .. im, shifted down).
std::vector<Tableau> decompose(const Tableau& t, const Partition& lambda, int m);

// Dec'_m for conjugate tableaux (band, transpose, rectify, transpose back).
std::vector<Tableau> decompose_conjugate(const Tableau& tc, const Partition& lambda, int m);

TypeT type_of_product(const Tableau& t, const Partition& lambda);
TypeT type_of_product_conjugate(const Tableau& tc, const Partition& lambda);

std::map<TypeT, SchurExpansion> type_census_h_lambda(const Partition& lambda);
std::map<TypeT, SchurExpansion> type_census_e_lambda(const Partition& lambda);
SchurExpansion plethysm_h_lambda(const Partition& nu, const Partition& lambda);
SchurExpansion plethysm_e_lambda(const Partition& nu, const Partition& lambda);

// m = 2 analogues (the prior-work result the m = 3 construction extends).
TypeT type2_of_product(const Tableau& t, const Partition& lambda);
std::map<TypeT, SchurExpansion> type_census_h2_lambda(const Partition& lambda);

}  // namespace pleth
