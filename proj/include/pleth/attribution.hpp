#pragma once

#include <map>

#include "pleth/schur.hpp"
#include "pleth/tableau.hpp"
#include "pleth/type_tableau.hpp"

namespace pleth {

// 2-subtype of a tableau of content (n)^m, m >= 2: row type iff the number
// of 2s in the second row is even.
TypeT subtype2(const Tableau& t);

// Split off the mu3 full (1,2,3)-columns of a content-(n)^3 tableau; the
// remainder has at most two rows and content (n - kappa5)^3.
std::pair<int, Tableau> strip_columns(const Tableau& t);

// Type of a two-row tableau of shape (3n'-j, j) whose second row carries
// kappa2 2s and j-kappa2 3s (the threshold rule on the strand).
TypeT type_of_two_row(int j, int kappa2);

// Full rule: strip columns, type the two-row remainder, conjugate the type
// when kappa5 is odd.
TypeT type_of(const Tableau& t);

// Per-type census of SSYT(mu, (n)^3) over all mu, keyed by type.
std::map<TypeT, SchurExpansion> type_census_h(int n);

// s_nu[h_n] via the attribution (for nu = (2,1) both copies are checked equal).
SchurExpansion plethysm_h(const Partition& nu, int n);

// Type of a conjugate tableau of content (n)^3: the type of its transpose,
// conjugated when n is odd.
TypeT type_of_conjugate(const Tableau& tc, int n);

std::map<TypeT, SchurExpansion> type_census_e(int n);
SchurExpansion plethysm_e(const Partition& nu, int n);

// Partitions of 3n with at most 3 parts (the shapes of content-(n)^3 SSYT).
std::vector<Partition> shapes_3rows(int n);

// Select the census entry for nu |- 3; for nu = (2,1) asserts both copies
// coincide before returning one of them.
SchurExpansion pick_type_copy(std::map<TypeT, SchurExpansion>& census, const Partition& nu,
                              const char* what);

}  // namespace pleth
