#pragma once

#include "pleth/partition.hpp"

namespace pleth {

// Closed-form coefficient of s_mu in s_nu[h_n] for nu |- 3 (Chen's formulas).
// For nu = (2,1) this is the coefficient of one copy of s_21.
long long chen_coefficient(const Partition& nu, const Partition& mu, int n);

}  // namespace pleth
