#pragma once

#include <utility>
#include <vector>

#include "pleth/ribbon.hpp"
#include "pleth/type_tableau.hpp"

namespace pleth {

// Projection point of P_n (kappa5 = 0 layer; kappa1+kappa2+kappa3+kappa4 = n).
struct P4 {
    int k1 = 0, k2 = 0, k3 = 0, k4 = 0;
    auto operator<=>(const P4&) const = default;
};

struct Strand {
    int n = 0, j = 0;
    std::vector<P4> points;  // kappa2-ascending
};

std::vector<P4> enumerate_Pn(int n);
std::vector<Kappa> enumerate_PPn(int n);

int strand_j(const P4& p);  // k2 + k3 + 2 k4
Strand strand(int n, int j);
P4 include_step(const P4& p);                      // kappa1 + 1 (T v row(123))
std::pair<int, int> first_occurrence(int j);       // (n0, count)
std::pair<long long, long long> count_formula(int n);
P4 final_point(int n, int j);
TypeT point_type(const P4& p);
Kappa lift(const P4& p, int k5 = 0);

}  // namespace pleth
