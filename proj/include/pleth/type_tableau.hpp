#pragma once

#include <string>
#include <vector>

#include "pleth/partition.hpp"

namespace pleth {

// Standard tableaux with m <= 3 cells, the "type" labels.
// Names encode the rows: R = single row, C = single column,
// H21 = rows 12/3, H12 = rows 13/2.
enum class TypeT { R1, R2, C2, R3, H21, H12, C3 };

int type_cells(TypeT t);
Partition type_shape(TypeT t);
std::string type_name(TypeT t);  // row notation, e.g. "12/3"
TypeT conjugate_type(TypeT t);
TypeT restrict2(TypeT t);  // t restricted to entries 1,2 (m=3 types only)

std::vector<TypeT> enumerate_syt(int m);
long long count_f(const Partition& nu);  // f^nu = #standard tableaux, |nu| <= 3

}  // namespace pleth
