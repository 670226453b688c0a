#pragma once

#include <vector>

namespace pleth {

// A partition is a weakly decreasing sequence of positive integers,
// stored without trailing zeros. Equality is sequence equality.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
long long weight(const Partition& p);
int part_at(const Partition& p, int i);  // 1-based, 0 beyond length
Partition conjugate(const Partition& p);
Partition normalized(std::vector<int> parts);  // drop trailing zeros, validate

// All partitions of n with at most max_parts parts (max_parts < 0: unbounded).
std::vector<Partition> partitions_of(int n, int max_parts = -1);

}  // namespace pleth
