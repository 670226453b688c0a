#include "pleth/partition.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace pleth {

bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

long long weight(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0ll);
}

int part_at(const Partition& p, int i) {
    assert(i >= 1);
    return i <= static_cast<int>(p.size()) ? p[i - 1] : 0;
}

Partition conjugate(const Partition& p) {
    Partition q;
    if (p.empty()) return q;
    q.resize(p[0]);
    for (int c = 0; c < p[0]; ++c) {
        int rows = 0;
        for (int row : p) {
            if (row > c) ++rows;
        }
        q[c] = rows;
    }
    return q;
}

Partition normalized(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    if (!is_partition(parts)) throw std::invalid_argument("not a partition");
    return parts;
}

static void gen_parts(int n, int max_part, int max_parts, Partition& cur,
                      std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    if (max_parts == 0) return;
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_parts(n - p, p, max_parts - 1, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_of(int n, int max_parts) {
    std::vector<Partition> out;
    if (n < 0) return out;
    Partition cur;
    gen_parts(n, n, max_parts < 0 ? n : max_parts, cur, out);
    return out;
}

}  // namespace pleth
