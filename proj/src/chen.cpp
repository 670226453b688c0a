#include "pleth/chen.hpp"

#include <stdexcept>

#include "pleth/tableau.hpp"

namespace pleth {

long long chen_coefficient(const Partition& nu, const Partition& mu, int n) {
    if (!is_partition(nu) || weight(nu) != 3) throw std::invalid_argument("nu must be a partition of 3");
    if (!is_partition(mu) || weight(mu) != 3ll * n || mu.size() > 3) return 0;
    long long k = kostka_n3(mu, n);
    if (nu == Partition{2, 1}) return (k - 1 + 2) / 3;  // ceil((K-1)/3)
    int mu2 = part_at(mu, 2);
    bool mu2_even = mu2 % 2 == 0;
    bool want_even = nu == Partition{3};
    long long r = k % 6;
    bool ceil_branch = r == 0 || r == 4 || ((r == 1 || r == 3 || r == 5) && mu2_even == want_even);
    return ceil_branch ? (k + 5) / 6 : k / 6;
}

}  // namespace pleth
