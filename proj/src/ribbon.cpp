#include "pleth/ribbon.hpp"

#include <stdexcept>

namespace pleth {

Partition kappa_content(const Kappa& k) {
    std::vector<int> nu = {3 * k.k1 + 2 * k.k2 + 2 * k.k3 + k.k4 + k.k5,
                           k.k2 + k.k3 + 2 * k.k4 + k.k5, k.k5};
    while (!nu.empty() && nu.back() == 0) nu.pop_back();
    if (!is_partition(nu)) throw std::logic_error("kappa_content: invalid kappa");
    return nu;
}

std::vector<int> kappa_word(const Kappa& k) {
    std::vector<int> w;
    w.insert(w.end(), k.k2, 2);
    w.insert(w.end(), k.k5, 3);
    w.insert(w.end(), k.k3 + 2 * k.k4 + k.k5, 2);
    w.insert(w.end(), 3 * k.k1 + 2 * k.k2 + 2 * k.k3 + k.k4 + k.k5, 1);
    return w;
}

bool is_yamanouchi(const std::vector<int>& word) {
    std::vector<int> cnt;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int e = *it;
        if (e < 1) return false;
        if (e > static_cast<int>(cnt.size())) cnt.resize(e, 0);
        ++cnt[e - 1];
        for (size_t i = 0; i + 1 < cnt.size(); ++i) {
            if (cnt[i] < cnt[i + 1]) return false;
        }
    }
    return true;
}

static int row_count(const Tableau& t, int row, int entry) {
    if (row >= t.nrows()) return 0;
    int c = 0;
    for (int e : t.rows[row]) {
        if (e == entry) ++c;
    }
    return c;
}

Kappa tableau_to_kappa(const Tableau& t) {
    Partition nu = outer_shape(t);
    int k21 = row_count(t, 0, 2);
    int k22 = row_count(t, 1, 2);
    int k32 = row_count(t, 1, 3);
    int nu3 = part_at(nu, 3);
    Kappa k;
    k.k1 = k21 - (k32 + 1) / 2;
    k.k2 = k22 - nu3;
    k.k3 = k32 % 2;
    k.k4 = k32 / 2;
    k.k5 = nu3;
    if (!k.valid()) throw std::logic_error("tableau_to_kappa: invariants violated");
    return k;
}

Tableau kappa_to_tableau(const Kappa& k) {
    if (!k.valid()) throw std::invalid_argument("invalid kappa");
    Partition nu = kappa_content(k);
    int n = k.n();
    int k22 = k.k2 + k.k5;  // 2s on the second row
    Tableau t;
    std::vector<int> row1, row2, row3;
    row1.insert(row1.end(), n, 1);
    row1.insert(row1.end(), n - k22, 2);
    row1.insert(row1.end(), part_at(nu, 1) - n - (n - k22), 3);
    row2.insert(row2.end(), k22, 2);
    row2.insert(row2.end(), part_at(nu, 2) - k22, 3);
    row3.insert(row3.end(), part_at(nu, 3), 3);
    if (!row1.empty()) t.rows.push_back(std::move(row1));
    if (!row2.empty()) t.rows.push_back(std::move(row2));
    if (!row3.empty()) t.rows.push_back(std::move(row3));
    return t;
}

std::optional<Kappa> exchange_step(const Kappa& k) {
    Kappa next = k;
    if (k.k3 == 0) {
        next.k1 -= 1;
        next.k2 += 1;
        next.k3 += 1;
        next.k4 -= 1;
    } else {
        next.k2 += 1;
        next.k3 -= 1;
    }
    if (!next.valid()) return std::nullopt;
    return next;
}

}  // namespace pleth
