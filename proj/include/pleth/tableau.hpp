#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "pleth/partition.hpp"

namespace pleth {

// Semistandard (skew) tableau. rows[r] holds the entries of row r to the
// right of the inner offset inner[r] (inner may be shorter than rows; missing
// offsets are zero). A straight tableau has all offsets zero.
struct Tableau {
    std::vector<int> inner;
    std::vector<std::vector<int>> rows;

    int inner_at(int r) const {
        return r < static_cast<int>(inner.size()) ? inner[r] : 0;
    }
    int outer_at(int r) const {
        return inner_at(r) + static_cast<int>(rows[r].size());
    }
    int nrows() const { return static_cast<int>(rows.size()); }
    bool straight() const;
    bool operator==(const Tableau&) const = default;
};

Partition outer_shape(const Tableau& t);
Partition inner_shape(const Tableau& t);
std::vector<int> content_of(const Tableau& t);
bool is_semistandard(const Tableau& t);            // weak rows, strict columns
bool is_conjugate_semistandard(const Tableau& t);  // strict rows, weak columns

Tableau transpose(const Tableau& t);               // straight shapes only
Tableau restrict_to(const Tableau& t, int ell);    // straight: entries <= ell
std::optional<Tableau> concat_rows(const Tableau& a, const Tableau& b);

// Jeu de taquin rectification; result is independent of the slide order.
// The _order variant lets tests drive the inner-corner choice (pick receives
// the list of candidate corner rows and returns an index into it).
Tableau jdt_rectify(const Tableau& t);
Tableau jdt_rectify_order(const Tableau& t,
                          const std::function<int(const std::vector<int>&)>& pick);

std::vector<Tableau> enumerate_ssyt(const Partition& shape,
                                    const std::vector<int>& content);
std::vector<Tableau> enumerate_ssyt_maxentry(const Partition& shape, int max_entry);

// Closed form for K^mu_{(n)^3}: min(mu1-mu2, mu2-mu3)+1 when mu |- 3n with
// at most 3 parts, else 0.
long long kostka_n3(const Partition& mu, int n);

std::vector<int> content_n3(int n);  // (n,n,n)

}  // namespace pleth
