#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "pleth/partition.hpp"
#include "pleth/tableau.hpp"

namespace pleth {

// Block-type counts of a Yamanouchi 3-ribbon tableau of shape (3n)^3.
struct Kappa {
    int k1 = 0, k2 = 0, k3 = 0, k4 = 0, k5 = 0;

    int n() const { return k1 + k2 + k3 + k4 + k5; }
    bool valid() const {
        return k1 >= 0 && k2 >= 0 && k4 >= 0 && k5 >= 0 && (k3 == 0 || k3 == 1) &&
               k1 + k2 >= k4;
    }
    auto operator<=>(const Kappa&) const = default;
};

// Content of the associated ribbon tableau = shape of the associated SSYT.
Partition kappa_content(const Kappa& k);

// Reading word 2^k2 3^k5 2^(k3+2k4+k5) 1^(3k1+2k2+2k3+k4+k5).
std::vector<int> kappa_word(const Kappa& k);

// Every suffix has partition content.
bool is_yamanouchi(const std::vector<int>& word);

Kappa tableau_to_kappa(const Tableau& t);   // content (n)^3
Tableau kappa_to_tableau(const Kappa& k);

// One 2<->3 exchange (kappa2 + 1, shape preserved); nullopt at strand end.
std::optional<Kappa> exchange_step(const Kappa& k);

}  // namespace pleth
