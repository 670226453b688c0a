#include "pleth/attribution.hpp"

#include <stdexcept>

namespace pleth {

static int count_in_row(const Tableau& t, int row, int entry) {
    if (row >= t.nrows()) return 0;
    int c = 0;
    for (int e : t.rows[row]) {
        if (e == entry) ++c;
    }
    return c;
}

static void check_content_n3(const Tableau& t, int* n_out = nullptr) {
    auto c = content_of(t);
    while (c.size() < 3) c.push_back(0);
    if (c.size() != 3 || c[0] != c[1] || c[1] != c[2])
        throw std::invalid_argument("tableau content must be (n)^3");
    if (n_out) *n_out = c[0];
}

TypeT subtype2(const Tableau& t) {
    return count_in_row(t, 1, 2) % 2 == 0 ? TypeT::R2 : TypeT::C2;
}

std::pair<int, Tableau> strip_columns(const Tableau& t) {
    check_content_n3(t);
    Partition mu = outer_shape(t);
    int k5 = part_at(mu, 3);
    Tableau red;
    std::vector<int> row1, row2;
    row1.insert(row1.end(), count_in_row(t, 0, 1) - k5, 1);
    row1.insert(row1.end(), count_in_row(t, 0, 2), 2);
    row1.insert(row1.end(), count_in_row(t, 0, 3), 3);
    row2.insert(row2.end(), count_in_row(t, 1, 2) - k5, 2);
    row2.insert(row2.end(), count_in_row(t, 1, 3), 3);
    if (!row1.empty()) red.rows.push_back(std::move(row1));
    if (!row2.empty()) red.rows.push_back(std::move(row2));
    return {k5, red};
}

TypeT type_of_two_row(int j, int kappa2) {
    int k32 = j - kappa2;
    if (kappa2 < 0 || k32 < 0) throw std::invalid_argument("bad two-row data");
    bool even = kappa2 % 2 == 0;
    int half = k32 / 2;
    if (kappa2 < half) return even ? TypeT::R3 : TypeT::C3;
    if (kappa2 > half) return even ? TypeT::H21 : TypeT::H12;
    switch (j % 3) {
        case 0: return even ? TypeT::R3 : TypeT::C3;
        case 1: return even ? TypeT::H21 : TypeT::H12;
        default:
            // the middle plane only meets strands with j = 0,1 mod 3
            throw std::logic_error("type_of_two_row: unreachable equality case j = 2 mod 3");
    }
}

TypeT type_of(const Tableau& t) {
    auto [k5, red] = strip_columns(t);
    int j = red.nrows() > 1 ? static_cast<int>(red.rows[1].size()) : 0;
    int kappa2 = count_in_row(red, 1, 2);
    TypeT ty = type_of_two_row(j, kappa2);
    return k5 % 2 == 0 ? ty : conjugate_type(ty);
}

std::vector<Partition> shapes_3rows(int n) { return partitions_of(3 * n, 3); }

std::map<TypeT, SchurExpansion> type_census_h(int n) {
    std::map<TypeT, SchurExpansion> census;
    for (const Partition& mu : shapes_3rows(n)) {
        for (const Tableau& t : enumerate_ssyt(mu, content_n3(n))) census[type_of(t)].add(mu, 1);
    }
    return census;
}

SchurExpansion pick_type_copy(std::map<TypeT, SchurExpansion>& census, const Partition& nu,
                              const char* what) {
    if (nu == Partition{3}) return census[TypeT::R3];
    if (nu == Partition{1, 1, 1}) return census[TypeT::C3];
    if (nu == Partition{2, 1}) {
        if (!(census[TypeT::H21] == census[TypeT::H12]))
            throw std::logic_error(std::string(what) + ": the two (2,1) copies differ");
        return census[TypeT::H21];
    }
    throw std::invalid_argument("nu must be a partition of 3");
}

SchurExpansion plethysm_h(const Partition& nu, int n) {
    auto census = type_census_h(n);
    return pick_type_copy(census, nu, "plethysm_h");
}

TypeT type_of_conjugate(const Tableau& tc, int n) {
    if (!is_conjugate_semistandard(tc))
        throw std::invalid_argument("expected a conjugate tableau");
    TypeT ty = type_of(transpose(tc));
    return n % 2 == 0 ? ty : conjugate_type(ty);
}

std::map<TypeT, SchurExpansion> type_census_e(int n) {
    std::map<TypeT, SchurExpansion> census;
    for (const Partition& sigma : shapes_3rows(n)) {
        Partition key = conjugate(sigma);
        for (const Tableau& t : enumerate_ssyt(sigma, content_n3(n))) {
            TypeT ty = type_of(t);
            census[n % 2 == 0 ? ty : conjugate_type(ty)].add(key, 1);
        }
    }
    return census;
}

SchurExpansion plethysm_e(const Partition& nu, int n) {
    auto census = type_census_e(n);
    return pick_type_copy(census, nu, "plethysm_e");
}

}  // namespace pleth
