#include "pleth/product.hpp"

#include <stdexcept>

#include "pleth/attribution.hpp"

namespace pleth {

static KroneckerMap make_f22() {
    using T = TypeT;
    KroneckerMap f;
    f.m = 2;
    f.table = {
        {{T::R2, T::R2}, T::R2}, {{T::C2, T::C2}, T::R2},
        {{T::R2, T::C2}, T::C2}, {{T::C2, T::R2}, T::C2},
    };
    return f;
}

static KroneckerMap make_f32() {
    using T = TypeT;
    KroneckerMap f;
    f.m = 3;
    f.table = {
        // fiber of 123
        {{T::R3, T::R3}, T::R3},
        {{T::H21, T::H21}, T::R3},
        {{T::C3, T::C3}, T::R3},
        // fiber of 12/3
        {{T::H21, T::R3}, T::H21},
        {{T::R3, T::H21}, T::H21},
        {{T::C3, T::H12}, T::H21},
        {{T::H12, T::C3}, T::H21},
        {{T::H12, T::H12}, T::H21},
        // fiber of 13/2
        {{T::H12, T::R3}, T::H12},
        {{T::R3, T::H12}, T::H12},
        {{T::C3, T::H21}, T::H12},
        {{T::H21, T::C3}, T::H12},
        {{T::H12, T::H21}, T::H12},
        // fiber of 1/2/3
        {{T::R3, T::C3}, T::C3},
        {{T::H21, T::H12}, T::C3},
        {{T::C3, T::R3}, T::C3},
    };
    return f;
}

const KroneckerMap& kronecker_F22() {
    static const KroneckerMap f = make_f22();
    return f;
}

const KroneckerMap& kronecker_F32() {
    static const KroneckerMap f = make_f32();
    return f;
}

TypeT kronecker_apply(const KroneckerMap& f, TypeT t1, TypeT t2) {
    if (type_cells(t1) != f.m || type_cells(t2) != f.m)
        throw std::invalid_argument("kronecker_apply: order mismatch");
    return f.table.at({t1, t2});
}

TypeT kronecker_fold(const KroneckerMap& f, const std::vector<TypeT>& ts) {
    if (ts.empty()) throw std::invalid_argument("kronecker_fold: empty list");
    TypeT acc = ts[0];
    for (size_t i = 1; i < ts.size(); ++i) acc = kronecker_apply(f, acc, ts[i]);
    return acc;
}

std::vector<int> lambda_power_content(const Partition& lambda, int m) {
    std::vector<int> content;
    for (int part : lambda) content.insert(content.end(), m, part);
    return content;
}

std::vector<Tableau> all_ssyt_of_content(const std::vector<int>& content) {
    int total = 0, distinct = 0;
    for (int c : content) {
        total += c;
        if (c > 0) ++distinct;
    }
    std::vector<Tableau> out;
    for (const Partition& mu : partitions_of(total, distinct)) {
        for (Tableau& t : enumerate_ssyt(mu, content)) out.push_back(std::move(t));
    }
    return out;
}

// Skew subtableau of the cells with entries in [lo, hi], shifted down by lo-1.
static Tableau band_skew(const Tableau& t, int lo, int hi) {
    Tableau out;
    for (const auto& row : t.rows) {
        int z = 0;
        std::vector<int> kept;
        for (int e : row) {
            if (e < lo) {
                ++z;
            } else if (e <= hi) {
                kept.push_back(e - (lo - 1));
            }
        }
        out.inner.push_back(z);
        out.rows.push_back(std::move(kept));
    }
    while (!out.rows.empty() && out.rows.back().empty()) {
        out.rows.pop_back();
        out.inner.pop_back();
    }
    return out;
}

std::vector<Tableau> decompose(const Tableau& t, const Partition& lambda, int m) {
    if (!t.straight()) throw std::invalid_argument("decompose needs a straight tableau");
    if (content_of(t) != lambda_power_content(lambda, m))
        throw std::invalid_argument("decompose: content is not lambda^m");
    std::vector<Tableau> factors;
    for (size_t i = 0; i < lambda.size(); ++i) {
        int lo = static_cast<int>(i) * m + 1;
        factors.push_back(jdt_rectify(band_skew(t, lo, lo + m - 1)));
    }
    return factors;
}

std::vector<Tableau> decompose_conjugate(const Tableau& tc, const Partition& lambda, int m) {
    if (!is_conjugate_semistandard(tc))
        throw std::invalid_argument("decompose_conjugate needs a conjugate tableau");
    std::vector<Tableau> factors;
    for (Tableau& f : decompose(transpose(tc), lambda, m)) factors.push_back(transpose(f));
    return factors;
}

TypeT type_of_product(const Tableau& t, const Partition& lambda) {
    std::vector<TypeT> ts;
    for (const Tableau& f : decompose(t, lambda, 3)) ts.push_back(type_of(f));
    return kronecker_fold(kronecker_F32(), ts);
}

TypeT type_of_product_conjugate(const Tableau& tc, const Partition& lambda) {
    auto factors = decompose_conjugate(tc, lambda, 3);
    std::vector<TypeT> ts;
    for (size_t i = 0; i < factors.size(); ++i)
        ts.push_back(type_of_conjugate(factors[i], lambda[i]));
    return kronecker_fold(kronecker_F32(), ts);
}

std::map<TypeT, SchurExpansion> type_census_h_lambda(const Partition& lambda) {
    std::map<TypeT, SchurExpansion> census;
    for (const Tableau& t : all_ssyt_of_content(lambda_power_content(lambda, 3)))
        census[type_of_product(t, lambda)].add(outer_shape(t), 1);
    return census;
}

std::map<TypeT, SchurExpansion> type_census_e_lambda(const Partition& lambda) {
    std::map<TypeT, SchurExpansion> census;
    for (const Tableau& t : all_ssyt_of_content(lambda_power_content(lambda, 3))) {
        Tableau tc = transpose(t);
        census[type_of_product_conjugate(tc, lambda)].add(outer_shape(tc), 1);
    }
    return census;
}

SchurExpansion plethysm_h_lambda(const Partition& nu, const Partition& lambda) {
    auto census = type_census_h_lambda(lambda);
    return pick_type_copy(census, nu, "plethysm_h_lambda");
}

SchurExpansion plethysm_e_lambda(const Partition& nu, const Partition& lambda) {
    auto census = type_census_e_lambda(lambda);
    return pick_type_copy(census, nu, "plethysm_e_lambda");
}

TypeT type2_of_product(const Tableau& t, const Partition& lambda) {
    std::vector<TypeT> ts;
    for (const Tableau& f : decompose(t, lambda, 2)) ts.push_back(subtype2(f));
    return kronecker_fold(kronecker_F22(), ts);
}

std::map<TypeT, SchurExpansion> type_census_h2_lambda(const Partition& lambda) {
    std::map<TypeT, SchurExpansion> census;
    for (const Tableau& t : all_ssyt_of_content(lambda_power_content(lambda, 2)))
        census[type2_of_product(t, lambda)].add(outer_shape(t), 1);
    return census;
}

}  // namespace pleth
