#include "pleth/verify.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "pleth/attribution.hpp"
#include "pleth/chen.hpp"
#include "pleth/io.hpp"
#include "pleth/oracle.hpp"
#include "pleth/polytope.hpp"
#include "pleth/product.hpp"
#include "pleth/ribbon.hpp"
#include "pleth/schur.hpp"
#include "pleth/tableau.hpp"

namespace pleth {

namespace {

struct Fail {
    bool ok = true;
    std::string detail;

    void note(const std::string& msg) {
        if (ok) {
            ok = false;
            detail = msg;
        }
    }
    void expect(bool cond, const std::string& msg) {
        if (!cond) note(msg);
    }
    void expect_eq(const SchurExpansion& got, const SchurExpansion& want, const std::string& ctx) {
        if (!(got == want))
            note(ctx + ": got " + format_expansion(got) + ", want " + format_expansion(want));
    }
    CheckResult done(const std::string& name) const { return {name, ok, detail}; }
};

const std::vector<Partition> kNus = {{3}, {2, 1}, {1, 1, 1}};

std::vector<Partition> partitions_upto(int max_weight, int max_parts = -1) {
    std::vector<Partition> out;
    for (int s = 1; s <= max_weight; ++s)
        for (auto& lam : partitions_of(s, max_parts)) out.push_back(lam);
    return out;
}

SchurExpansion census_total(std::map<TypeT, SchurExpansion>& census) {
    SchurExpansion total;
    for (auto& [ty, f] : census) total = sum(total, f);
    return total;
}

// Prepend a full (1,2,3)-column to a content-(n)^3 tableau.
Tableau add_column(const Tableau& t) {
    Tableau out;
    for (int r = 0; r < 3; ++r) {
        std::vector<int> row{r + 1};
        if (r < t.nrows()) row.insert(row.end(), t.rows[r].begin(), t.rows[r].end());
        out.rows.push_back(std::move(row));
    }
    return out;
}

// Add one 1, one 2 and one 3 to the first row (the inclusion step).
Tableau add_row123(const Tableau& t) {
    Tableau out = t;
    out.rows[0].insert(out.rows[0].end(), {1, 2, 3});
    std::sort(out.rows[0].begin(), out.rows[0].end());
    return out;
}

}  // namespace

CheckResult check_chen(int max_n) {
    Fail f;
    for (int n = 1; n <= max_n && f.ok; ++n) {
        auto census = type_census_h(n);
        for (const Partition& mu : shapes_3rows(n)) {
            long long c3 = chen_coefficient({3}, mu, n);
            long long c21 = chen_coefficient({2, 1}, mu, n);
            long long c111 = chen_coefficient({1, 1, 1}, mu, n);
            std::string at = "n=" + std::to_string(n) + " mu=" + format_partition(mu);
            f.expect(census[TypeT::R3].coeff(mu) == c3, "row-type count vs formula at " + at);
            f.expect(census[TypeT::C3].coeff(mu) == c111,
                     "column-type count vs formula at " + at);
            f.expect(census[TypeT::H21].coeff(mu) == c21,
                     "first hook-type count vs formula at " + at);
            f.expect(census[TypeT::H12].coeff(mu) == c21,
                     "second hook-type count vs formula at " + at);
            f.expect(c3 + c111 + 2 * c21 == kostka_n3(mu, n), "coefficient total at " + at);
        }
    }
    return f.done("closed-formula coefficients (n <= " + std::to_string(max_n) + ")");
}

CheckResult check_oracle() {
    Fail f;
    for (const Partition& nu : kNus) {
        for (int n = 1; n <= 4 && f.ok; ++n) {
            std::string at = " nu=" + format_partition(nu) + " n=" + std::to_string(n);
            f.expect_eq(plethysm_h(nu, n), plethysm_oracle(nu, schur_unit({n}), 3),
                        "s_nu[h_n]" + at);
            Partition ones(n, 1);
            f.expect_eq(plethysm_e(nu, n), plethysm_oracle(nu, schur_unit(ones), 3 * n),
                        "s_nu[e_n]" + at);
        }
        for (const Partition& lam : partitions_upto(4, 3)) {
            if (!f.ok) break;
            std::string at = " nu=" + format_partition(nu) + " lambda=" + format_partition(lam);
            f.expect_eq(plethysm_h_lambda(nu, lam),
                        plethysm_oracle(nu, h_lambda(lam), 3 * static_cast<int>(lam.size())),
                        "s_nu[h_lambda]" + at);
        }
        for (const Partition& lam : partitions_upto(3)) {
            if (!f.ok) break;
            std::string at = " nu=" + format_partition(nu) + " lambda=" + format_partition(lam);
            f.expect_eq(plethysm_e_lambda(nu, lam),
                        plethysm_oracle(nu, e_lambda(lam), 3 * weight(lam)),
                        "s_nu[e_lambda]" + at);
        }
    }
    return f.done("brute-force plethysm oracle");
}

CheckResult check_unity(int max_n, int max_lam) {
    Fail f;
    for (int n = 1; n <= max_n && f.ok; ++n) {
        auto census = type_census_h(n);
        f.expect_eq(census_total(census), h_power_expansion({n}, 3),
                    "type partition of h_n^3 at n=" + std::to_string(n));
    }
    for (const Partition& lam : partitions_upto(max_lam)) {
        if (!f.ok) break;
        auto census = type_census_h_lambda(lam);
        f.expect_eq(census_total(census), h_power_expansion(lam, 3),
                    "type partition of h_lambda^3 at lambda=" + format_partition(lam));
    }
    return f.done("partition of unity vs Pieri powers");
}

CheckResult check_littlewood(int max_n) {
    Fail f;
    for (int n = 1; n <= max_n && f.ok; ++n) {
        std::map<TypeT, SchurExpansion> census;
        for (const Partition& mu : partitions_of(2 * n, 2)) {
            for (const Tableau& t : enumerate_ssyt(mu, {n, n})) census[subtype2(t)].add(mu, 1);
        }
        SchurExpansion even_rows, odd_rows;
        for (int j = 0; 2 * j <= n; ++j)
            even_rows.add(normalized({2 * n - 2 * j, 2 * j}), 1);
        for (int j = 0; 2 * j + 1 <= n; ++j)
            odd_rows.add(normalized({2 * n - 2 * j - 1, 2 * j + 1}), 1);
        std::string at = " at n=" + std::to_string(n);
        f.expect_eq(census[TypeT::R2], even_rows, "s_2[h_n]" + at);
        f.expect_eq(census[TypeT::C2], odd_rows, "s_11[h_n]" + at);
    }
    return f.done("two-factor closed formulas (n <= " + std::to_string(max_n) + ")");
}

CheckResult check_bijection(int max_n) {
    Fail f;
    for (int n = 1; n <= max_n && f.ok; ++n) {
        auto all = enumerate_PPn(n);
        size_t seen = 0;
        for (const Kappa& k : all) {
            Tableau t = kappa_to_tableau(k);
            std::string at = " at n=" + std::to_string(n) + " kappa=(" + std::to_string(k.k1) +
                             "," + std::to_string(k.k2) + "," + std::to_string(k.k3) + "," +
                             std::to_string(k.k4) + "," + std::to_string(k.k5) + ")";
            f.expect(is_semistandard(t), "image tableau semistandard" + at);
            f.expect(content_of(t) == content_n3(n), "image tableau content" + at);
            f.expect(outer_shape(t) == kappa_content(k), "image tableau shape" + at);
            f.expect(tableau_to_kappa(t) == k, "kappa round trip" + at);
            auto word = kappa_word(k);
            f.expect(is_yamanouchi(word), "reading word lattice property" + at);
            std::vector<int> wc(3, 0);
            for (int x : word) ++wc[x - 1];
            while (!wc.empty() && wc.back() == 0) wc.pop_back();
            f.expect(Partition(wc) == kappa_content(k), "reading word content" + at);
        }
        for (const Partition& mu : shapes_3rows(n)) {
            auto ts = enumerate_ssyt(mu, content_n3(n));
            seen += ts.size();
            f.expect(static_cast<long long>(ts.size()) == kostka_n3(mu, n),
                     "tableau count vs closed form at mu=" + format_partition(mu));
            for (const Tableau& t : ts) {
                Kappa k = tableau_to_kappa(t);
                f.expect(k.valid() && k.n() == n,
                         "kappa invariants at T=" + format_tableau(t));
                f.expect(kappa_to_tableau(k) == t, "tableau round trip at T=" + format_tableau(t));
            }
        }
        f.expect(seen == all.size(), "bijection totals at n=" + std::to_string(n));
    }
    return f.done("ribbon bijection round trip (n <= " + std::to_string(max_n) + ")");
}

CheckResult check_polytope_counts(int max_n) {
    Fail f;
    const std::vector<long long> layer = {1, 3, 7, 12, 19, 27, 37};
    const std::vector<long long> cumulative = {1, 4, 11, 23, 42, 69, 106};
    for (int n = 0; n <= 6; ++n) {
        f.expect(static_cast<long long>(enumerate_Pn(n).size()) == layer[n],
                 "projection count at n=" + std::to_string(n));
        f.expect(static_cast<long long>(enumerate_PPn(n).size()) == cumulative[n],
                 "polytope count at n=" + std::to_string(n));
    }
    for (int n = 0; n <= max_n && f.ok; ++n) {
        auto [pn, ppn] = count_formula(n);
        f.expect(pn == static_cast<long long>(enumerate_Pn(n).size()),
                 "projection formula at n=" + std::to_string(n));
        f.expect(ppn == static_cast<long long>(enumerate_PPn(n).size()),
                 "cumulative formula at n=" + std::to_string(n));
    }
    return f.done("polytope point counts (formula to n = " + std::to_string(max_n) + ")");
}

CheckResult check_strands() {
    Fail f;
    const std::vector<size_t> j3_sizes = {0, 1, 4};
    for (int n = 1; n <= 3; ++n)
        f.expect(strand(n, 3).points.size() == j3_sizes[n - 1],
                 "3-strand size at n=" + std::to_string(n));
    for (int j = 0; j <= 12 && f.ok; ++j) {
        auto [n0, cnt] = first_occurrence(j);
        for (int n = 0; n < n0; ++n)
            f.expect(strand(n, j).points.empty(),
                     "strand early at j=" + std::to_string(j) + " n=" + std::to_string(n));
        f.expect(static_cast<int>(strand(n0, j).points.size()) == cnt,
                 "first-occurrence count at j=" + std::to_string(j));
    }
    for (int n = 1; n <= 8 && f.ok; ++n) {
        for (int j = 0; 2 * j <= 3 * n; ++j) {
            auto cur = strand(n, j).points;
            std::string at = " at n=" + std::to_string(n) + " j=" + std::to_string(j);
            f.expect(static_cast<long long>(cur.size()) == kostka_n3({3 * n - j, j}, n),
                     "strand size vs Kostka" + at);
            if (cur.empty()) continue;
            for (size_t i = 0; i + 1 < cur.size(); ++i) {
                auto next = exchange_step(lift(cur[i]));
                f.expect(next.has_value() && *next == lift(cur[i + 1]), "exchange chain" + at);
            }
            f.expect(!exchange_step(lift(cur.back())).has_value(), "strand end" + at);
            f.expect(cur.back() == final_point(n, j), "final point" + at);
            auto prev = (2 * j <= 3 * (n - 1)) ? strand(n - 1, j).points : std::vector<P4>{};
            if (!prev.empty()) {
                size_t diff = cur.size() - prev.size();
                f.expect(diff == 0 || diff == 3, "strand growth" + at);
                for (const P4& p : prev)
                    f.expect(std::find(cur.begin(), cur.end(), include_step(p)) != cur.end(),
                             "inclusion step image" + at);
            }
        }
    }
    return f.done("strand growth and first occurrence");
}

CheckResult check_kronecker() {
    Fail f;
    using TT = TypeT;
    std::map<std::pair<TT, TT>, TT> f22 = {
        {{TT::R2, TT::R2}, TT::R2},
        {{TT::C2, TT::C2}, TT::R2},
        {{TT::R2, TT::C2}, TT::C2},
        {{TT::C2, TT::R2}, TT::C2},
    };
    f.expect(kronecker_F22().table == f22, "two-cell table");
    std::map<std::pair<TT, TT>, TT> f32 = {
        {{TT::R3, TT::R3}, TT::R3},   {{TT::H21, TT::H21}, TT::R3}, {{TT::C3, TT::C3}, TT::R3},
        {{TT::H21, TT::R3}, TT::H21}, {{TT::R3, TT::H21}, TT::H21}, {{TT::C3, TT::H12}, TT::H21},
        {{TT::H12, TT::C3}, TT::H21}, {{TT::H12, TT::H12}, TT::H21},
        {{TT::H12, TT::R3}, TT::H12}, {{TT::R3, TT::H12}, TT::H12}, {{TT::C3, TT::H21}, TT::H12},
        {{TT::H21, TT::C3}, TT::H12}, {{TT::H12, TT::H21}, TT::H12},
        {{TT::R3, TT::C3}, TT::C3},   {{TT::H21, TT::H12}, TT::C3}, {{TT::C3, TT::R3}, TT::C3},
    };
    f.expect(kronecker_F32().table == f32, "three-cell table");
    std::map<TT, int> fiber;
    for (const auto& [pair, val] : kronecker_F32().table) {
        ++fiber[val];
        f.expect(restrict2(val) == kronecker_apply(kronecker_F22(), restrict2(pair.first),
                                                   restrict2(pair.second)),
                 "restriction compatibility");
    }
    f.expect(fiber[TT::R3] == 3 && fiber[TT::H21] == 5 && fiber[TT::H12] == 5 &&
                 fiber[TT::C3] == 3,
             "fiber sizes 3/5/5/3");
    f.expect(kronecker_fold(kronecker_F32(), {TT::H21, TT::H12, TT::H21}) == TT::H12,
             "worked fold value");

    Tableau t = parse_tableau("111233;224459;35688;677;9");
    Partition lam = {3, 2, 2};
    std::vector<Tableau> want = {parse_tableau("111233;22;3"), parse_tableau("112;23;3"),
                                 parse_tableau("11223;3")};
    auto factors = decompose(t, lam, 3);
    f.expect(factors == want, "worked decomposition factors");
    if (factors.size() == 3) {
        f.expect(type_of(factors[0]) == TT::H21 && type_of(factors[1]) == TT::H12 &&
                     type_of(factors[2]) == TT::H21,
                 "worked factor types");
    }
    f.expect(type_of_product(t, lam) == TT::H12, "worked pipeline type");
    return f.done("Kronecker map fibers and worked pipeline");
}

CheckResult check_product() {
    Fail f;
    // Grouping by decomposition factors refines the product expansion.
    for (int m : {2, 3}) {
        for (const Partition& lam : partitions_upto(9 / m)) {
            if (!f.ok) break;
            int nvars = weight(lam) * m;
            std::map<std::string, std::pair<std::vector<Tableau>, SchurExpansion>> groups;
            for (const Tableau& t : all_ssyt_of_content(lambda_power_content(lam, m))) {
                auto factors = decompose(t, lam, m);
                std::string key;
                for (const Tableau& g : factors) key += format_tableau(g) + "|";
                auto& slot = groups[key];
                slot.first = factors;
                slot.second.add(outer_shape(t), 1);
            }
            for (auto& [key, slot] : groups) {
                SchurExpansion prod = schur_unit(outer_shape(slot.first[0]));
                for (size_t i = 1; i < slot.first.size(); ++i)
                    prod = poly_product(prod, schur_unit(outer_shape(slot.first[i])), nvars);
                f.expect_eq(slot.second, prod,
                            "factor-group product at m=" + std::to_string(m) +
                                " lambda=" + format_partition(lam) + " factors=" + key);
            }
        }
    }
    // m = 2 attribution against the oracle.
    for (const Partition& lam : partitions_upto(5)) {
        if (!f.ok) break;
        auto census = type_census_h2_lambda(lam);
        int nvars = 2 * static_cast<int>(lam.size());
        std::string at = " at lambda=" + format_partition(lam);
        f.expect_eq(census[TypeT::R2], plethysm_oracle({2}, h_lambda(lam), nvars),
                    "s_2[h_lambda]" + at);
        f.expect_eq(census[TypeT::C2], plethysm_oracle({1, 1}, h_lambda(lam), nvars),
                    "s_11[h_lambda]" + at);
    }
    return f.done("product decomposition refinement and two-factor attribution");
}

CheckResult check_rules(int max_n) {
    Fail f;
    for (int n = 1; n <= max_n && f.ok; ++n) {
        for (const Partition& mu : shapes_3rows(n)) {
            for (const Tableau& t : enumerate_ssyt(mu, content_n3(n))) {
                TypeT ty = type_of(t);
                Tableau col = add_column(t);
                Tableau row = add_row123(t);
                std::string at = " at T=" + format_tableau(t);
                f.expect(is_semistandard(col) && is_semistandard(row),
                         "grown tableaux semistandard" + at);
                f.expect(type_of(col) == conjugate_type(ty), "column-add conjugation" + at);
                f.expect(type_of(row) == ty, "first-row stability" + at);
            }
        }
    }
    return f.done("column-add conjugation and first-row stability (n <= " +
                  std::to_string(max_n) + ")");
}

std::vector<CheckResult> acceptance_suite() {
    return {
        check_chen(8),
        check_oracle(),
        check_unity(8, 4),
        check_littlewood(10),
        check_bijection(8),
        check_polytope_counts(20),
        check_strands(),
        check_kronecker(),
        check_rules(6),
    };
}

}  // namespace pleth
