#include <doctest.h>

#include <random>
#include <stdexcept>

#include "pleth/type_tableau.hpp"
#include "pleth/oracle.hpp"
#include "pleth/schur.hpp"
#include "pleth/tableau.hpp"

using namespace pleth;

TEST_CASE("pieri rule") {
    CHECK(pieri_h(schur_unit({}), 3) == schur_unit({3}));
    SchurExpansion want;
    want.add({4}, 1);
    want.add({3, 1}, 1);
    want.add({2, 2}, 1);
    CHECK(pieri_h(schur_unit({2}), 2) == want);

    for (int n = 1; n <= 6; ++n) {
        SchurExpansion cube = h_power_expansion({n}, 3);
        for (const auto& [mu, c] : cube.terms) CHECK(c == kostka_n3(mu, n));
        long long total = 0;
        for (const Partition& mu : partitions_of(3 * n, 3)) total += kostka_n3(mu, n);
        long long got = 0;
        for (const auto& [mu, c] : cube.terms) got += c;
        CHECK(got == total);
    }
}

TEST_CASE("h_power_expansion") {
    SchurExpansion cube1 = h_power_expansion({1}, 3);
    CHECK(cube1.coeff({3}) == 1);
    CHECK(cube1.coeff({2, 1}) == 2);
    CHECK(cube1.coeff({1, 1, 1}) == 1);
    CHECK(h_power_expansion({5}, 1) == schur_unit({5}));
    CHECK(h_power_expansion({2}, 3).coeff({4, 2}) == 3);

    // Coefficients equal SSYT counts of content lambda^m.
    for (const Partition& lam : {Partition{2, 1}, Partition{3, 1}, Partition{2, 2}}) {
        for (int m = 1; m <= 3; ++m) {
            if (weight(lam) * m > 12) continue;
            std::vector<int> content;
            for (int part : lam)
                for (int i = 0; i < m; ++i) content.push_back(part);
            SchurExpansion f = h_power_expansion(lam, m);
            for (const auto& [mu, c] : f.terms)
                CHECK(static_cast<size_t>(c) == enumerate_ssyt(mu, content).size());
        }
    }
}

TEST_CASE("omega and scalar product") {
    CHECK(omega(schur_unit({4})) == schur_unit({1, 1, 1, 1}));
    CHECK(omega(schur_unit({2, 1})) == schur_unit({2, 1}));
    SchurExpansion f = h_power_expansion({2}, 3);
    CHECK(omega(omega(f)) == f);
    CHECK(scalar_product(schur_unit({3, 1}), schur_unit({3, 1})) == 1);
    CHECK(scalar_product(schur_unit({3, 1}), schur_unit({2, 2})) == 0);
    CHECK(scalar_product(h_power_expansion({2}, 3), schur_unit({4, 2})) == 3);
    CHECK(scalar_product(omega(f), omega(f)) == scalar_product(f, f));
    CHECK(scalar_product(schur_unit({2}), schur_unit({3})) == 0);  // degree mismatch
}

TEST_CASE("expand_in_vars against direct SSYT sums") {
    CHECK(expand_in_vars(schur_unit({1}), 2).terms.size() == 2);
    CHECK(expand_in_vars(schur_unit({1, 1, 1}), 2).terms.empty());
    DensePoly sq = expand_in_vars(schur_unit({2}), 2);
    CHECK(sq.terms.size() == 3);
    CHECK(sq.terms.at({1, 1}) == 1);

    for (const Partition& lam :
         {Partition{3}, Partition{2, 1}, Partition{2, 2}, Partition{3, 2, 1}, Partition{4, 1}}) {
        for (int nvars = 1; nvars <= 4; ++nvars) {
            DensePoly direct;
            direct.nvars = nvars;
            for (const Tableau& t : enumerate_ssyt_maxentry(lam, nvars)) {
                std::vector<int> e(nvars, 0);
                for (const auto& row : t.rows)
                    for (int v : row) ++e[v - 1];
                direct.add(e, 1);
            }
            CHECK(expand_in_vars(schur_unit(lam), nvars) == direct);
        }
    }
}

TEST_CASE("schur_extract") {
    CHECK(schur_extract(expand_in_vars(schur_unit({3, 1}), 3)) == schur_unit({3, 1}));
    DensePoly sq = expand_in_vars(schur_unit({2}), 2);
    CHECK(schur_extract(sq) == schur_unit({2}));
    CHECK(schur_extract(DensePoly{3, {}}).empty());
    DensePoly bad;
    bad.nvars = 2;
    bad.add({2, 0}, 1);  // x1^2 alone is not symmetric
    CHECK_THROWS_AS(schur_extract(bad), std::runtime_error);

    std::mt19937 rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        int deg = 1 + static_cast<int>(rng() % 8);
        int nvars = 3;
        SchurExpansion f;
        for (const Partition& mu : partitions_of(deg, nvars))
            if (rng() % 2) f.add(mu, 1 + static_cast<int>(rng() % 5));
        CHECK(schur_extract(expand_in_vars(f, nvars)) == f);
    }
}

TEST_CASE("poly_product") {
    CHECK(poly_product(schur_unit({2, 1}), schur_unit({}), 3) == schur_unit({2, 1}));
    SchurExpansion sq;
    sq.add({2}, 1);
    sq.add({1, 1}, 1);
    CHECK(poly_product(schur_unit({1}), schur_unit({1}), 2) == sq);
    SchurExpansion want;
    want.add({3, 1}, 1);
    want.add({2, 2}, 1);
    want.add({2, 1, 1}, 1);
    CHECK(poly_product(schur_unit({2, 1}), schur_unit({1}), 4) == want);
    // Product by s_(n) agrees with the Pieri rule.
    CHECK(poly_product(schur_unit({3, 1}), schur_unit({2}), 4) ==
          pieri_h(schur_unit({3, 1}), 2));
}

TEST_CASE("plethysm oracle basics") {
    for (const SchurExpansion& g :
         {schur_unit({3}), schur_unit({1, 1}), h_lambda({2, 1})}) {
        CHECK(plethysm_oracle({1}, g, 6) == g);
    }
    SchurExpansion s2h2 = plethysm_oracle({2}, schur_unit({2}), 4);
    SchurExpansion want2;
    want2.add({4}, 1);
    want2.add({2, 2}, 1);
    CHECK(s2h2 == want2);
    CHECK(plethysm_oracle({1, 1}, schur_unit({2}), 4) == schur_unit({3, 1}));

    for (int n = 1; n <= 4; ++n) {
        SchurExpansion total;
        for (const Partition& nu : {Partition{3}, Partition{2, 1}, Partition{1, 1, 1}}) {
            SchurExpansion part = plethysm_oracle(nu, schur_unit({n}), 3);
            for (const auto& [mu, c] : part.terms) CHECK(c > 0);
            total = sum(total, scaled(part, count_f(nu)));
        }
        CHECK(total == h_power_expansion({n}, 3));
    }
}

TEST_CASE("oracle omega compatibility") {
    for (int n = 1; n <= 3; ++n) {
        Partition ones(n, 1);
        for (const Partition& nu : {Partition{3}, Partition{2, 1}, Partition{1, 1, 1}}) {
            SchurExpansion e_side = plethysm_oracle(nu, schur_unit(ones), 3 * n);
            Partition nu_eff = n % 2 == 0 ? nu : conjugate(nu);
            CHECK(e_side == omega(plethysm_oracle(nu_eff, schur_unit({n}), 3)));
        }
    }
}

TEST_CASE("weighted substitution agrees with explicit monomial multiset") {
    struct Case {
        SchurExpansion g;
        int nvars;
    };
    std::vector<Case> cases = {{schur_unit({2}), 3},
                               {schur_unit({1, 1}), 6},
                               {h_lambda({1, 1}), 6},
                               {h_lambda({2, 1}), 6}};
    for (const auto& [g, nvars] : cases) {
        DensePoly gp = expand_in_vars(g, nvars);
        std::vector<std::vector<int>> ys;  // monomials with multiplicity
        for (const auto& [e, c] : gp.terms)
            for (long long i = 0; i < c; ++i) ys.push_back(e);
        int big = static_cast<int>(ys.size());
        for (const Partition& nu : {Partition{3}, Partition{2, 1}, Partition{1, 1, 1},
                                    Partition{2}, Partition{1, 1}}) {
            DensePoly naive;
            naive.nvars = nvars;
            for (const Tableau& t : enumerate_ssyt_maxentry(nu, big)) {
                std::vector<int> e(nvars, 0);
                for (const auto& row : t.rows)
                    for (int v : row)
                        for (int i = 0; i < nvars; ++i) e[i] += ys[v - 1][i];
                naive.add(e, 1);
            }
            CHECK(schur_extract(naive) == plethysm_oracle(nu, g, nvars));
        }
    }
}

TEST_CASE("h_lambda and e_lambda") {
    CHECK(h_lambda({2}) == schur_unit({2}));
    SchurExpansion h11;
    h11.add({2}, 1);
    h11.add({1, 1}, 1);
    CHECK(h_lambda({1, 1}) == h11);
    CHECK(e_lambda({2}) == schur_unit({1, 1}));
    CHECK(e_lambda({2, 1}) == omega(h_lambda({2, 1})));
}
