#pragma once

#include <string>
#include <vector>

namespace pleth {

struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail;  // first failure report, empty on pass
};

CheckResult check_chen(int max_n);                 // type census vs Chen's formulas
CheckResult check_oracle();                        // attribution vs brute-force plethysm
CheckResult check_unity(int max_n, int max_lam);   // sum of copies vs Pieri power
CheckResult check_littlewood(int max_n);           // m = 2 closed formulas
CheckResult check_bijection(int max_n);            // tableau <-> kappa round trip
CheckResult check_polytope_counts(int max_n);      // point counts vs closed formula
CheckResult check_strands();                       // strand growth / first occurrence
CheckResult check_kronecker();                     // F tables + worked pipeline
CheckResult check_product();                       // Dec_m grouping vs Schur products
CheckResult check_rules(int max_n);                // column-add / first-row stability

// The nine acceptance criteria, in order, at the documented bounds.
std::vector<CheckResult> acceptance_suite();

}  // namespace pleth
