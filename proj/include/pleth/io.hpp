#pragma once

#include <string>

#include "pleth/schur.hpp"
#include "pleth/tableau.hpp"

namespace pleth {

// "4,2,1" (or "4 2 1") -> partition; throws std::invalid_argument.
Partition parse_partition(const std::string& s);

// Rows separated by ';'; entries space-separated or contiguous digits
// ("1123;23"). Throws std::invalid_argument on malformed input.
Tableau parse_tableau(const std::string& s);

std::string format_partition(const Partition& p);  // "(4,2,1)"
std::string format_tableau(const Tableau& t);      // row notation "1123/23"
std::string format_expansion(const SchurExpansion& f);

// JSON for the expand subcommand; terms sorted reverse-lexicographically.
std::string expansion_json(const std::string& basis, const Partition& lambda,
                           const Partition& nu, const SchurExpansion& f);
std::string expansion_csv(const SchurExpansion& f);

// Round-trip reader for the JSON "terms" array (used by tests).
SchurExpansion expansion_from_json(const std::string& json);

// Deterministic SVG scatter of P_n colored by the four types.
std::string polytope_svg(int n);
std::string polytope_csv(int n, bool strands);

}  // namespace pleth
