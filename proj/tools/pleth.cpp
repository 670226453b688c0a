#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pleth/attribution.hpp"
#include "pleth/io.hpp"
#include "pleth/polytope.hpp"
#include "pleth/product.hpp"
#include "pleth/ribbon.hpp"
#include "pleth/verify.hpp"

using namespace pleth;

namespace {

std::vector<Partition> parse_nu(const std::string& s) {
    if (s == "3") return {{3}};
    if (s == "21") return {{2, 1}};
    if (s == "111") return {{1, 1, 1}};
    if (s == "all") return {{3}, {2, 1}, {1, 1, 1}};
    throw CLI::ValidationError("--nu must be one of 3, 21, 111, all");
}

SchurExpansion expand_one(const std::string& basis, const Partition& lambda, const Partition& nu) {
    if (lambda.size() == 1) {
        return basis == "h" ? plethysm_h(nu, lambda[0]) : plethysm_e(nu, lambda[0]);
    }
    return basis == "h" ? plethysm_h_lambda(nu, lambda) : plethysm_e_lambda(nu, lambda);
}

int run_expand(const std::string& basis, const std::string& lambda_str, int n,
               const std::string& nu_str, const std::string& format) {
    Partition lambda;
    if (!lambda_str.empty()) {
        lambda = parse_partition(lambda_str);
    } else if (n >= 1) {
        lambda = {n};
    } else {
        std::cerr << "expand: one of --lambda or --n is required\n";
        return 2;
    }
    if (lambda.empty()) {
        std::cerr << "expand: the empty partition is not supported\n";
        return 2;
    }
    auto nus = parse_nu(nu_str);
    bool json_many = format == "json" && nus.size() > 1;
    if (json_many) std::cout << "[";
    for (size_t i = 0; i < nus.size(); ++i) {
        const Partition& nu = nus[i];
        SchurExpansion f = expand_one(basis, lambda, nu);
        if (format == "json") {
            if (i) std::cout << ",";
            std::cout << expansion_json(basis, lambda, nu, f);
        } else if (format == "csv") {
            if (nus.size() > 1) std::cout << "# nu=" << format_partition(nu) << "\n";
            std::cout << expansion_csv(f);
        } else {
            std::cout << "s" << format_partition(nu) << "[" << basis << format_partition(lambda)
                      << "] = " << format_expansion(f) << "\n";
        }
    }
    if (json_many) std::cout << "]";
    if (format == "json") std::cout << "\n";
    return 0;
}

int report(const std::vector<CheckResult>& results) {
    bool all_ok = true;
    for (const CheckResult& r : results) {
        std::cout << (r.ok ? "PASS" : "FAIL") << "  " << r.name << "\n";
        if (!r.ok) {
            std::cout << "      " << r.detail << "\n";
            all_ok = false;
        }
    }
    return all_ok ? 0 : 1;
}

int run_verify(int max_n, const std::string& suite) {
    std::vector<CheckResult> results;
    if (suite == "chen" || suite == "all") results.push_back(check_chen(max_n));
    if (suite == "oracle" || suite == "all") results.push_back(check_oracle());
    if (suite == "polytope" || suite == "all") {
        std::cout << "layer counts:";
        for (int n = 0; n <= max_n; ++n) std::cout << " " << enumerate_Pn(n).size();
        std::cout << "\n";
        results.push_back(check_polytope_counts(std::max(max_n, 6)));
        results.push_back(check_strands());
    }
    if (suite == "bijection" || suite == "all") results.push_back(check_bijection(max_n));
    if (suite == "product" || suite == "all") {
        results.push_back(check_kronecker());
        results.push_back(check_product());
    }
    if (suite == "all") {
        results.push_back(check_unity(max_n, std::min(max_n, 4)));
        results.push_back(check_littlewood(max_n));
        results.push_back(check_rules(std::min(max_n, 6)));
    }
    if (results.empty()) {
        std::cerr << "verify: unknown suite " << suite << "\n";
        return 2;
    }
    return report(results);
}

int run_polytope(int n, const std::string& emit) {
    if (emit == "svg") {
        std::cout << polytope_svg(n);
    } else {
        std::cout << polytope_csv(n, emit == "strands");
    }
    return 0;
}

int run_type(const std::string& tableau_str, const std::string& lambda_str) {
    Tableau t = parse_tableau(tableau_str);
    if (!is_semistandard(t)) {
        std::cerr << "type: tableau is not semistandard\n";
        return 2;
    }
    auto content = content_of(t);
    Partition lambda;
    if (!lambda_str.empty()) {
        lambda = parse_partition(lambda_str);
    } else {
        // Infer lambda from the content, which must be lambda^3.
        if (content.size() % 3 != 0) {
            std::cerr << "type: content " << format_partition(normalized(content))
                      << " is not a cube; pass --lambda\n";
            return 2;
        }
        for (size_t i = 0; i < content.size(); i += 3) {
            if (content[i] != content[i + 1] || content[i] != content[i + 2]) {
                std::cerr << "type: content is not of the form lambda^3; pass --lambda\n";
                return 2;
            }
            lambda.push_back(content[i]);
        }
    }
    if (content != lambda_power_content(lambda, 3)) {
        std::cerr << "type: content does not match lambda^3 for lambda="
                  << format_partition(lambda) << "\n";
        return 2;
    }
    auto factors = decompose(t, lambda, 3);
    std::cout << "type: " << type_name(type_of_product(t, lambda)) << "\n";
    for (size_t i = 0; i < factors.size(); ++i) {
        std::cout << "factor " << i + 1 << ": " << format_tableau(factors[i]) << "  type "
                  << type_name(type_of(factors[i])) << "\n";
    }
    if (lambda.size() == 1) {
        Kappa k = tableau_to_kappa(t);
        std::cout << "kappa: (" << k.k1 << "," << k.k2 << "," << k.k3 << "," << k.k4 << ","
                  << k.k5 << ")\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schur-basis cube plethysms by tableau type attribution"};
    app.require_subcommand(1);

    auto* expand = app.add_subcommand("expand", "Schur expansion of s_nu[h_lambda] or s_nu[e_lambda]");
    std::string basis = "h", lambda_str, nu_str = "all", format = "text";
    int n = 0;
    expand->add_option("--basis", basis)->check(CLI::IsMember({"h", "e"}));
    expand->add_option("--lambda", lambda_str, "partition, e.g. 2,1");
    expand->add_option("--n", n, "shorthand for --lambda n");
    expand->add_option("--nu", nu_str)->check(CLI::IsMember({"3", "21", "111", "all"}));
    expand->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));

    auto* verify = app.add_subcommand("verify", "run invariant suites");
    int max_n = 4;
    std::string suite = "all";
    verify->add_option("--max-n", max_n)->check(CLI::Range(1, 12));
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"chen", "oracle", "polytope", "bijection", "product", "all"}));

    auto* polytope = app.add_subcommand("polytope", "emit polytope points / strands / figure");
    int pn = 0;
    std::string emit = "points";
    polytope->add_option("--n", pn)->required()->check(CLI::Range(0, 40));
    polytope->add_option("--emit", emit)->check(CLI::IsMember({"points", "strands", "svg"}));

    auto* type_cmd = app.add_subcommand("type", "type a tableau of content lambda^3");
    std::string tableau_str, type_lambda;
    type_cmd->add_option("--tableau", tableau_str, "rows separated by ';'")->required();
    type_cmd->add_option("--lambda", type_lambda, "content declaration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (expand->parsed()) return run_expand(basis, lambda_str, n, nu_str, format);
        if (verify->parsed()) return run_verify(max_n, suite);
        if (polytope->parsed()) return run_polytope(pn, emit);
        if (type_cmd->parsed()) return run_type(tableau_str, type_lambda);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
