#include "pleth/io.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "pleth/polytope.hpp"

namespace pleth {

Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    auto flush = [&](const std::string& piece) {
        if (piece.empty()) return;
        size_t pos = 0;
        int v = std::stoi(piece, &pos);
        if (pos != piece.size()) throw std::invalid_argument("bad partition: " + s);
        parts.push_back(v);
    };
    std::string piece;
    for (char c : s) {
        if (c == ',' || c == ' ') {
            flush(piece);
            piece.clear();
        } else {
            piece.push_back(c);
        }
    }
    flush(piece);
    try {
        return normalized(parts);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad partition: " + s);
    }
}

Tableau parse_tableau(const std::string& s) {
    Tableau t;
    std::istringstream in(s);
    std::string row_str;
    while (std::getline(in, row_str, ';')) {
        std::vector<int> row;
        if (row_str.find(' ') != std::string::npos) {
            std::istringstream rin(row_str);
            int v;
            while (rin >> v) row.push_back(v);
        } else {
            for (char c : row_str) {
                if (c < '1' || c > '9') throw std::invalid_argument("bad tableau row: " + row_str);
                row.push_back(c - '0');
            }
        }
        if (row.empty()) throw std::invalid_argument("empty tableau row");
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string format_partition(const Partition& p) {
    std::string out = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p[i]);
    }
    return out + ")";
}

std::string format_tableau(const Tableau& t) {
    std::string out;
    for (int r = 0; r < t.nrows(); ++r) {
        if (r) out += "/";
        for (int i = 0; i < t.inner_at(r); ++i) out += ".";
        for (int e : t.rows[r]) out += std::to_string(e);
    }
    return out;
}

std::string format_expansion(const SchurExpansion& f) {
    if (f.empty()) return "0";
    std::string out;
    for (const auto& [mu, c] : f.terms) {
        if (!out.empty()) out += " + ";
        if (c != 1) out += std::to_string(c) + "*";
        out += "s" + format_partition(mu);
    }
    return out;
}

std::string expansion_json(const std::string& basis, const Partition& lambda,
                           const Partition& nu, const SchurExpansion& f) {
    nlohmann::ordered_json j;
    j["basis"] = basis;
    j["lambda"] = lambda;
    j["nu"] = nu;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [mu, c] : f.terms) {
        j["terms"].push_back({{"mu", mu}, {"coeff", c}});
    }
    return j.dump();
}

std::string expansion_csv(const SchurExpansion& f) {
    std::string out = "mu,coeff\n";
    for (const auto& [mu, c] : f.terms) {
        std::string mu_str;
        for (size_t i = 0; i < mu.size(); ++i) {
            if (i) mu_str += " ";
            mu_str += std::to_string(mu[i]);
        }
        out += mu_str + "," + std::to_string(c) + "\n";
    }
    return out;
}

SchurExpansion expansion_from_json(const std::string& json) {
    auto j = nlohmann::json::parse(json);
    SchurExpansion f;
    for (const auto& term : j.at("terms")) {
        Partition mu = term.at("mu").get<std::vector<int>>();
        f.add(mu, term.at("coeff").get<long long>());
    }
    return f;
}

std::string polytope_csv(int n, bool strands) {
    std::ostringstream out;
    out << "kappa1,kappa2,kappa3,kappa4,j,type\n";
    auto emit = [&](const P4& p) {
        out << p.k1 << "," << p.k2 << "," << p.k3 << "," << p.k4 << "," << strand_j(p)
            << "," << type_name(point_type(p)) << "\n";
    };
    if (strands) {
        for (int j = 0; 2 * j <= 3 * n; ++j) {
            for (const P4& p : strand(n, j).points) emit(p);
        }
    } else {
        for (const P4& p : enumerate_Pn(n)) emit(p);
    }
    return out.str();
}

std::string polytope_svg(int n) {
    static const std::map<TypeT, std::string> palette = {
        {TypeT::R3, "#e91e8c"},   // pink, row type
        {TypeT::H21, "#2e7d32"},  // green
        {TypeT::H12, "#1565c0"},  // blue
        {TypeT::C3, "#ef6c00"},   // orange, column type
    };
    const int unit = 28, pad = 40;
    int width = 2 * unit * n + 2 * pad, height = unit * (n + 1) + 2 * pad;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\">\n";
    for (const P4& p : enumerate_Pn(n)) {
        int x = pad + unit * n + unit * (p.k2 - p.k1);
        int y = height - pad - unit * p.k4 - (p.k3 * unit) / 3;
        out << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"6\" fill=\""
            << palette.at(point_type(p)) << "\"><title>(" << p.k1 << "," << p.k2 << ","
            << p.k3 << "," << p.k4 << ") j=" << strand_j(p) << " type="
            << type_name(point_type(p)) << "</title></circle>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace pleth
