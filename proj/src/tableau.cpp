#include "pleth/tableau.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace pleth {

bool Tableau::straight() const {
    for (int z : inner) {
        if (z != 0) return false;
    }
    return true;
}

Partition outer_shape(const Tableau& t) {
    std::vector<int> s;
    for (int r = 0; r < t.nrows(); ++r) s.push_back(t.outer_at(r));
    while (!s.empty() && s.back() == 0) s.pop_back();
    return s;
}

Partition inner_shape(const Tableau& t) {
    std::vector<int> s;
    for (int r = 0; r < t.nrows(); ++r) s.push_back(t.inner_at(r));
    while (!s.empty() && s.back() == 0) s.pop_back();
    return s;
}

std::vector<int> content_of(const Tableau& t) {
    std::vector<int> c;
    for (const auto& row : t.rows) {
        for (int e : row) {
            if (e < 1) throw std::invalid_argument("entries must be positive");
            if (e > static_cast<int>(c.size())) c.resize(e, 0);
            ++c[e - 1];
        }
    }
    return c;
}

// entry at (r, col) in outer coordinates, or 0 when empty/outside
static int cell_at(const Tableau& t, int r, int col) {
    if (r < 0 || r >= t.nrows()) return 0;
    int z = t.inner_at(r);
    if (col < z || col >= t.outer_at(r)) return 0;
    return t.rows[r][col - z];
}

static bool shape_ok(const Tableau& t) {
    for (int r = 0; r < t.nrows(); ++r) {
        if (t.inner_at(r) < 0) return false;
        if (r + 1 < t.nrows()) {
            if (t.outer_at(r) < t.outer_at(r + 1)) return false;
            if (t.inner_at(r) < t.inner_at(r + 1)) return false;
        }
    }
    return !t.rows.empty() ? t.outer_at(t.nrows() - 1) >= 0 : true;
}

bool is_semistandard(const Tableau& t) {
    if (!shape_ok(t)) return false;
    for (int r = 0; r < t.nrows(); ++r) {
        const auto& row = t.rows[r];
        for (size_t i = 0; i < row.size(); ++i) {
            if (row[i] < 1) return false;
            if (i + 1 < row.size() && row[i] > row[i + 1]) return false;
        }
        if (r > 0) {
            for (int col = t.inner_at(r); col < t.outer_at(r); ++col) {
                int above = cell_at(t, r - 1, col);
                if (above != 0 && above >= cell_at(t, r, col)) return false;
            }
        }
    }
    return true;
}

bool is_conjugate_semistandard(const Tableau& t) {
    if (!shape_ok(t)) return false;
    for (int r = 0; r < t.nrows(); ++r) {
        const auto& row = t.rows[r];
        for (size_t i = 0; i < row.size(); ++i) {
            if (row[i] < 1) return false;
            if (i + 1 < row.size() && row[i] >= row[i + 1]) return false;
        }
        if (r > 0) {
            for (int col = t.inner_at(r); col < t.outer_at(r); ++col) {
                int above = cell_at(t, r - 1, col);
                if (above != 0 && above > cell_at(t, r, col)) return false;
            }
        }
    }
    return true;
}

Tableau transpose(const Tableau& t) {
    if (!t.straight()) throw std::invalid_argument("transpose needs a straight shape");
    Tableau out;
    if (t.rows.empty()) return out;
    out.rows.resize(t.rows[0].size());
    for (int r = 0; r < t.nrows(); ++r) {
        for (size_t c = 0; c < t.rows[r].size(); ++c) out.rows[c].push_back(t.rows[r][c]);
    }
    return out;
}

Tableau restrict_to(const Tableau& t, int ell) {
    if (!t.straight()) throw std::invalid_argument("restrict needs a straight shape");
    Tableau out;
    for (const auto& row : t.rows) {
        std::vector<int> kept;
        for (int e : row) {
            if (e <= ell) kept.push_back(e);
        }
        if (kept.empty()) break;
        out.rows.push_back(std::move(kept));
    }
    return out;
}

std::optional<Tableau> concat_rows(const Tableau& a, const Tableau& b) {
    if (!a.straight() || !b.straight())
        throw std::invalid_argument("concat_rows needs straight shapes");
    Tableau out;
    int n = std::max(a.nrows(), b.nrows());
    out.rows.resize(n);
    for (int r = 0; r < n; ++r) {
        if (r < a.nrows()) out.rows[r] = a.rows[r];
        if (r < b.nrows())
            out.rows[r].insert(out.rows[r].end(), b.rows[r].begin(), b.rows[r].end());
        std::sort(out.rows[r].begin(), out.rows[r].end());
    }
    if (!is_semistandard(out)) return std::nullopt;
    return out;
}

// --- jeu de taquin --------------------------------------------------------

namespace {

// grid rows of full outer length; leading zeros are the empty inner cells
using Grid = std::vector<std::vector<int>>;

int lead_zeros(const std::vector<int>& row) {
    int z = 0;
    while (z < static_cast<int>(row.size()) && row[z] == 0) ++z;
    return z;
}

void slide_from(Grid& g, int r) {
    int c = lead_zeros(g[r]) - 1;
    assert(c >= 0);
    for (;;) {
        bool has_right = c + 1 < static_cast<int>(g[r].size());
        bool has_below = r + 1 < static_cast<int>(g.size()) &&
                         c < static_cast<int>(g[r + 1].size()) && g[r + 1][c] != 0;
        if (!has_right && !has_below) {
            g[r].pop_back();
            if (g[r].empty()) {
                assert(r + 1 == static_cast<int>(g.size()));
                g.pop_back();
            }
            return;
        }
        bool take_below = has_below && (!has_right || g[r + 1][c] <= g[r][c + 1]);
        if (take_below) {
            g[r][c] = g[r + 1][c];
            ++r;
        } else {
            g[r][c] = g[r][c + 1];
            ++c;
        }
    }
}

Tableau rectify_impl(const Tableau& t,
                     const std::function<int(const std::vector<int>&)>* pick) {
    if (!is_semistandard(t)) throw std::invalid_argument("jdt: input not semistandard");
    Grid g;
    for (int r = 0; r < t.nrows(); ++r) {
        std::vector<int> row(t.inner_at(r), 0);
        row.insert(row.end(), t.rows[r].begin(), t.rows[r].end());
        g.push_back(std::move(row));
    }
    while (!g.empty() && g.back().empty()) g.pop_back();
    for (;;) {
        std::vector<int> corners;
        for (int r = 0; r < static_cast<int>(g.size()); ++r) {
            int z = lead_zeros(g[r]);
            int below = r + 1 < static_cast<int>(g.size()) ? lead_zeros(g[r + 1]) : 0;
            if (z > 0 && z > below) corners.push_back(r);
        }
        if (corners.empty()) break;
        int idx = pick ? (*pick)(corners) : 0;
        slide_from(g, corners[idx]);
    }
    Tableau out;
    out.rows = std::move(g);
    return out;
}

}  // namespace

Tableau jdt_rectify(const Tableau& t) { return rectify_impl(t, nullptr); }

Tableau jdt_rectify_order(const Tableau& t,
                          const std::function<int(const std::vector<int>&)>& pick) {
    return rectify_impl(t, &pick);
}

// --- enumeration ----------------------------------------------------------

namespace {

struct SsytSearch {
    Partition shape;
    std::vector<int> rem;  // rem[e-1] = remaining uses of entry e (empty: unlimited)
    int max_entry;
    bool use_content;
    std::vector<std::vector<int>> grid;
    std::vector<Tableau> out;

    void rec(int r, int c) {
        if (r == static_cast<int>(shape.size())) {
            Tableau t;
            t.rows = grid;
            out.push_back(std::move(t));
            return;
        }
        if (c == shape[r]) {
            rec(r + 1, 0);
            return;
        }
        int lo = c > 0 ? grid[r][c - 1] : 1;
        if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);
        for (int e = lo; e <= max_entry; ++e) {
            if (use_content) {
                if (rem[e - 1] == 0) continue;
                --rem[e - 1];
            }
            grid[r][c] = e;
            rec(r, c + 1);
            if (use_content) ++rem[e - 1];
        }
    }
};

}  // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& shape, const std::vector<int>& content) {
    long long total = 0;
    for (int m : content) total += m;
    if (weight(shape) != total) return {};
    SsytSearch s;
    s.shape = shape;
    s.rem = content;
    s.max_entry = static_cast<int>(content.size());
    s.use_content = true;
    for (int len : shape) s.grid.emplace_back(len, 0);
    s.rec(0, 0);
    return std::move(s.out);
}

std::vector<Tableau> enumerate_ssyt_maxentry(const Partition& shape, int max_entry) {
    SsytSearch s;
    s.shape = shape;
    s.max_entry = max_entry;
    s.use_content = false;
    for (int len : shape) s.grid.emplace_back(len, 0);
    s.rec(0, 0);
    return std::move(s.out);
}

long long kostka_n3(const Partition& mu, int n) {
    if (mu.size() > 3 || weight(mu) != 3ll * n) return 0;
    int m1 = part_at(mu, 1), m2 = part_at(mu, 2), m3 = part_at(mu, 3);
    return std::min(m1 - m2, m2 - m3) + 1;
}

std::vector<int> content_n3(int n) { return {n, n, n}; }

}  // namespace pleth
