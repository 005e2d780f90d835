#include "hbp/smith.hpp"

#include <cstdlib>
#include <stdexcept>

#include "hbp/rational.hpp"  // Overflow

namespace hbp {

namespace {

std::int64_t mulck(std::int64_t a, std::int64_t b) {
    __int128 r = static_cast<__int128>(a) * b;
    if (r > INT64_MAX || r < INT64_MIN) throw Overflow();
    return static_cast<std::int64_t>(r);
}

std::int64_t addck(std::int64_t a, std::int64_t b) {
    __int128 r = static_cast<__int128>(a) + b;
    if (r > INT64_MAX || r < INT64_MIN) throw Overflow();
    return static_cast<std::int64_t>(r);
}

void row_addmul(IntMat& m, std::size_t dst, std::size_t src, std::int64_t f) {
    if (f == 0) return;
    for (std::size_t j = 0; j < m[dst].size(); ++j)
        m[dst][j] = addck(m[dst][j], mulck(f, m[src][j]));
}

void col_addmul(IntMat& m, std::size_t dst, std::size_t src, std::int64_t f) {
    if (f == 0) return;
    for (std::size_t i = 0; i < m.size(); ++i)
        m[i][dst] = addck(m[i][dst], mulck(f, m[i][src]));
}

void row_swap(IntMat& m, std::size_t a, std::size_t b) { std::swap(m[a], m[b]); }

void col_swap(IntMat& m, std::size_t a, std::size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
}

void row_neg(IntMat& m, std::size_t a) {
    for (auto& x : m[a]) x = -x;
}

IntMat identity(std::size_t n) {
    IntMat id(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

}  // namespace

SmithResult smith_normal_form(IntMat a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    SmithResult res;
    res.u = identity(rows);
    res.v = identity(cols);

    std::size_t t = 0;
    const std::size_t rank_bound = rows < cols ? rows : cols;
    while (t < rank_bound) {
        // locate minimal nonzero entry in the trailing block
        std::size_t pi = t, pj = t;
        std::int64_t best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                std::int64_t v = a[i][j] < 0 ? -a[i][j] : a[i][j];
                if (v != 0 && (best == 0 || v < best)) { best = v; pi = i; pj = j; }
            }
        if (best == 0) break;
        row_swap(a, t, pi); row_swap(res.u, t, pi);
        col_swap(a, t, pj); col_swap(res.v, t, pj);
        if (a[t][t] < 0) { row_neg(a, t); row_neg(res.u, t); }

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            std::int64_t q = a[i][t] / a[t][t];
            row_addmul(a, i, t, -q); row_addmul(res.u, i, t, -q);
            if (a[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            std::int64_t q = a[t][j] / a[t][t];
            col_addmul(a, j, t, -q); col_addmul(res.v, j, t, -q);
            if (a[t][j] != 0) clean = false;
        }
        if (!clean) continue;  // smaller pivot appeared, redo this corner

        // divisibility pass: pivot must divide the trailing block
        bool divides = true;
        for (std::size_t i = t + 1; i < rows && divides; ++i)
            for (std::size_t j = t + 1; j < cols && divides; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    row_addmul(a, t, i, 1); row_addmul(res.u, t, i, 1);
                    divides = false;
                }
        if (divides) ++t;
    }
    res.d = std::move(a);
    return res;
}

std::optional<std::vector<std::int64_t>> solve_integer(const IntMat& a,
                                                       const std::vector<std::int64_t>& b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    if (b.size() != rows) throw std::invalid_argument("solve_integer: shape mismatch");
    SmithResult s = smith_normal_form(a);
    // a = u^-1 d v^-1, solve d y = u b, then x = v y.
    std::vector<std::int64_t> ub(rows, 0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < rows; ++j) ub[i] = addck(ub[i], mulck(s.u[i][j], b[j]));
    std::vector<std::int64_t> y(cols, 0);
    const std::size_t nmin = rows < cols ? rows : cols;
    for (std::size_t i = 0; i < rows; ++i) {
        std::int64_t di = i < nmin ? s.d[i][i] : 0;
        if (di == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % di != 0) return std::nullopt;
            y[i] = ub[i] / di;
        }
    }
    std::vector<std::int64_t> x(cols, 0);
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = 0; j < cols; ++j) x[i] = addck(x[i], mulck(s.v[i][j], y[j]));
    return x;
}

std::optional<std::vector<std::int64_t>> solve_mod(const IntMat& a,
                                                   const std::vector<std::int64_t>& b,
                                                   std::int64_t m) {
    if (m <= 0) throw std::invalid_argument("solve_mod: modulus must be positive");
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    if (m == 1) return std::vector<std::int64_t>(cols, 0);
    // lifted system [a | m*I] (x, k)^T = b over Z
    IntMat lifted(rows, std::vector<std::int64_t>(cols + rows, 0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) lifted[i][j] = a[i][j];
        lifted[i][cols + i] = m;
    }
    auto sol = solve_integer(lifted, b);
    if (!sol) return std::nullopt;
    std::vector<std::int64_t> x(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        std::int64_t v = (*sol)[j] % m;
        if (v < 0) v += m;
        x[j] = v;
    }
    return x;
}

}  // namespace hbp
