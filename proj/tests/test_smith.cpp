#include <doctest.h>

#include <random>

#include "hbp/smith.hpp"

using namespace hbp;

namespace {

// independent check: u a v == d with the returned transforms
IntMat matmul(const IntMat& a, const IntMat& b) {
    IntMat r(a.size(), std::vector<std::int64_t>(b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

}  // namespace

TEST_CASE("smith normal form: diagonal, divisibility, transforms") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dim(1, 6), val(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        int r = dim(rng), c = dim(rng);
        IntMat a(r, std::vector<std::int64_t>(c));
        for (auto& row : a)
            for (auto& x : row) x = val(rng);
        SmithResult s = smith_normal_form(a);
        IntMat uav = matmul(matmul(s.u, a), s.v);
        CHECK(uav == s.d);
        for (std::size_t i = 0; i < s.d.size(); ++i)
            for (std::size_t j = 0; j < s.d[0].size(); ++j)
                if (i != j) CHECK(s.d[i][j] == 0);
        std::size_t n = std::min(s.d.size(), s.d[0].size());
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (s.d[i + 1][i + 1] != 0) {
                REQUIRE(s.d[i][i] != 0);
                CHECK(s.d[i + 1][i + 1] % s.d[i][i] == 0);
            }
        }
    }
}

TEST_CASE("solve_integer solves solvable systems and rejects unsolvable ones") {
    // 2x + 4y = 6 solvable; 2x + 4y = 3 not
    IntMat a{{2, 4}};
    auto s1 = solve_integer(a, {6});
    REQUIRE(s1.has_value());
    CHECK(2 * (*s1)[0] + 4 * (*s1)[1] == 6);
    CHECK_FALSE(solve_integer(a, {3}).has_value());
}

TEST_CASE("solve_mod agrees with exhaustive search on random small systems") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> dim(1, 3), val(-4, 4);
    const std::int64_t mods[] = {2, 3, 4, 6, 8};
    for (int trial = 0; trial < 300; ++trial) {
        std::int64_t m = mods[trial % 5];
        int r = dim(rng), c = dim(rng);
        IntMat a(r, std::vector<std::int64_t>(c));
        for (auto& row : a)
            for (auto& x : row) x = val(rng);
        std::vector<std::int64_t> b(r);
        for (auto& x : b) x = val(rng);

        // oracle: iterate all m^c candidate vectors
        bool exists = false;
        std::vector<std::int64_t> x(c, 0);
        for (;;) {
            bool ok = true;
            for (int i = 0; i < r && ok; ++i) {
                std::int64_t acc = 0;
                for (int j = 0; j < c; ++j) acc += a[i][j] * x[j];
                if (((acc - b[i]) % m + m) % m != 0) ok = false;
            }
            if (ok) { exists = true; break; }
            int j = 0;
            for (; j < c; ++j) {
                if (++x[j] < m) break;
                x[j] = 0;
            }
            if (j == c) break;
        }

        auto got = solve_mod(a, b, m);
        CHECK(got.has_value() == exists);
        if (got) {
            for (int i = 0; i < r; ++i) {
                std::int64_t acc = 0;
                for (int j = 0; j < c; ++j) acc += a[i][j] * (*got)[j];
                CHECK(((acc - b[i]) % m + m) % m == 0);
            }
        }
    }
}
