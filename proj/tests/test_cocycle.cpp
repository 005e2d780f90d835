#include <doctest.h>

#include <numeric>
#include <random>

#include "hbp/cocycle.hpp"

using namespace hbp;

namespace {

// sigma((a,b),(c,d)) = b*c on Z/2 x Z/2 with M = 2 (positional encoding:
// element = a + 2b)
Cocycle make_sigma(const Subgroup& v4) {
    Cocycle s = trivial_cocycle(v4, 2);
    const auto& g = *v4.parent();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            auto ci = g.coords(v4.member(i));
            auto cj = g.coords(v4.member(j));
            s.values[i][j] = static_cast<std::uint32_t>((ci[1] * cj[0]) % 2);
        }
    return s;
}

// oracle: search all M^(|F|-1) normalized functions c for a coboundary witness
bool witness_exists_exhaustive(const Cocycle& psi) {
    const auto& f = psi.domain;
    const auto& g = *f.parent();
    const int n = f.size();
    const int e = f.local_index(g.identity);
    const std::int64_t m = psi.modulus;
    std::vector<std::int64_t> c(n, 0);
    for (;;) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                int ij = f.local_index(g.mul[f.member(i)][f.member(j)]);
                if (((c[i] + c[j] - c[ij]) % m + m) % m != psi.values[i][j]) ok = false;
            }
        if (ok) return true;
        int i = 0;
        for (; i < n; ++i) {
            if (i == e) continue;
            if (++c[i] < m) break;
            c[i] = 0;
        }
        if (i == n) return false;
    }
}

std::mt19937 rng(42);

Cocycle random_cocycle(const Subgroup& f, std::uint32_t m) {
    // random coboundary plus a random bilinear staircase: always a cocycle
    std::uniform_int_distribution<int> val(0, static_cast<int>(m) - 1);
    const auto& g = *f.parent();
    std::vector<std::int64_t> c(f.size());
    for (auto& x : c) x = val(rng);
    c[f.local_index(g.identity)] = 0;
    Cocycle out = coboundary_of(f, m, c);
    if (g.is_abelian()) {
        auto basis = abelian_basis(f);
        const int r = static_cast<int>(basis.gens.size());
        std::vector<std::vector<std::uint32_t>> bmat(r, std::vector<std::uint32_t>(r, 0));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < i; ++j) {
                // entry must kill both generator orders inside Z/m
                std::uint32_t step = m / std::gcd(std::gcd(basis.orders[i], basis.orders[j]),
                                                  static_cast<int>(m));
                std::uniform_int_distribution<std::uint32_t> pick(0, m / step == 0 ? 0 : m / step - 1);
                bmat[i][j] = (pick(rng) * step) % m;
            }
        for (int a = 0; a < f.size(); ++a)
            for (int b = 0; b < f.size(); ++b) {
                std::int64_t acc = out.values[a][b];
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < i; ++j)
                        acc += static_cast<std::int64_t>(bmat[i][j]) * basis.coord[a][i] *
                               basis.coord[b][j];
                out.values[a][b] = static_cast<std::uint32_t>(acc % m);
            }
    }
    return out;
}

}  // namespace

TEST_CASE("check_cocycle: zero table, bilinear sigma, perturbed table") {
    auto v4 = make_cyclic_product({2, 2});
    auto w = whole_group(v4);
    CHECK(check_cocycle(trivial_cocycle(w, 4)));

    Cocycle sigma = make_sigma(w);
    CHECK(check_cocycle(sigma));

    Cocycle bad = sigma;
    bad.values[2][1] = (bad.values[2][1] + 1) % 2;
    CHECK_FALSE(check_cocycle(bad));
}

TEST_CASE("coboundary witness: zero cocycle, sigma has none, delta round trip") {
    auto v4 = make_cyclic_product({2, 2});
    auto w = whole_group(v4);

    auto zero = trivial_cocycle(w, 2);
    auto wit = coboundary_witness(zero);
    REQUIRE(wit.has_value());
    for (auto v : *wit) CHECK(v == 0);

    Cocycle sigma = make_sigma(w);
    CHECK_FALSE(coboundary_witness(sigma).has_value());
    CHECK_FALSE(witness_exists_exhaustive(sigma));  // oracle agrees

    // any delta(c) has a witness and the witness reconstructs the input
    std::vector<std::int64_t> c{0, 1, 1, 0};
    Cocycle d = coboundary_of(w, 2, c);
    auto wd = coboundary_witness(d);
    REQUIRE(wd.has_value());
    Cocycle re = coboundary_of(w, 2, *wd);
    CHECK(re.values == d.values);
}

TEST_CASE("solver agrees with exhaustive search on >= 120 random cocycles") {
    struct Case { std::vector<int> inv; std::uint32_t m; };
    // all satisfy m^(|F|) <= 2^20
    std::vector<Case> cases{{{2, 2}, 2}, {{4}, 4}, {{2}, 8}, {{6}, 6}, {{3}, 3}, {{8}, 2}};
    int total = 0;
    for (const auto& cs : cases) {
        auto g = make_cyclic_product(cs.inv);
        auto w = whole_group(g);
        for (int t = 0; t < 20; ++t) {
            Cocycle psi = random_cocycle(w, cs.m);
            REQUIRE(check_cocycle(psi));
            bool fast = coboundary_witness(psi).has_value();
            bool slow = witness_exists_exhaustive(psi);
            CHECK(fast == slow);
            ++total;
        }
    }
    CHECK(total >= 120);
}

TEST_CASE("cohomologous: reflexive, detects sigma vs zero, coboundary shifts") {
    auto v4 = make_cyclic_product({2, 2});
    auto w = whole_group(v4);
    Cocycle sigma = make_sigma(w);
    CHECK(cohomologous(sigma, sigma));
    CHECK_FALSE(cohomologous(trivial_cocycle(w, 2), sigma));
    std::vector<std::int64_t> c{0, 1, 0, 1};
    CHECK(cohomologous(sigma, add(sigma, coboundary_of(w, 2, c))));
}

TEST_CASE("cohomologous is an equivalence relation on sampled cocycles") {
    auto z4 = make_cyclic_product({4});
    auto w = whole_group(z4);
    std::vector<Cocycle> sample;
    for (int i = 0; i < 6; ++i) sample.push_back(random_cocycle(w, 4));
    for (const auto& a : sample) CHECK(cohomologous(a, a));
    for (const auto& a : sample)
        for (const auto& b : sample) CHECK(cohomologous(a, b) == cohomologous(b, a));
    for (const auto& a : sample)
        for (const auto& b : sample)
            for (const auto& c : sample)
                if (cohomologous(a, b) && cohomologous(b, c)) CHECK(cohomologous(a, c));
}

TEST_CASE("restrict and conjugation pullback") {
    auto v4 = make_cyclic_product({2, 2});
    auto w = whole_group(v4);
    Cocycle sigma = make_sigma(w);

    auto triv = trivial_subgroup(v4);
    auto r = restrict_cocycle(sigma, triv);
    CHECK(r.domain.size() == 1);
    CHECK(check_cocycle(r));

    CHECK(conj_pullback(sigma, v4->identity).values == sigma.values);

    auto s3 = make_from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
    Elem tr = -1, rot = -1;
    for (Elem x = 0; x < 6; ++x) {
        if (x == s3->identity) continue;
        if (s3->element_order(x) == 2 && tr < 0) tr = x;
        if (s3->element_order(x) == 3 && rot < 0) rot = x;
    }
    auto f = subgroup_generated(s3, {tr});
    auto pulled = conj_pullback(trivial_cocycle(f, 2), rot);
    CHECK(pulled.domain == conjugate_subgroup(rot, f));
    for (const auto& row : pulled.values)
        for (auto v : row) CHECK(v == 0);
}

TEST_CASE("fusion cocycle: trivial inputs, s = e recovers restriction sum, sigma case") {
    auto v4 = make_cyclic_product({2, 2});
    auto w = whole_group(v4);
    Cocycle sigma = make_sigma(w);
    Cocycle zero = trivial_cocycle(w, 2);

    Subgroup fs = intersect(conjugate_subgroup(v4->identity, w), w);
    auto f1 = fusion_cocycle(zero, zero, v4->identity, fs);
    CHECK(check_cocycle(f1));
    for (const auto& row : f1.values)
        for (auto v : row) CHECK(v == 0);

    auto f2 = fusion_cocycle(sigma, zero, v4->identity, fs);
    CHECK(f2.values == sigma.values);

    Subgroup wrong = trivial_subgroup(v4);
    CHECK_THROWS_AS(fusion_cocycle(sigma, zero, v4->identity, wrong), SubgroupMismatch);
}

TEST_CASE("modulus rescale and reduction") {
    auto z2 = make_cyclic_product({2});
    auto w = whole_group(z2);
    Cocycle c = trivial_cocycle(w, 2);
    c.values[1][1] = 1;
    REQUIRE(check_cocycle(c));
    Cocycle up = rescale_modulus(c, 4);
    CHECK(up.values[1][1] == 2);
    Cocycle down = reduce_modulus(up);
    CHECK(down.modulus == 2);
    CHECK(down.values == c.values);
}

TEST_CASE("brpic cocycle: identity map gives the diagonal with trivial class") {
    DualPair p({2});
    auto orths = orth_group(p);
    REQUIRE(!orths.empty());
    auto bc = brpic_cocycle(orths.front());  // identity (sorted first)
    CHECK(bc.support.size() == 2);
    for (Elem x : bc.support.members())
        CHECK(pair_left(*bc.gxg, x) == pair_right(*bc.gxg, x));
    for (const auto& row : bc.psi.values)
        for (auto v : row) CHECK(v == 0);
    CHECK(check_cocycle(bc.psi));
}

TEST_CASE("brpic cocycle: swap support is everything; class has the symplectic form") {
    DualPair p({2});
    auto orths = orth_group(p);
    std::vector<Elem> swap(4);
    for (Elem v = 0; v < 4; ++v) swap[v] = p.combine(p.chi_part(v), p.g_part(v));
    const OrthogonalMap* sw = nullptr;
    for (const auto& m : orths)
        if (m.auto_map.image == swap) sw = &m;
    REQUIRE(sw);
    auto bc = brpic_cocycle(*sw);
    CHECK(bc.support.size() == 4);
    CHECK(check_cocycle(bc.psi));
    // the alternating form B(x,y) = -<g_x, b_y> + <a_x, h_y> on pairs
    // x = (a,g), y = (b,h); nondegenerate on (Z/2)^2
    auto beta = alternating_form(bc.psi);
    const auto& gxg = *bc.gxg;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int a = pair_left(gxg, bc.support.member(i)), g = pair_right(gxg, bc.support.member(i));
            int b = pair_left(gxg, bc.support.member(j)), h = pair_right(gxg, bc.support.member(j));
            CHECK(beta[i][j] == static_cast<std::uint32_t>(((a * h - g * b) % 2 + 2) % 2));
        }
}

TEST_CASE("brpic cocycle: every alpha over Z/3 yields valid (L, psi), |L| in {3, 9}") {
    DualPair p({3});
    auto orths = orth_group(p);
    REQUIRE(orths.size() == 4);
    for (const auto& m : orths) {
        auto bc = brpic_cocycle(m);
        CHECK((bc.support.size() == 3 || bc.support.size() == 9));
        CHECK(check_cocycle(bc.psi));
    }
}

TEST_CASE("restrict rejects non-subgroups of the domain") {
    auto v4 = make_cyclic_product({2, 2});
    auto h = subgroup_generated(v4, {1});
    Cocycle psi = trivial_cocycle(h, 2);
    auto other = subgroup_generated(v4, {2});
    CHECK_THROWS_AS(restrict_cocycle(psi, other), NotASubgroup);
}

TEST_CASE("add and subtract merge moduli by lcm with exponent rescaling") {
    auto z2 = make_cyclic_product({2});
    auto w = whole_group(z2);
    Cocycle a = trivial_cocycle(w, 2);
    a.values[1][1] = 1;
    Cocycle b = trivial_cocycle(w, 3);
    Cocycle s = add(a, b);
    CHECK(s.modulus == 6);
    CHECK(s.values[1][1] == 3);  // 1 * (6/2)
    Cocycle d = subtract(s, a);
    CHECK(d.modulus == 6);
    CHECK(d.values[1][1] == 0);
}

TEST_CASE("brpic cocycle guard rejects maps violating the pairing condition") {
    DualPair p({3});
    // an automorphism of the double that is NOT orthogonal: (g,chi) -> (g, 2chi)
    const auto& d = *p.doubled();
    GroupHom h{p.doubled(), p.doubled(), std::vector<Elem>(d.order)};
    for (Elem v = 0; v < d.order; ++v)
        h.image[v] = p.combine(p.g_part(v), (2 * p.chi_part(v)) % 3);
    h.verify();
    REQUIRE(h.is_bijective());
    REQUIRE_FALSE(preserves_pairing(p, h));
    OrthogonalMap fake{&p, h};
    CHECK_THROWS_AS(brpic_cocycle(fake), IllDefinedCocycle);
}
