#include "hbp/cocycle.hpp"

#include <algorithm>
#include <numeric>

#include "hbp/smith.hpp"

namespace hbp {

namespace {

std::uint32_t umod(std::int64_t v, std::uint32_t m) {
    std::int64_t r = v % static_cast<std::int64_t>(m);
    if (r < 0) r += m;
    return static_cast<std::uint32_t>(r);
}

}  // namespace

Cocycle trivial_cocycle(const Subgroup& f, std::uint32_t modulus) {
    Cocycle psi;
    psi.domain = f;
    psi.modulus = modulus;
    psi.values.assign(f.size(), std::vector<std::uint32_t>(f.size(), 0));
    return psi;
}

bool check_cocycle(const Cocycle& psi) {
    const auto& f = psi.domain;
    const auto& g = *f.parent();
    const int n = f.size();
    if (static_cast<int>(psi.values.size()) != n) return false;
    for (const auto& row : psi.values) {
        if (static_cast<int>(row.size()) != n) return false;
        for (auto v : row)
            if (v >= psi.modulus) return false;
    }
    const int e = f.local_index(g.identity);
    for (int i = 0; i < n; ++i)
        if (psi.values[e][i] != 0 || psi.values[i][e] != 0) return false;
    const std::uint32_t m = psi.modulus;
    for (int i = 0; i < n; ++i) {
        Elem x = f.member(i);
        for (int j = 0; j < n; ++j) {
            Elem y = f.member(j);
            int ij = f.local_index(g.mul[x][y]);
            for (int k = 0; k < n; ++k) {
                Elem z = f.member(k);
                int jk = f.local_index(g.mul[y][z]);
                std::uint32_t lhs = (psi.values[i][j] + psi.values[ij][k]) % m;
                std::uint32_t rhs = (psi.values[j][k] + psi.values[i][jk]) % m;
                if (lhs != rhs) return false;
            }
        }
    }
    return true;
}

Cocycle rescale_modulus(const Cocycle& psi, std::uint32_t m2) {
    if (m2 == psi.modulus) return psi;
    if (m2 % psi.modulus != 0) throw std::invalid_argument("rescale: modulus not a multiple");
    const std::uint32_t f = m2 / psi.modulus;
    Cocycle out = psi;
    out.modulus = m2;
    for (auto& row : out.values)
        for (auto& v : row) v *= f;
    return out;
}

Cocycle reduce_modulus(const Cocycle& psi) {
    std::uint32_t d = psi.modulus;
    for (const auto& row : psi.values)
        for (auto v : row) d = std::gcd(d, v);
    if (d <= 1) return psi;
    Cocycle out = psi;
    out.modulus = psi.modulus / d;
    for (auto& row : out.values)
        for (auto& v : row) v /= d;
    return out;
}

std::optional<std::vector<std::int64_t>> coboundary_witness(const Cocycle& psi) {
    const auto& f = psi.domain;
    const auto& g = *f.parent();
    const int n = f.size();
    const int e = f.local_index(g.identity);
    const std::int64_t m = psi.modulus;
    if (m == 1) return std::vector<std::int64_t>(n, 0);

    // unknowns: c at every non-identity member (c(e) = 0 forced)
    std::vector<int> var(n, -1);
    int nv = 0;
    for (int i = 0; i < n; ++i)
        if (i != e) var[i] = nv++;

    IntMat a;
    std::vector<std::int64_t> b;
    for (int i = 0; i < n; ++i) {
        if (i == e) continue;
        for (int j = 0; j < n; ++j) {
            if (j == e) continue;
            int ij = f.local_index(g.mul[f.member(i)][f.member(j)]);
            std::vector<std::int64_t> row(nv, 0);
            if (var[i] >= 0) row[var[i]] += 1;
            if (var[j] >= 0) row[var[j]] += 1;
            if (var[ij] >= 0) row[var[ij]] -= 1;
            a.push_back(std::move(row));
            b.push_back(psi.values[i][j]);
        }
    }
    auto sol = solve_mod(a, b, m);
    if (!sol) return std::nullopt;
    std::vector<std::int64_t> c(n, 0);
    for (int i = 0; i < n; ++i)
        if (var[i] >= 0) c[i] = (*sol)[var[i]];
    return c;
}

Cocycle coboundary_of(const Subgroup& f, std::uint32_t modulus,
                      const std::vector<std::int64_t>& c) {
    const auto& g = *f.parent();
    Cocycle out = trivial_cocycle(f, modulus);
    for (int i = 0; i < f.size(); ++i)
        for (int j = 0; j < f.size(); ++j) {
            int ij = f.local_index(g.mul[f.member(i)][f.member(j)]);
            out.values[i][j] = umod(c[i] + c[j] - c[ij], modulus);
        }
    return out;
}

namespace {

std::pair<Cocycle, Cocycle> merged(const Cocycle& a, const Cocycle& b) {
    if (!(a.domain == b.domain)) throw DomainMismatch();
    std::uint32_t m = std::lcm(a.modulus, b.modulus);
    return {rescale_modulus(a, m), rescale_modulus(b, m)};
}

}  // namespace

Cocycle add(const Cocycle& a, const Cocycle& b) {
    auto [x, y] = merged(a, b);
    for (std::size_t i = 0; i < x.values.size(); ++i)
        for (std::size_t j = 0; j < x.values.size(); ++j)
            x.values[i][j] = (x.values[i][j] + y.values[i][j]) % x.modulus;
    return x;
}

Cocycle subtract(const Cocycle& a, const Cocycle& b) {
    auto [x, y] = merged(a, b);
    for (std::size_t i = 0; i < x.values.size(); ++i)
        for (std::size_t j = 0; j < x.values.size(); ++j)
            x.values[i][j] = umod(static_cast<std::int64_t>(x.values[i][j]) - y.values[i][j],
                                  x.modulus);
    return x;
}

bool cohomologous(const Cocycle& psi, const Cocycle& phi) {
    return coboundary_witness(subtract(psi, phi)).has_value();
}

Cocycle restrict_cocycle(const Cocycle& psi, const Subgroup& sub) {
    if (sub.parent() != psi.domain.parent()) throw NotASubgroup();
    for (Elem x : sub.members())
        if (!psi.domain.contains(x)) throw NotASubgroup();
    Cocycle out = trivial_cocycle(sub, psi.modulus);
    for (int i = 0; i < sub.size(); ++i)
        for (int j = 0; j < sub.size(); ++j)
            out.values[i][j] = psi.at(sub.member(i), sub.member(j));
    return out;
}

Cocycle conj_pullback(const Cocycle& psi, Elem s) {
    const auto& g = *psi.domain.parent();
    Subgroup target = conjugate_subgroup(s, psi.domain);
    Cocycle out = trivial_cocycle(target, psi.modulus);
    Elem si = g.inv[s];
    for (int i = 0; i < target.size(); ++i) {
        Elem cx = g.mul[g.mul[s][target.member(i)]][si];
        if (!psi.domain.contains(cx)) throw ConjugateOutsideDomain();
        for (int j = 0; j < target.size(); ++j) {
            Elem cy = g.mul[g.mul[s][target.member(j)]][si];
            if (!psi.domain.contains(cy)) throw ConjugateOutsideDomain();
            out.values[i][j] = psi.at(cx, cy);
        }
    }
    return out;
}

Cocycle fusion_cocycle(const Cocycle& psi1, const Cocycle& psi2, Elem s, const Subgroup& fs) {
    const auto g = psi1.domain.parent();
    if (psi2.domain.parent() != g || fs.parent() != g) throw DomainMismatch();
    Subgroup expect = intersect(conjugate_subgroup(s, psi1.domain), psi2.domain);
    if (!(expect == fs)) throw SubgroupMismatch();

    const std::uint32_t m = std::lcm(psi1.modulus, psi2.modulus);
    Cocycle out = trivial_cocycle(fs, m);
    const std::uint32_t f1 = m / psi1.modulus;
    const std::uint32_t f2 = m / psi2.modulus;
    Elem si = g->inv[s];
    for (int i = 0; i < fs.size(); ++i) {
        Elem x = fs.member(i);
        Elem cx = g->mul[g->mul[s][x]][si];
        if (!psi1.domain.contains(cx)) throw ConjugateOutsideDomain();
        for (int j = 0; j < fs.size(); ++j) {
            Elem y = fs.member(j);
            Elem cy = g->mul[g->mul[s][y]][si];
            if (!psi1.domain.contains(cy)) throw ConjugateOutsideDomain();
            out.values[i][j] =
                (f1 * psi1.at(cx, cy) + f2 * psi2.at(x, y)) % m;
        }
    }
    return out;
}

std::vector<std::vector<std::uint32_t>> alternating_form(const Cocycle& psi) {
    const int n = psi.domain.size();
    std::vector<std::vector<std::uint32_t>> beta(n, std::vector<std::uint32_t>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            beta[i][j] = umod(static_cast<std::int64_t>(psi.values[i][j]) - psi.values[j][i],
                              psi.modulus);
    return beta;
}

Cocycle cocycle_from_alternating(const Subgroup& l, std::uint32_t modulus,
                                 const std::vector<std::vector<std::uint32_t>>& beta) {
    AbelianBasis basis = abelian_basis(l);
    const int r = static_cast<int>(basis.gens.size());
    const int n = l.size();
    // beta on basis pairs
    std::vector<std::vector<std::int64_t>> bb(r, std::vector<std::int64_t>(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            bb[i][j] = beta[l.local_index(basis.gens[i])][l.local_index(basis.gens[j])];

    Cocycle out = trivial_cocycle(l, modulus);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::int64_t acc = 0;
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < i; ++j)
                    acc += bb[i][j] * basis.coord[a][i] * basis.coord[b][j];
            out.values[a][b] = umod(acc, modulus);
        }
    // the staircase reproduces the requested alternating form, and the form's
    // order-compatibility is exactly what makes the table a cocycle
    auto check = alternating_form(out);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (check[a][b] != beta[a][b])
                throw std::logic_error("staircase cocycle: alternating form mismatch");
    if (!check_cocycle(out))
        throw std::logic_error("staircase cocycle: form is not order-compatible");
    return out;
}

BrPicCocycle brpic_cocycle(const OrthogonalMap& alpha, GroupPtr gxg) {
    const DualPair& pair = *alpha.pair;
    const GroupPtr& base = pair.base();
    if (!gxg) gxg = direct_product(base, base);
    if (!gxg->product_split || gxg->order != base->order * base->order)
        throw std::invalid_argument("brpic_cocycle: grading group is not G x G");
    const int n2 = pair.doubled()->order;
    const std::uint32_t m = static_cast<std::uint32_t>(pair.modulus());

    // support L = {(alpha1(v), g_v)} with all preimages per support element
    std::vector<std::vector<Elem>> lifts(gxg->order);
    for (Elem v = 0; v < n2; ++v) {
        Elem l = pair_encode(*gxg, alpha.alpha1(v), pair.g_part(v));
        lifts[l].push_back(v);
    }
    std::vector<Elem> members;
    for (Elem l = 0; l < gxg->order; ++l)
        if (!lifts[l].empty()) members.push_back(l);
    Subgroup support(gxg, members);

    // B(x,y) = -<alpha2(v_x), alpha1(v_y)> + <chi_{v_x}, g_{v_y}>, which only
    // needs a preimage of x; checked over every preimage.
    const int ns = support.size();
    std::vector<std::vector<std::uint32_t>> beta(ns, std::vector<std::uint32_t>(ns, 0));
    for (int i = 0; i < ns; ++i) {
        Elem x = support.member(i);
        for (int j = 0; j < ns; ++j) {
            Elem y = support.member(j);
            Elem y1 = pair_left(*gxg, y);   // alpha1 coordinate of y
            Elem y2 = pair_right(*gxg, y);  // G coordinate of y
            bool first = true;
            std::uint32_t value = 0;
            for (Elem v : lifts[x]) {
                std::int64_t b = -static_cast<std::int64_t>(pair.pairing(alpha.alpha2(v), y1)) +
                                 pair.pairing(pair.chi_part(v), y2);
                std::uint32_t bm = umod(b, m);
                if (first) { value = bm; first = false; }
                else if (bm != value) throw IllDefinedCocycle();
            }
            beta[i][j] = value;
        }
    }
    // alternating sanity (forced by the orthogonality condition)
    for (int i = 0; i < ns; ++i) {
        if (beta[i][i] != 0) throw IllDefinedCocycle();
        for (int j = 0; j < ns; ++j)
            if ((beta[i][j] + beta[j][i]) % m != 0) throw IllDefinedCocycle();
    }

    BrPicCocycle out;
    out.gxg = gxg;
    out.support = support;
    out.psi = cocycle_from_alternating(support, m, beta);
    if (!check_cocycle(out.psi)) throw std::logic_error("brpic cocycle failed validation");
    return out;
}

}  // namespace hbp
