#include "hbp/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hbp/rational.hpp"
#include "hbp/smith.hpp"

namespace hbp {

bool FiniteGroup::is_abelian() const {
    for (Elem x = 0; x < order; ++x)
        for (Elem y = x + 1; y < order; ++y)
            if (mul[x][y] != mul[y][x]) return false;
    return true;
}

int FiniteGroup::element_order(Elem x) const {
    int n = 1;
    Elem p = x;
    while (p != identity) { p = mul[p][x]; ++n; }
    return n;
}

int FiniteGroup::exponent() const {
    long long e = 1;
    for (Elem x = 0; x < order; ++x) e = std::lcm(e, static_cast<long long>(element_order(x)));
    return static_cast<int>(e);
}

std::vector<int> FiniteGroup::coords(Elem x) const {
    const auto& inv = *abelian_invariants;
    std::vector<int> c(inv.size());
    for (std::size_t i = 0; i < inv.size(); ++i) {
        c[i] = x % inv[i];
        x /= inv[i];
    }
    return c;
}

Elem FiniteGroup::from_coords(const std::vector<int>& c) const {
    const auto& inv = *abelian_invariants;
    Elem x = 0;
    int stride = 1;
    for (std::size_t i = 0; i < inv.size(); ++i) {
        int ci = ((c[i] % inv[i]) + inv[i]) % inv[i];
        x += ci * stride;
        stride *= inv[i];
    }
    return x;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    mask_.assign(parent_->order, 0);
    local_.assign(parent_->order, -1);
    for (std::size_t i = 0; i < members_.size(); ++i) {
        mask_[members_[i]] = 1;
        local_[members_[i]] = static_cast<int>(i);
    }
    // closure sanity
    const auto& g = *parent_;
    if (local_[g.identity] < 0) throw std::invalid_argument("subgroup: identity missing");
    for (Elem a : members_) {
        if (!mask_[g.inv[a]]) throw std::invalid_argument("subgroup: not closed under inverse");
        for (Elem b : members_)
            if (!mask_[g.mul[a][b]]) throw std::invalid_argument("subgroup: not closed under product");
    }
}

bool GroupHom::is_bijective() const {
    if (source->order != target->order) return false;
    std::vector<char> seen(target->order, 0);
    for (Elem y : image) {
        if (seen[y]) return false;
        seen[y] = 1;
    }
    return true;
}

void GroupHom::verify() const {
    if (image[source->identity] != target->identity)
        throw std::invalid_argument("hom does not fix identity");
    for (Elem x = 0; x < source->order; ++x)
        for (Elem y = 0; y < source->order; ++y)
            if (image[source->mul[x][y]] != target->mul[image[x]][image[y]])
                throw std::invalid_argument("not a homomorphism");
}

GroupPtr make_cyclic_product(const std::vector<int>& invariants) {
    long long order = 1;
    for (int n : invariants) {
        if (n < 1) throw std::invalid_argument("cyclic factor must be >= 1");
        order *= n;
        if (order > kOrderCap) throw OrderCapExceeded();
    }
    auto g = std::make_shared<FiniteGroup>();
    g->order = static_cast<int>(order);
    g->abelian_invariants = invariants;
    g->mul.assign(g->order, std::vector<Elem>(g->order));
    for (Elem x = 0; x < g->order; ++x) {
        for (Elem y = 0; y < g->order; ++y) {
            Elem z = 0, stride = 1, xx = x, yy = y;
            for (int n : invariants) {
                z += ((xx + yy) % n) * stride;
                stride *= n;
                xx /= n;
                yy /= n;
            }
            g->mul[x][y] = z;
        }
    }
    g->identity = 0;
    g->inv.resize(g->order);
    for (Elem x = 0; x < g->order; ++x) {
        Elem z = 0, stride = 1, xx = x;
        for (int n : invariants) {
            z += ((n - xx % n) % n) * stride;
            stride *= n;
            xx /= n;
        }
        g->inv[x] = z;
    }
    return g;
}

GroupPtr make_from_table(const std::vector<std::vector<Elem>>& table) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw NotAGroup("no-identity");
    if (n > kOrderCap) throw OrderCapExceeded();
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("table not square");
        for (Elem v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
    }
    auto g = std::make_shared<FiniteGroup>();
    g->order = n;
    g->mul = table;

    int id = -1;
    for (Elem e = 0; e < n && id < 0; ++e) {
        bool ok = true;
        for (Elem x = 0; x < n && ok; ++x)
            if (table[e][x] != x || table[x][e] != x) ok = false;
        if (ok) id = e;
    }
    if (id < 0) throw NotAGroup("no-identity");
    g->identity = id;

    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            for (Elem z = 0; z < n; ++z)
                if (table[table[x][y]][z] != table[x][table[y][z]])
                    throw NotAGroup("not-associative");

    g->inv.assign(n, -1);
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y)
            if (table[x][y] == id && table[y][x] == id) { g->inv[x] = y; break; }
        if (g->inv[x] < 0) throw NotAGroup("missing-inverse");
    }
    return g;
}

GroupPtr make_from_permutations(int n, const std::vector<std::vector<int>>& perms) {
    if (n < 1) throw std::invalid_argument("permutation degree must be >= 1");
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    for (const auto& p : perms) {
        if (static_cast<int>(p.size()) != n) throw std::invalid_argument("permutation size mismatch");
        std::vector<char> seen(n, 0);
        for (int v : p) {
            if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("not a permutation");
            seen[v] = 1;
        }
    }
    // closure under composition (p then q applied as q*p: (q*p)[i] = q[p[i]])
    std::vector<std::vector<int>> elems{id};
    std::map<std::vector<int>, int> index{{id, 0}};
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& ggen : perms) {
            std::vector<int> comp(n);
            for (int k = 0; k < n; ++k) comp[k] = ggen[elems[i][k]];
            if (index.emplace(comp, static_cast<int>(elems.size())).second) {
                elems.push_back(comp);
                if (static_cast<int>(elems.size()) > kOrderCap) throw OrderCapExceeded();
            }
        }
    }
    const int m = static_cast<int>(elems.size());
    std::vector<std::vector<Elem>> table(m, std::vector<Elem>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            std::vector<int> comp(n);
            for (int k = 0; k < n; ++k) comp[k] = elems[a][elems[b][k]];
            table[a][b] = index.at(comp);
        }
    return make_from_table(table);
}

GroupPtr direct_product(GroupPtr a, GroupPtr b) {
    long long order = static_cast<long long>(a->order) * b->order;
    if (order > kOrderCap * 4) throw OrderCapExceeded();  // gradings may exceed the table cap slightly
    auto g = std::make_shared<FiniteGroup>();
    g->order = static_cast<int>(order);
    g->mul.assign(g->order, std::vector<Elem>(g->order));
    for (Elem x = 0; x < g->order; ++x) {
        Elem xl = x % a->order, xr = x / a->order;
        for (Elem y = 0; y < g->order; ++y) {
            Elem yl = y % a->order, yr = y / a->order;
            g->mul[x][y] = a->mul[xl][yl] + a->order * b->mul[xr][yr];
        }
    }
    g->identity = a->identity + a->order * b->identity;
    g->inv.resize(g->order);
    for (Elem x = 0; x < g->order; ++x)
        g->inv[x] = a->inv[x % a->order] + a->order * b->inv[x / a->order];
    if (a->abelian_invariants && b->abelian_invariants) {
        std::vector<int> inv = *a->abelian_invariants;
        inv.insert(inv.end(), b->abelian_invariants->begin(), b->abelian_invariants->end());
        g->abelian_invariants = std::move(inv);
    }
    g->product_split = FiniteGroup::ProductSplit{std::move(a), std::move(b)};
    return g;
}

Subgroup subgroup_generated(GroupPtr g, const std::vector<Elem>& gens) {
    for (Elem x : gens)
        if (x < 0 || x >= g->order) throw std::invalid_argument("generator index out of range");
    std::vector<char> mask(g->order, 0);
    std::vector<Elem> members{g->identity};
    mask[g->identity] = 1;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (Elem s : gens) {
            Elem nxt = g->mul[members[i]][s];
            if (!mask[nxt]) { mask[nxt] = 1; members.push_back(nxt); }
            nxt = g->mul[members[i]][g->inv[s]];
            if (!mask[nxt]) { mask[nxt] = 1; members.push_back(nxt); }
        }
    }
    return Subgroup(std::move(g), std::move(members));
}

Subgroup whole_group(GroupPtr g) {
    std::vector<Elem> all(g->order);
    std::iota(all.begin(), all.end(), 0);
    return Subgroup(std::move(g), std::move(all));
}

Subgroup trivial_subgroup(GroupPtr g) {
    Elem e = g->identity;
    return Subgroup(std::move(g), {e});
}

Subgroup conjugate_subgroup(Elem s, const Subgroup& f) {
    const auto& g = *f.parent();
    std::vector<Elem> members;
    members.reserve(f.members().size());
    Elem si = g.inv[s];
    for (Elem x : f.members()) members.push_back(g.mul[g.mul[si][x]][s]);
    return Subgroup(f.parent(), std::move(members));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    if (a.parent() != b.parent()) throw std::invalid_argument("intersect: different parents");
    std::vector<Elem> members;
    for (Elem x : a.members())
        if (b.contains(x)) members.push_back(x);
    return Subgroup(a.parent(), std::move(members));
}

std::vector<DoubleCoset> double_cosets(GroupPtr g, const Subgroup& f2, const Subgroup& f1) {
    if (f1.parent() != g || f2.parent() != g)
        throw std::invalid_argument("double_cosets: subgroup of a different group");
    std::vector<char> seen(g->order, 0);
    std::vector<DoubleCoset> out;
    for (Elem s = 0; s < g->order; ++s) {
        if (seen[s]) continue;
        DoubleCoset dc;
        dc.representative = s;
        for (Elem a : f2.members())
            for (Elem b : f1.members()) {
                Elem x = g->mul[g->mul[a][s]][b];
                if (!seen[x]) { seen[x] = 1; dc.members.push_back(x); }
            }
        std::sort(dc.members.begin(), dc.members.end());
        out.push_back(std::move(dc));
    }
    return out;
}

namespace {

// Backtracking over images of a (greedy) generating set; pruned by order
// compatibility, extended by closure, verified on the full table.
struct AutSearch {
    const FiniteGroup& g;
    std::vector<Elem> gens;
    std::vector<std::vector<Elem>> words;  // expression of each element over gens (as index seq)
    std::vector<GroupHom> found;
    GroupPtr gp;

    explicit AutSearch(GroupPtr p) : g(*p), gp(std::move(p)) {
        // greedy generating set + word for every element
        std::vector<int> word_gen(g.order, -1), word_prev(g.order, -1);
        std::vector<Elem> reached{g.identity};
        std::vector<char> mask(g.order, 0);
        mask[g.identity] = 1;
        while (static_cast<int>(reached.size()) < g.order) {
            Elem pick = -1;
            for (Elem x = 0; x < g.order; ++x)
                if (!mask[x]) { pick = x; break; }
            gens.push_back(pick);
            const int gi = static_cast<int>(gens.size()) - 1;
            // close under right multiplication by all current gens
            for (std::size_t i = 0; i < reached.size(); ++i) {
                for (int k = 0; k <= gi; ++k) {
                    Elem nxt = g.mul[reached[i]][gens[k]];
                    if (!mask[nxt]) {
                        mask[nxt] = 1;
                        word_gen[nxt] = k;
                        word_prev[nxt] = reached[i];
                        reached.push_back(nxt);
                    }
                }
            }
        }
        words.assign(g.order, {});
        for (Elem x = 0; x < g.order; ++x) {
            std::vector<Elem> w;
            Elem cur = x;
            while (cur != g.identity) {
                w.push_back(word_gen[cur]);
                cur = word_prev[cur];
            }
            std::reverse(w.begin(), w.end());
            words[x] = std::move(w);
        }
    }

    void run() {
        std::vector<Elem> img(gens.size(), -1);
        rec(0, img);
        std::sort(found.begin(), found.end(),
                  [](const GroupHom& a, const GroupHom& b) { return a.image < b.image; });
    }

    void rec(std::size_t k, std::vector<Elem>& img) {
        if (k == gens.size()) {
            finish(img);
            return;
        }
        int ord = g.element_order(gens[k]);
        for (Elem cand = 0; cand < g.order; ++cand) {
            if (g.element_order(cand) != ord) continue;
            img[k] = cand;
            rec(k + 1, img);
        }
        img[k] = -1;
    }

    void finish(const std::vector<Elem>& img) {
        GroupHom h{gp, gp, std::vector<Elem>(g.order)};
        for (Elem x = 0; x < g.order; ++x) {
            Elem v = g.identity;
            for (Elem gi : words[x]) v = g.mul[v][img[gi]];
            h.image[x] = v;
        }
        if (!h.is_bijective()) return;
        for (Elem x = 0; x < g.order; ++x)
            for (Elem y = 0; y < g.order; ++y)
                if (h.image[g.mul[x][y]] != g.mul[h.image[x]][h.image[y]]) return;
        found.push_back(std::move(h));
    }
};

}  // namespace

std::vector<GroupHom> enumerate_automorphisms(GroupPtr g) {
    const bool abelian = g->is_abelian();
    if (abelian) {
        if (g->order > kAutCapAbelian) throw EnumerationCapExceeded();
    } else if (g->order > kAutCapNonAbelian) {
        throw EnumerationCapExceeded();
    }
    AutSearch search(std::move(g));
    search.run();
    return search.found;
}

std::vector<int> invariant_factors(const FiniteGroup& g) {
    if (!g.is_abelian()) throw std::invalid_argument("invariant_factors: group not abelian");
    // Peel off a maximal-order cyclic direct factor, recurse on the quotient.
    std::vector<int> factors;
    std::vector<std::vector<Elem>> table = g.mul;
    Elem id = g.identity;
    int n = g.order;
    while (n > 1) {
        // element orders in the current table
        auto order_of = [&](Elem x) {
            int o = 1;
            Elem p = x;
            while (p != id) { p = table[p][x]; ++o; }
            return o;
        };
        int best = 1;
        Elem pick = id;
        for (Elem x = 0; x < n; ++x) {
            int o = order_of(x);
            if (o > best) { best = o; pick = x; }
        }
        factors.push_back(best);
        // quotient by <pick>
        std::vector<Elem> cyc;
        Elem p = id;
        do { cyc.push_back(p); p = table[p][pick]; } while (p != id);
        std::vector<int> coset(n, -1);
        std::vector<Elem> reps;
        for (Elem x = 0; x < n; ++x) {
            if (coset[x] >= 0) continue;
            int c = static_cast<int>(reps.size());
            reps.push_back(x);
            for (Elem h : cyc) coset[table[x][h]] = c;
        }
        const int m = static_cast<int>(reps.size());
        std::vector<std::vector<Elem>> qt(m, std::vector<Elem>(m));
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) qt[a][b] = coset[table[reps[a]][reps[b]]];
        table = std::move(qt);
        id = coset[id];
        n = m;
    }
    std::reverse(factors.begin(), factors.end());  // ascending n1 | n2 | ...
    return factors;
}

AbelianBasis abelian_basis(const Subgroup& s) {
    const auto& g = *s.parent();
    for (Elem a : s.members())
        for (Elem b : s.members())
            if (g.mul[a][b] != g.mul[b][a])
                throw std::invalid_argument("abelian_basis: subgroup not abelian");

    // Smith normal form of a complete relation presentation over a greedy
    // generating set; the column transform provides both the independent
    // generators and every member's coordinates.
    const std::vector<Elem>& mem = s.members();
    const int n = s.size();

    std::vector<Elem> gens;
    {
        std::vector<char> span(g.order, 0);
        span[g.identity] = 1;
        std::vector<Elem> grown{g.identity};
        for (Elem x : mem) {
            if (span[x]) continue;
            gens.push_back(x);
            // close the span under the enlarged generating set
            std::vector<Elem> frontier{x};
            while (!frontier.empty()) {
                Elem v = frontier.back();
                frontier.pop_back();
                if (span[v]) continue;
                span[v] = 1;
                grown.push_back(v);
            }
            for (std::size_t i = 0; i < grown.size(); ++i)
                for (Elem h : gens) {
                    Elem w = g.mul[grown[i]][h];
                    if (!span[w]) { span[w] = 1; grown.push_back(w); }
                }
        }
    }
    const int r = static_cast<int>(gens.size());

    AbelianBasis basis;
    if (r == 0) {  // trivial subgroup
        basis.coord.assign(n, {});
        return basis;
    }

    // BFS words w(m) over the generators; relations w(m) + e_j - w(m h_j)
    std::vector<std::vector<std::int64_t>> word(g.order);
    std::vector<char> seen(g.order, 0);
    std::vector<Elem> queue{g.identity};
    word[g.identity].assign(r, 0);
    seen[g.identity] = 1;
    IntMat rel;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Elem m = queue[qi];
        for (int j = 0; j < r; ++j) {
            Elem t = g.mul[m][gens[j]];
            if (!seen[t]) {
                seen[t] = 1;
                word[t] = word[m];
                word[t][j] += 1;
                queue.push_back(t);
            } else {
                std::vector<std::int64_t> row = word[m];
                row[j] += 1;
                for (int k = 0; k < r; ++k) row[k] -= word[t][k];
                rel.push_back(std::move(row));
            }
        }
    }
    SmithResult snf = smith_normal_form(rel);

    // invert the (small, unimodular) column transform exactly
    std::vector<std::vector<Rational>> vin(r, std::vector<Rational>(2 * r));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) vin[i][j] = Rational(snf.v[i][j]);
        vin[i][r + i] = Rational(1);
    }
    for (int col = 0; col < r; ++col) {
        int piv = -1;
        for (int i = col; i < r; ++i)
            if (!vin[i][col].is_zero()) { piv = i; break; }
        if (piv < 0) throw std::logic_error("abelian_basis: singular transform");
        std::swap(vin[col], vin[piv]);
        Rational d = vin[col][col];
        for (auto& x : vin[col]) x = x / d;
        for (int i = 0; i < r; ++i) {
            if (i == col || vin[i][col].is_zero()) continue;
            Rational f = vin[i][col];
            for (int j = 0; j < 2 * r; ++j) vin[i][j] -= f * vin[col][j];
        }
    }
    auto power_of = [&](Elem x, std::int64_t k) {
        int o = g.element_order(x);
        std::int64_t kk = ((k % o) + o) % o;
        Elem p = g.identity;
        for (std::int64_t c = 0; c < kk; ++c) p = g.mul[p][x];
        return p;
    };

    std::vector<int> keep;  // diagonal factors > 1
    for (int j = 0; j < r; ++j) {
        std::int64_t dj = (j < static_cast<int>(snf.d.size()) &&
                           j < static_cast<int>(snf.d[j].size()))
                              ? snf.d[j][j]
                              : 0;
        if (dj == 0) throw std::logic_error("abelian_basis: infinite factor in a finite group");
        if (dj > 1) {
            keep.push_back(j);
            // basis element = sum_i (V^-1)_{j,i} * gens[i]
            Elem b = g.identity;
            for (int i = 0; i < r; ++i) {
                const Rational& q = vin[j][r + i];
                if (q.den() != 1) throw std::logic_error("abelian_basis: non-integer inverse");
                b = g.mul[b][power_of(gens[i], q.num())];
            }
            basis.gens.push_back(b);
            basis.orders.push_back(static_cast<int>(dj));
        }
    }
    long long total = 1;
    for (int o : basis.orders) total *= o;
    if (total != n) throw std::logic_error("abelian_basis: factor orders do not multiply out");

    // coordinates: z = w(m) * V, entry j mod d_j
    basis.coord.assign(n, std::vector<int>(keep.size(), 0));
    for (int i = 0; i < n; ++i) {
        const auto& w = word[mem[i]];
        for (std::size_t kj = 0; kj < keep.size(); ++kj) {
            int j = keep[kj];
            std::int64_t z = 0;
            for (int k = 0; k < r; ++k) z += w[k] * snf.v[k][j];
            std::int64_t d = basis.orders[kj];
            basis.coord[i][kj] = static_cast<int>(((z % d) + d) % d);
        }
    }
    // reconstruction sanity for every member
    for (int i = 0; i < n; ++i) {
        Elem v = g.identity;
        for (std::size_t kj = 0; kj < basis.gens.size(); ++kj)
            v = g.mul[v][power_of(basis.gens[kj], basis.coord[i][kj])];
        if (v != mem[i]) throw std::logic_error("abelian_basis: coordinates do not reconstruct");
    }
    return basis;
}

int subgroup_count(GroupPtr g) {
    if (g->order > kAutCapAbelian) throw EnumerationCapExceeded();
    std::set<std::vector<Elem>> seen;
    std::vector<std::vector<Elem>> queue;
    auto add = [&](const Subgroup& s) {
        if (seen.insert(s.members()).second) queue.push_back(s.members());
    };
    add(trivial_subgroup(g));
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (Elem x = 0; x < g->order; ++x) {
            std::vector<Elem> gens = queue[i];
            gens.push_back(x);
            add(subgroup_generated(g, gens));
        }
    }
    return static_cast<int>(seen.size());
}

}  // namespace hbp
