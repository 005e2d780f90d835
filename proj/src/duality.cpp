#include "hbp/duality.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace hbp {

DualPair::DualPair(const std::vector<int>& invariants) : invariants_(invariants) {
    base_ = make_cyclic_product(invariants);
    dual_ = make_cyclic_product(invariants);
    std::vector<int> doubled = invariants;
    doubled.insert(doubled.end(), invariants.begin(), invariants.end());
    double_ = make_cyclic_product(doubled);
    long long m = 1;
    for (int n : invariants) m = std::lcm(m, static_cast<long long>(n));
    modulus_ = static_cast<int>(m);
    weights_.resize(invariants.size());
    for (std::size_t i = 0; i < invariants.size(); ++i)
        weights_[i] = modulus_ / invariants[i];
}

int DualPair::pairing(Elem chi, Elem g) const {
    long long acc = 0;
    for (std::size_t i = 0; i < invariants_.size(); ++i) {
        int n = invariants_[i];
        acc += static_cast<long long>(weights_[i]) * (chi % n) * (g % n);
        chi /= n;
        g /= n;
    }
    return static_cast<int>(acc % modulus_);
}

bool preserves_pairing(const DualPair& pair, const GroupHom& h) {
    const int n2 = pair.doubled()->order;
    for (Elem v = 0; v < n2; ++v) {
        Elem w = h(v);
        int lhs = pair.pairing(pair.chi_part(w), pair.g_part(w));
        int rhs = pair.pairing(pair.chi_part(v), pair.g_part(v));
        if (lhs != rhs) return false;
    }
    return true;
}

std::vector<OrthogonalMap> orth_group(const DualPair& pair) {
    auto auts = enumerate_automorphisms(pair.doubled());
    std::vector<OrthogonalMap> out;
    for (auto& h : auts) {
        if (!preserves_pairing(pair, h)) continue;
        out.push_back(OrthogonalMap{&pair, std::move(h)});
    }
    // enumerate_automorphisms already sorts by image table
    return out;
}

OrthogonalMap orth_compose(const OrthogonalMap& a, const OrthogonalMap& b) {
    assert(a.pair == b.pair);
    GroupHom h{a.auto_map.source, a.auto_map.target, std::vector<Elem>(a.auto_map.image.size())};
    for (std::size_t v = 0; v < h.image.size(); ++v)
        h.image[v] = a.auto_map.image[b.auto_map.image[v]];
#ifndef NDEBUG
    assert(preserves_pairing(*a.pair, h));
#endif
    return OrthogonalMap{a.pair, std::move(h)};
}

OrthogonalMap orth_invert(const OrthogonalMap& a) {
    GroupHom h{a.auto_map.source, a.auto_map.target, std::vector<Elem>(a.auto_map.image.size())};
    for (std::size_t v = 0; v < h.image.size(); ++v)
        h.image[a.auto_map.image[v]] = static_cast<Elem>(v);
#ifndef NDEBUG
    assert(preserves_pairing(*a.pair, h));
#endif
    return OrthogonalMap{a.pair, std::move(h)};
}

}  // namespace hbp
