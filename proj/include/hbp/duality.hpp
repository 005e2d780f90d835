#ifndef HBP_DUALITY_HPP
#define HBP_DUALITY_HPP

#include <vector>

#include "hbp/group.hpp"

namespace hbp {

// A finite abelian group G together with a concrete model of its character
// group: a second copy with the same invariant factors, the doubled group
// G (+) G^, and the bilinear pairing <chi, g> as an exponent mod M = exp(G).
class DualPair {
public:
    explicit DualPair(const std::vector<int>& invariants);

    const GroupPtr& base() const { return base_; }
    const GroupPtr& dual() const { return dual_; }
    const GroupPtr& doubled() const { return double_; }
    const std::vector<int>& invariants() const { return invariants_; }
    int modulus() const { return modulus_; }

    // exponent k, meaning zeta_M^k
    int pairing(Elem chi, Elem g) const;

    Elem combine(Elem g, Elem chi) const { return g + base_->order * chi; }
    Elem g_part(Elem v) const { return v % base_->order; }
    Elem chi_part(Elem v) const { return v / base_->order; }

private:
    GroupPtr base_;
    GroupPtr dual_;
    GroupPtr double_;
    std::vector<int> invariants_;
    std::vector<int> weights_;  // M / n_i per coordinate
    int modulus_;
};

// Automorphism alpha of G (+) G^ with <alpha2(v), alpha1(v)> = <chi, g>.
struct OrthogonalMap {
    const DualPair* pair = nullptr;
    GroupHom auto_map;  // on pair->doubled()

    Elem alpha1(Elem v) const { return pair->g_part(auto_map(v)); }
    Elem alpha2(Elem v) const { return pair->chi_part(auto_map(v)); }
};

// Pairing-preservation, checked on every element of the double.
bool preserves_pairing(const DualPair& pair, const GroupHom& h);

// All of O(G (+) G^), identity included, sorted by image table.
std::vector<OrthogonalMap> orth_group(const DualPair& pair);

OrthogonalMap orth_compose(const OrthogonalMap& a, const OrthogonalMap& b);  // a after b
OrthogonalMap orth_invert(const OrthogonalMap& a);

}  // namespace hbp

#endif
