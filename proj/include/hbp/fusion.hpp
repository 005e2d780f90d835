#ifndef HBP_FUSION_HPP
#define HBP_FUSION_HPP

#include <vector>

#include "hbp/cocycle.hpp"
#include "hbp/group.hpp"

namespace hbp {

// One indecomposable summand of the tensor product of module categories:
// double-coset representative s, F_s = s^-1 F1 s  intersect  F2, and the
// product cocycle psi_s on it.
struct FusionSummand {
    Elem rep;
    Subgroup f_s;
    Cocycle psi_s;
};

// Decomposition indexed by the double cosets F2 \ G / F1, in representative
// order.
std::vector<FusionSummand> fuse(GroupPtr g, const Subgroup& f1, const Cocycle& psi1,
                                const Subgroup& f2, const Cocycle& psi2);

}  // namespace hbp

#endif
