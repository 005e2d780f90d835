#include "hbp/fusion.hpp"

namespace hbp {

std::vector<FusionSummand> fuse(GroupPtr g, const Subgroup& f1, const Cocycle& psi1,
                                const Subgroup& f2, const Cocycle& psi2) {
    if (f1.parent() != g || f2.parent() != g) throw DomainMismatch();
    if (!(psi1.domain == f1) || !(psi2.domain == f2)) throw DomainMismatch();
    if (!check_cocycle(psi1) || !check_cocycle(psi2))
        throw std::invalid_argument("fuse: input is not a valid cocycle");

    std::vector<FusionSummand> out;
    for (const auto& dc : double_cosets(g, f2, f1)) {
        Elem s = dc.representative;
        Subgroup fs = intersect(conjugate_subgroup(s, f1), f2);
        Cocycle psi_s = fusion_cocycle(psi1, psi2, s, fs);
        if (!check_cocycle(psi_s))
            throw std::logic_error("fuse: summand cocycle failed validation");
        out.push_back(FusionSummand{s, std::move(fs), std::move(psi_s)});
    }
    return out;
}

}  // namespace hbp
