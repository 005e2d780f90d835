#ifndef HBP_COCYCLE_HPP
#define HBP_COCYCLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hbp/duality.hpp"
#include "hbp/group.hpp"

namespace hbp {

struct DomainMismatch : std::runtime_error {
    DomainMismatch() : std::runtime_error("cocycle domains differ") {}
};
struct NotASubgroup : std::runtime_error {
    NotASubgroup() : std::runtime_error("not a subgroup of the cocycle domain") {}
};
struct ConjugateOutsideDomain : std::runtime_error {
    ConjugateOutsideDomain() : std::runtime_error("conjugate falls outside the cocycle domain") {}
};
struct SubgroupMismatch : std::runtime_error {
    SubgroupMismatch() : std::runtime_error("subgroup does not match s^-1 F1 s  intersect  F2") {}
};
struct IllDefinedCocycle : std::runtime_error {
    IllDefinedCocycle() : std::runtime_error("cocycle value depends on the choice of preimage") {}
};

// Normalized 2-cocycle on a subgroup F, valued in formal roots of unity:
// values[x][y] is the exponent of zeta_M, indexed by local member positions.
struct Cocycle {
    Subgroup domain;
    std::uint32_t modulus = 1;
    std::vector<std::vector<std::uint32_t>> values;

    std::uint32_t at_local(int i, int j) const { return values[i][j]; }
    std::uint32_t at(Elem x, Elem y) const {
        return values[domain.local_index(x)][domain.local_index(y)];
    }
};

Cocycle trivial_cocycle(const Subgroup& f, std::uint32_t modulus = 1);

// Cocycle identity + normalization, all triples.
bool check_cocycle(const Cocycle& psi);

// Exponents rescaled into Z/m2 (modulus | m2), k -> k * (m2/m).
Cocycle rescale_modulus(const Cocycle& psi, std::uint32_t m2);
// Divide out the largest d | modulus common to all values; minimal faithful form.
Cocycle reduce_modulus(const Cocycle& psi);

// c with c(x) + c(y) - c(xy) = values[x][y] (mod M) and c(e) = 0, or nullopt.
// Solved over Z/M via integer Smith normal form on the lifted system.
std::optional<std::vector<std::int64_t>> coboundary_witness(const Cocycle& psi);

// delta(c) as a cocycle table on the same domain.
Cocycle coboundary_of(const Subgroup& f, std::uint32_t modulus,
                      const std::vector<std::int64_t>& c);

Cocycle add(const Cocycle& a, const Cocycle& b);       // lcm-merged
Cocycle subtract(const Cocycle& a, const Cocycle& b);  // lcm-merged
bool cohomologous(const Cocycle& psi, const Cocycle& phi);

Cocycle restrict_cocycle(const Cocycle& psi, const Subgroup& sub);
// Table on s^-1 F s with values psi(s x s^-1, s y s^-1).
Cocycle conj_pullback(const Cocycle& psi, Elem s);

// psi_s(x,y) = psi1(s x s^-1, s y s^-1) + psi2(x,y) on fs = s^-1 F1 s  int  F2.
Cocycle fusion_cocycle(const Cocycle& psi1, const Cocycle& psi2, Elem s, const Subgroup& fs);

// Alternating form beta(x,y) = psi(x,y) - psi(y,x) mod M (abelian domain).
std::vector<std::vector<std::uint32_t>> alternating_form(const Cocycle& psi);

// Deterministic bilinear cocycle on an abelian subgroup whose alternating
// form equals the given one: psi(x,y) = sum_{i>j} B(b_i,b_j) x_i y_j over the
// abelian_basis coordinates.
Cocycle cocycle_from_alternating(const Subgroup& l, std::uint32_t modulus,
                                 const std::vector<std::vector<std::uint32_t>>& beta);

// The pair (L_alpha, psi_alpha) of an orthogonal map: support
// L = {(alpha1(g,chi), g)} inside G x G, and the class whose alternating form
// is B(x,y) = -<alpha2(v_x), alpha1(v_y)> + <chi_x, g_y>.  Well-definedness
// of B over the choice of preimage is checked exhaustively.
struct BrPicCocycle {
    GroupPtr gxg;
    Subgroup support;
    Cocycle psi;
};
// gxg, when given, must be direct_product(base, base) of alpha's pair; passing
// it keeps the supports of one session over a shared grading group.
BrPicCocycle brpic_cocycle(const OrthogonalMap& alpha, GroupPtr gxg = nullptr);

}  // namespace hbp

#endif
