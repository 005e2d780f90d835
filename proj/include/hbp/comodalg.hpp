#ifndef HBP_COMODALG_HPP
#define HBP_COMODALG_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hbp/cocycle.hpp"
#include "hbp/group.hpp"
#include "hbp/rational.hpp"
#include "hbp/root_ring.hpp"

namespace hbp {

struct NotAProductGrading : std::runtime_error {
    NotAProductGrading() : std::runtime_error("grading group is not a recorded direct product") {}
};
struct ConventionUnresolved : std::runtime_error {
    explicit ConventionUnresolved(const std::string& what) : std::runtime_error(what) {}
};
struct ReductionStuck : std::runtime_error {
    explicit ReductionStuck(const std::string& what)
        : std::runtime_error("reduction stuck: " + what) {}
};

// Monomial algebra graded by a finite group, scalars in Q[x]/(x^M - 1).
// Products of basis elements are single monomials q * zeta^exp * b_target,
// or zero.  The grading is the (group-like) comodule structure.
class GradedComoduleAlgebra {
public:
    struct MulEntry {
        std::uint32_t exp = 0;  // power of zeta_M
        Rational q = Rational(1);
        int target = 0;
    };

    GroupPtr grading;
    std::uint32_t modulus = 1;
    std::vector<Elem> degree;  // degree[i] in grading
    std::vector<std::vector<std::optional<MulEntry>>> mul;
    int unit = 0;

    int dim() const { return static_cast<int>(degree.size()); }
    RootElem coeff(int i, int j) const {
        const auto& e = mul[i][j];
        if (!e) return RootElem::zero(modulus);
        return RootElem::monomial(modulus, e->exp, e->q);
    }

    // unitality + degree compatibility; associativity on all triples when
    // full is set (exhaustive desk-scale assertion)
    void validate(bool full_associativity) const;
};

// twisted group algebra k_psi F: basis {u_x : x in F}, degree(u_x) = x,
// u_x u_y = zeta^psi(x,y) u_{xy}, graded by F's parent group
GradedComoduleAlgebra twisted_group_algebra(const Subgroup& support, const Cocycle& psi);

// diag(G): basis {u_g}, degree (g,g) in G x G, trivial cocycle
GradedComoduleAlgebra diag_algebra(GroupPtr g);
GradedComoduleAlgebra diag_algebra_on(GroupPtr gxg);  // same, over a provided G x G

enum class BarVariant { PlainAntipode, SwapAntipode };

// opposite multiplication, degrees through the antipode (plain: d -> d^-1;
// swap: (x,y) -> (y^-1, x^-1), needs a product grading)
GradedComoduleAlgebra bar(const GradedComoduleAlgebra& a,
                          BarVariant variant = BarVariant::PlainAntipode);

// One point in the bookkeeping candidate space for the cotensor product:
// matching rule  pi_{ms}(deg_S)^{es} * pi_{mk}(deg_K)^{ek} = e, output degree
// (pi_{3-ms}(deg_S)^{ds}, pi_{3-mk}(deg_K)^{dk}), optional opposite
// multiplication on the S factor.
struct ConventionSpec {
    int ms = 2, mk = 2;
    int es = +1, ek = +1;
    int ds = -1, dk = +1;
    bool opp_s = true;

    friend bool operator==(const ConventionSpec&, const ConventionSpec&) = default;
};

// paper-literal candidate is index 0; 128 candidates total
ConventionSpec convention_candidate(int index);
inline constexpr int kConventionCount = 128;

struct CotensorResult {
    GradedComoduleAlgebra algebra;
    std::vector<std::pair<int, int>> pairs;  // basis of the cotensor as (S,K) index pairs
    ConventionSpec convention;
};

// Matched-pair subalgebra of (S-bar (x) K) under the chosen convention.
CotensorResult cotensor(const GradedComoduleAlgebra& s, const GradedComoduleAlgebra& k,
                        const ConventionSpec& conv);

// S (x) K free as a left module over the cotensor: basis orbits permuted
// freely and transitively up to nonzero scalars.
bool check_freeness(const GradedComoduleAlgebra& s, const GradedComoduleAlgebra& k,
                    const CotensorResult& c);

// no proper nonzero homogeneous right ideal; monomial saturation criterion
bool is_graded_simple(const GradedComoduleAlgebra& a);

struct BimoduleClass {
    Subgroup support;
    Cocycle rep;
    std::string provenance;
};

struct Unreduced {
    std::string reason;  // "decomposable"
    int summands = 0;
    std::string detail;
};

using ClassifyResult = std::variant<BimoduleClass, Unreduced>;

// Graded-Morita reduction: cut by character idempotents of a maximal
// isotropic subgroup of the identity-degree kernel until every homogeneous
// component has dimension <= 1, then read off (support, cocycle).
ClassifyResult classify(const GradedComoduleAlgebra& a);

// supports equal as element sets and representatives cohomologous
bool class_equal(const BimoduleClass& a, const BimoduleClass& b);

// Deterministic representative with the same support and alternating form
// (abelian supports); used to compare reduction outputs across pipelines.
// modulus, when nonzero, fixes the output exponent modulus (it must be a
// multiple of the reduced form's natural modulus).
BimoduleClass canonical_class(const BimoduleClass& c, std::uint32_t modulus = 0);

}  // namespace hbp

#endif
