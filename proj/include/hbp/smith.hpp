#ifndef HBP_SMITH_HPP
#define HBP_SMITH_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace hbp {

// Integer matrices, row-major.
using IntMat = std::vector<std::vector<std::int64_t>>;

struct SmithResult {
    IntMat d;  // diagonal form, same shape as input
    IntMat u;  // rows x rows unimodular, u * a * v = d
    IntMat v;  // cols x cols unimodular
};

// Smith normal form over Z with full transform matrices.
SmithResult smith_normal_form(IntMat a);

// One solution x of a x = b over Z, or nullopt. a is rows x cols, b has rows entries.
std::optional<std::vector<std::int64_t>> solve_integer(const IntMat& a,
                                                       const std::vector<std::int64_t>& b);

// One solution x of a x = b (mod m), entries reduced to [0, m).  Solved by
// Smith normal form of the lifted integer system [a | m*I].
std::optional<std::vector<std::int64_t>> solve_mod(const IntMat& a,
                                                   const std::vector<std::int64_t>& b,
                                                   std::int64_t m);

}  // namespace hbp

#endif
