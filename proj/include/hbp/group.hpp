#ifndef HBP_GROUP_HPP
#define HBP_GROUP_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hbp {

using Elem = int;  // dense element index 0..order-1

struct NotAGroup : std::runtime_error {
    explicit NotAGroup(const std::string& reason)
        : std::runtime_error("not a group: " + reason), reason(reason) {}
    std::string reason;  // "no-identity" | "not-associative" | "missing-inverse"
};

struct OrderCapExceeded : std::runtime_error {
    OrderCapExceeded() : std::runtime_error("group order exceeds configured cap") {}
};

struct EnumerationCapExceeded : std::runtime_error {
    EnumerationCapExceeded() : std::runtime_error("enumeration domain exceeds configured cap") {}
};

inline constexpr int kOrderCap = 256;        // table construction
inline constexpr int kAutCapNonAbelian = 16; // brute search domain
inline constexpr int kAutCapAbelian = 64;    // generator-image search domain

// Finite group given by its full multiplication table.  Immutable after
// construction; shared between subgroups and algebras via shared_ptr.
class FiniteGroup {
public:
    int order = 0;
    std::vector<std::vector<Elem>> mul;  // mul[x][y]
    Elem identity = 0;
    std::vector<Elem> inv;

    // Present iff elements are mixed-radix tuples over these cyclic factors
    // (little-endian: first coordinate varies fastest).
    std::optional<std::vector<int>> abelian_invariants;

    // Set when the group was built as an external direct product; pairs
    // encode as left + left_order * right.
    struct ProductSplit {
        std::shared_ptr<const FiniteGroup> left;
        std::shared_ptr<const FiniteGroup> right;
    };
    std::optional<ProductSplit> product_split;

    Elem op(Elem x, Elem y) const { return mul[x][y]; }
    Elem inverse(Elem x) const { return inv[x]; }
    bool is_abelian() const;
    int element_order(Elem x) const;
    int exponent() const;  // lcm of element orders

    // Coordinates for positional (abelian_invariants) groups.
    std::vector<int> coords(Elem x) const;
    Elem from_coords(const std::vector<int>& c) const;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

class Subgroup {
public:
    Subgroup() = default;
    Subgroup(GroupPtr parent, std::vector<Elem> members);

    const GroupPtr& parent() const { return parent_; }
    const std::vector<Elem>& members() const { return members_; }  // sorted
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(Elem x) const { return mask_[static_cast<std::size_t>(x)] != 0; }
    // position of x in the sorted member list, -1 if absent
    int local_index(Elem x) const { return local_[static_cast<std::size_t>(x)]; }
    Elem member(int i) const { return members_[static_cast<std::size_t>(i)]; }

    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.parent_ == b.parent_ && a.members_ == b.members_;
    }

private:
    GroupPtr parent_;
    std::vector<Elem> members_;
    std::vector<char> mask_;
    std::vector<int> local_;
};

struct GroupHom {
    GroupPtr source;
    GroupPtr target;
    std::vector<Elem> image;  // image[x]

    Elem operator()(Elem x) const { return image[static_cast<std::size_t>(x)]; }
    bool is_bijective() const;
    void verify() const;  // throws if not a homomorphism fixing identity
};

// ---- construction ----

// Direct product of cyclic groups Z/n1 x ... x Z/nk, positional encoding.
GroupPtr make_cyclic_product(const std::vector<int>& invariants);

// Validate a full multiplication table.  abelian_invariants stays unset (the
// input encoding is kept verbatim); use invariant_factors() for the
// isomorphism class of a commutative table.
GroupPtr make_from_table(const std::vector<std::vector<Elem>>& table);

// Group generated by permutations in one-line image form (all of size n).
GroupPtr make_from_permutations(int n, const std::vector<std::vector<int>>& perms);

// External direct product with product_split metadata.
GroupPtr direct_product(GroupPtr a, GroupPtr b);
inline Elem pair_encode(const FiniteGroup& prod, Elem left, Elem right) {
    return left + prod.product_split->left->order * right;
}
inline Elem pair_left(const FiniteGroup& prod, Elem x) {
    return x % prod.product_split->left->order;
}
inline Elem pair_right(const FiniteGroup& prod, Elem x) {
    return x / prod.product_split->left->order;
}

// ---- subgroup machinery ----

Subgroup subgroup_generated(GroupPtr g, const std::vector<Elem>& gens);
Subgroup whole_group(GroupPtr g);
Subgroup trivial_subgroup(GroupPtr g);
Subgroup conjugate_subgroup(Elem s, const Subgroup& f);  // { s^-1 f s }
Subgroup intersect(const Subgroup& a, const Subgroup& b);

struct DoubleCoset {
    Elem representative;       // minimal element index in the coset
    std::vector<Elem> members; // sorted
};

// Partition of G into double cosets F2 s F1, sorted by representative.
std::vector<DoubleCoset> double_cosets(GroupPtr g, const Subgroup& f2, const Subgroup& f1);

// All automorphisms, sorted by image table.  Abelian positional groups use
// generator-image search; otherwise a backtracking search over bijections,
// capped at kAutCapNonAbelian.
std::vector<GroupHom> enumerate_automorphisms(GroupPtr g);

// Invariant factors n1 | n2 | ... of a commutative group (any encoding).
std::vector<int> invariant_factors(const FiniteGroup& g);

// Independent generators of an abelian subgroup: list of (element, order)
// with unique mixed-radix coordinates; total product of orders = |S|.
struct AbelianBasis {
    std::vector<Elem> gens;          // elements of the parent group
    std::vector<int> orders;         // same length
    std::vector<std::vector<int>> coord;  // coord[i] = coordinates of members()[i]
};
AbelianBasis abelian_basis(const Subgroup& s);

// Number of distinct subgroups (desk scale; order <= kAutCapAbelian).
int subgroup_count(GroupPtr g);

}  // namespace hbp

#endif
