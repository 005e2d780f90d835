#ifndef HBP_JSON_IO_HPP
#define HBP_JSON_IO_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "hbp/brpic.hpp"
#include "hbp/cocycle.hpp"
#include "hbp/comodalg.hpp"
#include "hbp/fusion.hpp"
#include "hbp/group.hpp"

namespace hbp {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kArtifactVersion = "hbp-1.0";

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Wire form of a group: cyclic_product | cayley | permutation_gens.
struct GroupSpec {
    std::string kind;
    std::vector<int> invariants;                 // cyclic_product
    std::vector<std::vector<Elem>> table;        // cayley
    int degree = 0;                              // permutation_gens
    std::vector<std::vector<int>> perms;         // permutation_gens

    GroupPtr build() const;
    static GroupSpec from_group(const FiniteGroup& g);
};

nlohmann::json to_json(const GroupSpec& s);
GroupSpec group_spec_from_json(const nlohmann::json& j);

nlohmann::json subgroup_to_json(const Subgroup& s);
nlohmann::json cocycle_to_json(const Cocycle& c);
// group: the parent the cocycle's domain lives in
Cocycle cocycle_from_json(const nlohmann::json& j, GroupPtr group);
// self-contained form carrying its own group spec
Cocycle cocycle_from_json_standalone(const nlohmann::json& j);

nlohmann::json class_to_json(const BimoduleClass& c);
nlohmann::json algebra_to_json(const GradedComoduleAlgebra& a);
nlohmann::json convention_to_json(const ConventionSpec& c);
ConventionSpec convention_from_json(const nlohmann::json& j);
nlohmann::json orth_to_json(const OrthogonalMap& m);
nlohmann::json brpic_table_to_json(const BrPicTable& t);
nlohmann::json fusion_to_json(const std::vector<FusionSummand>& s);

// ---- result cache ----
// Entries are keyed by a content hash of (operation, inputs, artifact
// version); hits must byte-match recomputation under --verify-cache.
class ResultCache {
public:
    explicit ResultCache(std::string dir);

    std::string key(const std::string& op, const nlohmann::json& inputs) const;
    std::optional<std::string> load(const std::string& key) const;
    void store(const std::string& key, const std::string& value) const;  // atomic

private:
    std::string dir_;
};

std::uint64_t fnv1a64(const std::string& data);

}  // namespace hbp

#endif
