#include "hbp/json_io.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace hbp {

using nlohmann::json;

GroupPtr GroupSpec::build() const {
    if (kind == "cyclic_product") return make_cyclic_product(invariants);
    if (kind == "cayley") return make_from_table(table);
    if (kind == "permutation_gens") return make_from_permutations(degree, perms);
    throw ParseError("unknown group kind: " + kind);
}

GroupSpec GroupSpec::from_group(const FiniteGroup& g) {
    GroupSpec s;
    if (g.abelian_invariants) {
        s.kind = "cyclic_product";
        s.invariants = *g.abelian_invariants;
    } else {
        s.kind = "cayley";
        s.table = g.mul;
    }
    return s;
}

json to_json(const GroupSpec& s) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = s.kind;
    if (s.kind == "cyclic_product") j["invariants"] = s.invariants;
    else if (s.kind == "cayley") j["table"] = s.table;
    else if (s.kind == "permutation_gens") {
        j["degree"] = s.degree;
        j["perms"] = s.perms;
    }
    return j;
}

GroupSpec group_spec_from_json(const json& j) {
    GroupSpec s;
    try {
        s.kind = j.at("kind").get<std::string>();
        if (s.kind == "cyclic_product") s.invariants = j.at("invariants").get<std::vector<int>>();
        else if (s.kind == "cayley")
            s.table = j.at("table").get<std::vector<std::vector<Elem>>>();
        else if (s.kind == "permutation_gens") {
            s.degree = j.at("degree").get<int>();
            s.perms = j.at("perms").get<std::vector<std::vector<int>>>();
        } else {
            throw ParseError("unknown group kind: " + s.kind);
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("group spec: ") + e.what());
    }
    return s;
}

json subgroup_to_json(const Subgroup& s) {
    json j;
    j["members"] = s.members();
    return j;
}

json cocycle_to_json(const Cocycle& c) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["modulus"] = c.modulus;
    j["domain"] = json{{"group", to_json(GroupSpec::from_group(*c.domain.parent()))},
                       {"members", c.domain.members()}};
    j["values"] = c.values;
    return j;
}

Cocycle cocycle_from_json(const json& j, GroupPtr group) {
    Cocycle c;
    try {
        c.modulus = j.at("modulus").get<std::uint32_t>();
        auto members = j.at("domain").at("members").get<std::vector<Elem>>();
        c.domain = Subgroup(std::move(group), std::move(members));
        c.values = j.at("values").get<std::vector<std::vector<std::uint32_t>>>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("cocycle: ") + e.what());
    }
    if (c.modulus == 0) throw ParseError("cocycle: modulus must be >= 1");
    if (static_cast<int>(c.values.size()) != c.domain.size())
        throw ParseError("cocycle: table size does not match the domain");
    for (const auto& row : c.values) {
        if (static_cast<int>(row.size()) != c.domain.size())
            throw ParseError("cocycle: table is not square");
        for (auto v : row)
            if (v >= c.modulus) throw ParseError("cocycle: value exceeds modulus");
    }
    // normalize on load: shifting by the constant coboundary values[e][e]
    // makes the twisted algebra unit the basis element at the identity
    int e = c.domain.local_index(c.domain.parent()->identity);
    std::uint32_t shift = c.values[e][e];
    if (shift != 0)
        for (auto& row : c.values)
            for (auto& v : row) v = (v + c.modulus - shift) % c.modulus;
    return c;
}

Cocycle cocycle_from_json_standalone(const json& j) {
    GroupPtr g;
    try {
        g = group_spec_from_json(j.at("domain").at("group")).build();
    } catch (const json::exception& e) {
        throw ParseError(std::string("cocycle: ") + e.what());
    }
    return cocycle_from_json(j, std::move(g));
}

json class_to_json(const BimoduleClass& c) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["support"] = c.support.members();
    j["cocycle"] = cocycle_to_json(c.rep);
    j["provenance"] = c.provenance;
    return j;
}

json algebra_to_json(const GradedComoduleAlgebra& a) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["modulus"] = a.modulus;
    j["unit"] = a.unit;
    j["degree"] = a.degree;
    json rows = json::array();
    for (int i = 0; i < a.dim(); ++i) {
        json row = json::array();
        for (int jx = 0; jx < a.dim(); ++jx) {
            if (!a.mul[i][jx]) row.push_back(nullptr);
            else
                row.push_back(json{{"exp", a.mul[i][jx]->exp},
                                   {"q", a.mul[i][jx]->q.str()},
                                   {"target", a.mul[i][jx]->target}});
        }
        rows.push_back(std::move(row));
    }
    j["mul"] = std::move(rows);
    return j;
}

json convention_to_json(const ConventionSpec& c) {
    return json{{"match_s", c.ms}, {"match_k", c.mk}, {"eps_s", c.es},  {"eps_k", c.ek},
                {"delta_s", c.ds}, {"delta_k", c.dk}, {"opp_s", c.opp_s}};
}

ConventionSpec convention_from_json(const json& j) {
    ConventionSpec c;
    try {
        c.ms = j.at("match_s").get<int>();
        c.mk = j.at("match_k").get<int>();
        c.es = j.at("eps_s").get<int>();
        c.ek = j.at("eps_k").get<int>();
        c.ds = j.at("delta_s").get<int>();
        c.dk = j.at("delta_k").get<int>();
        c.opp_s = j.at("opp_s").get<bool>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("convention: ") + e.what());
    }
    return c;
}

json orth_to_json(const OrthogonalMap& m) {
    json j;
    j["image"] = m.auto_map.image;
    return j;
}

json brpic_table_to_json(const BrPicTable& t) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["order"] = t.elements.size();
    j["convention"] = convention_to_json(t.convention);
    j["order_flag"] = t.order_flag;
    j["product"] = t.product;
    json els = json::array();
    for (const auto& e : t.elements) {
        els.push_back(json{{"alpha", orth_to_json(e.alpha)}, {"class", class_to_json(e.cls)}});
    }
    j["elements"] = std::move(els);
    json fr = json::array();
    for (bool b : t.freeness) fr.push_back(b);
    j["freeness"] = std::move(fr);
    return j;
}

json fusion_to_json(const std::vector<FusionSummand>& s) {
    json j;
    j["schema_version"] = kSchemaVersion;
    json arr = json::array();
    for (const auto& x : s) {
        arr.push_back(json{{"representative", x.rep},
                           {"subgroup", x.f_s.members()},
                           {"cocycle", cocycle_to_json(x.psi_s)}});
    }
    j["summands"] = std::move(arr);
    return j;
}

// ---- cache ----

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

ResultCache::ResultCache(std::string dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::string ResultCache::key(const std::string& op, const json& inputs) const {
    json k{{"op", op}, {"inputs", inputs}, {"version", kArtifactVersion}};
    std::ostringstream os;
    os << std::hex << fnv1a64(k.dump());
    return os.str();
}

std::optional<std::string> ResultCache::load(const std::string& key) const {
    std::filesystem::path p = std::filesystem::path(dir_) / (key + ".json");
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    try {
        json entry = json::parse(os.str());
        return entry.at("value").get<std::string>();
    } catch (const json::exception&) {
        return std::nullopt;  // unreadable entries count as misses
    }
}

void ResultCache::store(const std::string& key, const std::string& value) const {
    json entry;
    entry["key"] = key;
    entry["created_at"] = static_cast<std::int64_t>(
        std::chrono::duration_cast<std::chrono::seconds>(
            std::chrono::system_clock::now().time_since_epoch())
            .count());
    entry["value"] = value;
    std::filesystem::path dir(dir_);
    std::filesystem::path final = dir / (key + ".json");
    std::filesystem::path tmp = dir / (key + ".tmp." + std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << entry.dump();
    }
    std::filesystem::rename(tmp, final);  // atomic on POSIX
}

}  // namespace hbp
