#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hbp/cli.hpp"
#include "hbp/json_io.hpp"

using namespace hbp;
using nlohmann::json;

namespace {

int run_cli(const std::vector<std::string>& args, std::string& out, std::string& err) {
    std::vector<const char*> argv{"hbp"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream so, se;
    int rc = cli::run(static_cast<int>(argv.size()), argv.data(), so, se);
    out = so.str();
    err = se.str();
    return rc;
}

}  // namespace

TEST_CASE("group spec round trip: cyclic product, cayley, permutation gens") {
    GroupSpec s1;
    s1.kind = "cyclic_product";
    s1.invariants = {2, 3};
    auto j1 = to_json(s1);
    auto r1 = group_spec_from_json(j1);
    CHECK(to_json(r1) == j1);
    CHECK(r1.build()->order == 6);

    GroupSpec s2;
    s2.kind = "cayley";
    s2.table = {{0, 1}, {1, 0}};
    auto j2 = to_json(s2);
    CHECK(to_json(group_spec_from_json(j2)) == j2);

    GroupSpec s3;
    s3.kind = "permutation_gens";
    s3.degree = 3;
    s3.perms = {{1, 0, 2}, {1, 2, 0}};
    auto g3 = group_spec_from_json(to_json(s3)).build();
    CHECK(g3->order == 6);
    CHECK_FALSE(g3->is_abelian());

    CHECK_THROWS_AS(group_spec_from_json(json{{"kind", "nope"}}), ParseError);
}

TEST_CASE("cocycle JSON round trip") {
    auto v4 = make_cyclic_product({2, 2});
    auto w = whole_group(v4);
    Cocycle sigma = trivial_cocycle(w, 2);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            auto ci = v4->coords(w.member(i));
            auto cj = v4->coords(w.member(j));
            sigma.values[i][j] = static_cast<std::uint32_t>((ci[1] * cj[0]) % 2);
        }
    auto j = cocycle_to_json(sigma);
    Cocycle back = cocycle_from_json_standalone(j);
    CHECK(back.modulus == sigma.modulus);
    CHECK(back.values == sigma.values);
    CHECK(cocycle_to_json(back) == j);

    json broken = j;
    broken["values"][0][0] = 7;  // exceeds modulus
    CHECK_THROWS_AS(cocycle_from_json_standalone(broken), ParseError);
}

TEST_CASE("result cache: store, load, key stability, atomic layout") {
    auto dir = std::filesystem::temp_directory_path() / "hbp_cache_test";
    std::filesystem::remove_all(dir);
    ResultCache cache(dir.string());
    json inputs{{"invariants", {2}}};
    std::string k1 = cache.key("orth_enum", inputs);
    std::string k2 = cache.key("orth_enum", inputs);
    CHECK(k1 == k2);
    CHECK(cache.key("brpic_table", inputs) != k1);
    CHECK_FALSE(cache.load(k1).has_value());
    cache.store(k1, "payload");
    auto hit = cache.load(k1);
    REQUIRE(hit.has_value());
    CHECK(*hit == "payload");
    // no stray temp files remain
    int files = 0;
    for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++files;
    CHECK(files == 1);
    std::filesystem::remove_all(dir);
}

TEST_CASE("cli: group info") {
    std::string out, err;
    int rc = run_cli({"group", "info", "--group", R"({"kind":"cyclic_product","invariants":[2,2]})"},
                     out, err);
    CHECK(rc == 0);
    auto j = json::parse(out);
    CHECK(j["order"] == 4);
    CHECK(j["abelian"] == true);
    CHECK(j["invariant_factors"] == json::array({2, 2}));

    rc = run_cli({"group", "info", "--group",
                  R"({"kind":"permutation_gens","degree":3,"perms":[[1,0,2],[1,2,0]]})"},
                 out, err);
    CHECK(rc == 0);
    j = json::parse(out);
    CHECK(j["order"] == 6);
    CHECK(j["abelian"] == false);

    rc = run_cli({"group", "info", "--group", "{not json"}, out, err);
    CHECK(rc == 1);
}

TEST_CASE("cli: orth enum counts and identity-first ordering") {
    std::string out, err;
    int rc = run_cli({"orth", "enum", "--group", R"({"kind":"cyclic_product","invariants":[2]})"},
                     out, err);
    CHECK(rc == 0);
    auto j = json::parse(out);
    CHECK(j["count"] == 2);
    CHECK(j["maps"][0]["image"] == json::array({0, 1, 2, 3}));

    rc = run_cli({"orth", "enum", "--group", R"({"kind":"cyclic_product","invariants":[3]})"},
                 out, err);
    CHECK(rc == 0);
    CHECK(json::parse(out)["count"] == 4);

    // non-abelian input is invalid here
    rc = run_cli({"orth", "enum", "--group",
                  R"({"kind":"permutation_gens","degree":3,"perms":[[1,0,2],[1,2,0]]})"},
                 out, err);
    CHECK(rc == 1);
}

TEST_CASE("cli: brpic table json and text formats") {
    std::string out, err;
    int rc = run_cli({"brpic", "table", "--group", R"({"kind":"cyclic_product","invariants":[2]})"},
                     out, err);
    CHECK(rc == 0);
    auto j = json::parse(out);
    CHECK(j["order"] == 2);
    CHECK(j["product"] == json::array({{0, 1}, {1, 0}}));
    CHECK(j.contains("convention"));
    CHECK((j["order_flag"] == "left" || j["order_flag"] == "right"));

    rc = run_cli({"brpic", "table", "--group", R"({"kind":"cyclic_product","invariants":[3]})",
                  "--format", "text"},
                 out, err);
    CHECK(rc == 0);
    CHECK(out.find("BrPic order 4") != std::string::npos);
}

TEST_CASE("cli: brpic table with cache round trip and verification") {
    auto dir = std::filesystem::temp_directory_path() / "hbp_cli_cache";
    std::filesystem::remove_all(dir);
    std::string out1, out2, err;
    std::string spec = R"({"kind":"cyclic_product","invariants":[2]})";
    int rc = run_cli({"brpic", "table", "--group", spec, "--cache-dir", dir.string()}, out1, err);
    CHECK(rc == 0);
    rc = run_cli({"brpic", "table", "--group", spec, "--cache-dir", dir.string()}, out2, err);
    CHECK(rc == 0);
    CHECK(out1 == out2);
    rc = run_cli({"brpic", "table", "--group", spec, "--cache-dir", dir.string(), "--verify-cache"},
                 out2, err);
    CHECK(rc == 0);
    // corrupt the cache entry: verification must now fail with exit 2
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        std::ofstream f(e.path(), std::ios::trunc);
        f << R"({"key":"x","created_at":0,"value":"tampered"})";
    }
    rc = run_cli({"brpic", "table", "--group", spec, "--cache-dir", dir.string(), "--verify-cache"},
                 out2, err);
    CHECK(rc == 2);
    std::filesystem::remove_all(dir);
}

TEST_CASE("cli: fuse on S3 and invalid cocycle file") {
    std::string out, err;
    std::string s3 = R"({"kind":"permutation_gens","degree":3,"perms":[[1,0,2],[1,2,0]]})";
    // generator index of a transposition in the generated table: element 1
    // is the image of the first generator (order 2)
    int rc = run_cli({"fuse", "--group", s3, "--f1", "1", "--f2", "1"}, out, err);
    CHECK(rc == 0);
    auto j = json::parse(out);
    REQUIRE(j["summands"].size() == 2);
    CHECK(j["summands"][0]["subgroup"].size() == 2);
    CHECK(j["summands"][1]["subgroup"].size() == 1);

    // invalid cocycle file
    auto tmp = std::filesystem::temp_directory_path() / "bad_cocycle.json";
    {
        auto g = make_cyclic_product({2});
        auto w = whole_group(g);
        Cocycle bad = trivial_cocycle(w, 2);
        bad.values[1][1] = 1;
        bad.values[0][1] = 1;  // breaks normalization
        std::ofstream f(tmp);
        f << cocycle_to_json(bad).dump();
    }
    rc = run_cli({"fuse", "--group", R"({"kind":"cyclic_product","invariants":[2]})", "--f1", "1",
                  "--psi1", tmp.string(), "--f2", "1"},
                 out, err);
    CHECK(rc == 1);
    std::filesystem::remove(tmp);
}

TEST_CASE("cli: cocycle check and cobound") {
    auto tmp = std::filesystem::temp_directory_path() / "sigma.json";
    {
        auto v4 = make_cyclic_product({2, 2});
        auto w = whole_group(v4);
        Cocycle sigma = trivial_cocycle(w, 2);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                auto ci = v4->coords(w.member(i));
                auto cj = v4->coords(w.member(j));
                sigma.values[i][j] = static_cast<std::uint32_t>((ci[1] * cj[0]) % 2);
            }
        std::ofstream f(tmp);
        f << cocycle_to_json(sigma).dump();
    }
    std::string out, err;
    int rc = run_cli({"cocycle", "check", tmp.string()}, out, err);
    CHECK(rc == 0);
    CHECK(out.find("cocycle: yes") != std::string::npos);
    rc = run_cli({"cocycle", "cobound", tmp.string()}, out, err);
    CHECK(rc == 0);
    CHECK(out.find("coboundary: no") != std::string::npos);

    // zero cocycle has the zero witness
    auto tmp2 = std::filesystem::temp_directory_path() / "zero.json";
    {
        auto g = make_cyclic_product({2});
        auto w = whole_group(g);
        std::ofstream f(tmp2);
        f << cocycle_to_json(trivial_cocycle(w, 2)).dump();
    }
    rc = run_cli({"cocycle", "cobound", tmp2.string()}, out, err);
    CHECK(rc == 0);
    CHECK(out.find("coboundary: yes") != std::string::npos);
    std::filesystem::remove(tmp);
    std::filesystem::remove(tmp2);
}

TEST_CASE("cli: cotensor of the diagonal with itself classifies to the unit") {
    std::string out, err;
    // inside G x G for G = Z/2 the diagonal is generated by pair (1,1) = 1 + 2*1 = 3
    int rc = run_cli({"cotensor", "--group", R"({"kind":"cyclic_product","invariants":[2]})",
                      "--f1", "3", "--f2", "3"},
                     out, err);
    CHECK(rc == 0);
    auto j = json::parse(out);
    CHECK(j["dim"] == 2);
    CHECK(j["free"] == true);
    REQUIRE(j.contains("class"));
    CHECK(j["class"]["support"] == json::array({0, 3}));
}

TEST_CASE("cocycle load normalizes by the values[e][e] shift") {
    auto z2 = make_cyclic_product({2});
    auto w = whole_group(z2);
    // a constant-shifted cocycle: satisfies the identity but not normalization
    json j;
    j["schema_version"] = 1;
    j["modulus"] = 4;
    j["domain"] = json{{"group", to_json(GroupSpec::from_group(*z2))}, {"members", {0, 1}}};
    j["values"] = json::array({{1, 1}, {1, 3}});  // shift of {0,0;0,2} by 1
    Cocycle c = cocycle_from_json_standalone(j);
    CHECK(check_cocycle(c));
    CHECK(c.values[0][0] == 0);
    CHECK(c.values[1][1] == 2);
}

TEST_CASE("cli: brpic table of the trivial group is 1 x 1") {
    std::string out, err;
    int rc = run_cli({"brpic", "table", "--group", R"({"kind":"cyclic_product","invariants":[]})"},
                     out, err);
    CHECK(rc == 0);
    auto j = json::parse(out);
    CHECK(j["order"] == 1);
    CHECK(j["product"] == json::array({{0}}));
}

TEST_CASE("cli: cocycle check flags a perturbed table") {
    auto tmp = std::filesystem::temp_directory_path() / "perturbed.json";
    {
        auto v4 = make_cyclic_product({2, 2});
        auto w = whole_group(v4);
        Cocycle c = trivial_cocycle(w, 2);
        c.values[2][1] = 1;  // single perturbed entry away from a valid cocycle
        std::ofstream f(tmp);
        f << cocycle_to_json(c).dump();
    }
    std::string out, err;
    int rc = run_cli({"cocycle", "check", tmp.string()}, out, err);
    CHECK(rc == 0);
    CHECK(out.find("cocycle: no") != std::string::npos);
    std::filesystem::remove(tmp);
}
