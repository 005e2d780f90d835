#include "hbp/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hbp/json_io.hpp"

namespace hbp::cli {

namespace {

using nlohmann::json;

json load_json_arg(const std::string& arg) {
    // inline JSON or a file path
    std::string text = arg;
    if (!arg.empty() && arg[0] != '{' && arg[0] != '[') {
        std::ifstream in(arg, std::ios::binary);
        if (!in) throw ParseError("cannot open file: " + arg);
        std::ostringstream os;
        os << in.rdbuf();
        text = os.str();
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
}

GroupPtr group_from_arg(const std::string& arg) {
    return group_spec_from_json(load_json_arg(arg)).build();
}

std::vector<Elem> parse_gens(const std::string& s) {
    std::vector<Elem> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    return out;
}

Cocycle cocycle_arg(const std::string& arg, GroupPtr g, const Subgroup& domain) {
    if (arg.empty() || arg == "trivial") return trivial_cocycle(domain, 1);
    Cocycle c = cocycle_from_json(load_json_arg(arg), std::move(g));
    if (!(c.domain == domain))
        throw ParseError("cocycle domain does not match the generated subgroup");
    return c;
}

std::string cache_dir_or_env(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("HBP_CACHE_DIR")) return env;
    return {};
}

struct MathFailure : std::runtime_error {
    explicit MathFailure(const std::string& w) : std::runtime_error(w) {}
};

// run an op through the cache: returns the serialized payload
std::string cached(const std::string& cache_dir, bool verify, const std::string& op,
                   const json& inputs, const std::function<std::string()>& compute) {
    if (cache_dir.empty()) return compute();
    ResultCache cache(cache_dir);
    std::string k = cache.key(op, inputs);
    auto hit = cache.load(k);
    if (hit && !verify) return *hit;
    std::string fresh = compute();
    if (hit && verify && *hit != fresh)
        throw MathFailure("cache verification failed: stored result differs from recomputation");
    if (!hit) cache.store(k, fresh);
    return fresh;
}

int cmd_group_info(const std::string& group_arg, bool lattice, std::ostream& out) {
    GroupPtr g = group_from_arg(group_arg);
    json j;
    j["order"] = g->order;
    bool ab = g->is_abelian();
    j["abelian"] = ab;
    if (ab) j["invariant_factors"] = invariant_factors(*g);
    if (g->abelian_invariants) j["positional_invariants"] = *g->abelian_invariants;
    j["exponent"] = g->exponent();
    if (lattice) j["subgroup_count"] = subgroup_count(g);
    out << j.dump(2) << "\n";
    return 0;
}

DualPair dual_pair_of(const GroupPtr& g) {
    if (!g->is_abelian()) throw ParseError("this command needs an abelian group");
    return DualPair(invariant_factors(*g));
}

int cmd_orth_enum(const std::string& group_arg, const std::string& cache_dir, bool verify,
                  std::ostream& out) {
    GroupPtr g = group_from_arg(group_arg);
    DualPair pair = dual_pair_of(g);
    json inputs{{"invariants", invariant_factors(*g)}};
    std::string payload = cached(cache_dir, verify, "orth_enum", inputs, [&] {
        auto maps = orth_group(pair);
        json j;
        j["schema_version"] = kSchemaVersion;
        j["count"] = maps.size();
        json arr = json::array();
        for (const auto& m : maps) arr.push_back(orth_to_json(m));
        j["maps"] = std::move(arr);
        return j.dump(2);
    });
    out << payload << "\n";
    return 0;
}

int cmd_brpic_table(const std::string& group_arg, const std::string& format,
                    const std::string& cache_dir, bool verify, std::ostream& out,
                    std::ostream& err) {
    GroupPtr g = group_from_arg(group_arg);
    DualPair pair = dual_pair_of(g);
    json inputs{{"invariants", invariant_factors(*g)}};
    std::string payload;
    try {
        payload = cached(cache_dir, verify, "brpic_table", inputs, [&] {
            ConventionResolver resolver;
            BrPicTable t = brpic_table(pair, resolver);
            return brpic_table_to_json(t).dump(2);
        });
    } catch (const GroupLawFailure& f) {
        // main scientific diagnostic: dump the offending intermediate algebra
        std::string path = "brpic_failure.json";
        std::ofstream diag(path, std::ios::trunc);
        diag << "{\"error\":\"" << f.what() << "\",\"pair\":[" << f.lhs << "," << f.rhs
             << "],\"algebra\":" << (f.diagnostic.empty() ? "null" : f.diagnostic) << "}\n";
        err << "group law failure: " << f.what() << " (diagnostics: " << path << ")\n";
        return 2;
    }
    if (format == "text") {
        json j = json::parse(payload);
        out << "BrPic order " << j["order"].get<int>() << ", order_flag "
            << j["order_flag"].get<std::string>() << "\n";
        out << "convention " << j["convention"].dump() << "\n";
        for (const auto& row : j["product"]) {
            for (const auto& v : row) out << v.get<int>() << " ";
            out << "\n";
        }
    } else {
        out << payload << "\n";
    }
    return 0;
}

int cmd_fuse(const std::string& group_arg, const std::string& f1_arg, const std::string& psi1_arg,
             const std::string& f2_arg, const std::string& psi2_arg, std::ostream& out) {
    GroupPtr g = group_from_arg(group_arg);
    Subgroup f1 = subgroup_generated(g, parse_gens(f1_arg));
    Subgroup f2 = subgroup_generated(g, parse_gens(f2_arg));
    Cocycle psi1 = cocycle_arg(psi1_arg, g, f1);
    Cocycle psi2 = cocycle_arg(psi2_arg, g, f2);
    if (!check_cocycle(psi1) || !check_cocycle(psi2))
        throw ParseError("input table is not a valid normalized cocycle");
    auto summands = fuse(g, f1, psi1, f2, psi2);
    out << fusion_to_json(summands).dump(2) << "\n";
    return 0;
}

int cmd_cotensor(const std::string& group_arg, const std::string& f1_arg,
                 const std::string& psi1_arg, const std::string& f2_arg,
                 const std::string& psi2_arg, bool do_classify, std::ostream& out) {
    GroupPtr g = group_from_arg(group_arg);
    GroupPtr gxg = direct_product(g, g);
    Subgroup f1 = subgroup_generated(gxg, parse_gens(f1_arg));
    Subgroup f2 = subgroup_generated(gxg, parse_gens(f2_arg));
    Cocycle psi1 = cocycle_arg(psi1_arg, gxg, f1);
    Cocycle psi2 = cocycle_arg(psi2_arg, gxg, f2);
    if (!check_cocycle(psi1) || !check_cocycle(psi2))
        throw ParseError("input table is not a valid normalized cocycle");

    DualPair pair = dual_pair_of(g);
    ConventionResolver resolver;
    ConventionSpec conv = resolver.resolve(pair);

    GradedComoduleAlgebra ta = twisted_group_algebra(f1, psi1);
    GradedComoduleAlgebra tb = twisted_group_algebra(f2, psi2);
    CotensorResult res = cotensor(ta, tb, conv);
    json j;
    j["schema_version"] = kSchemaVersion;
    j["convention"] = convention_to_json(conv);
    j["dim"] = res.algebra.dim();
    j["free"] = check_freeness(ta, tb, res);
    j["algebra"] = algebra_to_json(res.algebra);
    if (do_classify) {
        ClassifyResult cr = classify(res.algebra);
        if (std::holds_alternative<BimoduleClass>(cr))
            j["class"] = class_to_json(std::get<BimoduleClass>(cr));
        else {
            const auto& u = std::get<Unreduced>(cr);
            j["unreduced"] = json{{"reason", u.reason}, {"summands", u.summands},
                                  {"detail", u.detail}};
        }
    }
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_cocycle(const std::string& mode, const std::string& file, std::ostream& out) {
    Cocycle c = cocycle_from_json_standalone(load_json_arg(file));
    bool ok = check_cocycle(c);
    out << "cocycle: " << (ok ? "yes" : "no") << "\n";
    if (!ok) return mode == "check" ? 0 : 1;
    if (mode == "cobound") {
        auto w = coboundary_witness(c);
        if (!w) {
            out << "coboundary: no\n";
        } else {
            out << "coboundary: yes\nwitness:";
            for (auto v : *w) out << " " << v;
            out << "\n";
        }
    }
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact toolkit for twisted group algebras, double-coset fusion rules and "
                 "the Brauer-Picard group of Rep(G) for finite abelian G"};
    app.require_subcommand(1);

    std::string group_arg, format = "json", cache_dir_flag, f1_arg, f2_arg, psi1_arg, psi2_arg,
                cocycle_file;
    bool verify_cache = false, lattice = false, no_classify = false;

    auto* grp = app.add_subcommand("group", "group inspection");
    auto* grp_info = grp->add_subcommand("info", "order, invariants, exponent");
    grp_info->add_option("--group", group_arg, "group spec (inline JSON or file)")->required();
    grp_info->add_flag("--lattice", lattice, "also count subgroups");

    auto* orth = app.add_subcommand("orth", "orthogonal group of G (+) G^");
    auto* orth_enum = orth->add_subcommand("enum", "enumerate O(G (+) G^)");
    orth_enum->add_option("--group", group_arg)->required();
    orth_enum->add_option("--cache-dir", cache_dir_flag);
    orth_enum->add_flag("--verify-cache", verify_cache);

    auto* brp = app.add_subcommand("brpic", "Brauer-Picard group of Rep(G)");
    auto* brp_table = brp->add_subcommand("table", "full product table");
    brp_table->add_option("--group", group_arg)->required();
    brp_table->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    brp_table->add_option("--cache-dir", cache_dir_flag);
    brp_table->add_flag("--verify-cache", verify_cache);

    auto* fuse_cmd = app.add_subcommand("fuse", "double-coset fusion rule");
    fuse_cmd->add_option("--group", group_arg)->required();
    fuse_cmd->add_option("--f1", f1_arg, "generators of F1, comma separated")->required();
    fuse_cmd->add_option("--psi1", psi1_arg, "cocycle file for F1 (or 'trivial')");
    fuse_cmd->add_option("--f2", f2_arg, "generators of F2, comma separated")->required();
    fuse_cmd->add_option("--psi2", psi2_arg, "cocycle file for F2 (or 'trivial')");

    auto* cot = app.add_subcommand("cotensor", "cotensor product of twisted group algebras over G x G");
    cot->add_option("--group", group_arg)->required();
    cot->add_option("--f1", f1_arg, "generators of L1 inside G x G (pair encoding)")->required();
    cot->add_option("--psi1", psi1_arg);
    cot->add_option("--f2", f2_arg)->required();
    cot->add_option("--psi2", psi2_arg);
    cot->add_flag("--no-classify", no_classify);

    auto* coc = app.add_subcommand("cocycle", "cocycle utilities");
    auto* coc_check = coc->add_subcommand("check", "validate the cocycle identity");
    coc_check->add_option("file", cocycle_file)->required();
    auto* coc_cob = coc->add_subcommand("cobound", "solve for a coboundary witness");
    coc_cob->add_option("file", cocycle_file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 1;
    }

    try {
        std::string cache_dir = cache_dir_or_env(cache_dir_flag);
        if (grp_info->parsed()) return cmd_group_info(group_arg, lattice, out);
        if (orth_enum->parsed())
            return cmd_orth_enum(group_arg, cache_dir, verify_cache, out);
        if (brp_table->parsed())
            return cmd_brpic_table(group_arg, format, cache_dir, verify_cache, out, err);
        if (fuse_cmd->parsed())
            return cmd_fuse(group_arg, f1_arg, psi1_arg, f2_arg, psi2_arg, out);
        if (cot->parsed())
            return cmd_cotensor(group_arg, f1_arg, psi1_arg, f2_arg, psi2_arg, !no_classify, out);
        if (coc_check->parsed()) return cmd_cocycle("check", cocycle_file, out);
        if (coc_cob->parsed()) return cmd_cocycle("cobound", cocycle_file, out);
        err << "no subcommand\n";
        return 1;
    } catch (const MathFailure& e) {
        err << "verification failure: " << e.what() << "\n";
        return 2;
    } catch (const GroupLawFailure& e) {
        err << "verification failure: " << e.what() << "\n";
        return 2;
    } catch (const ConventionUnresolved& e) {
        err << "verification failure: " << e.what() << "\n";
        return 2;
    } catch (const ReductionStuck& e) {
        err << "verification failure: " << e.what() << "\n";
        return 2;
    } catch (const IllDefinedCocycle& e) {
        err << "verification failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace hbp::cli
