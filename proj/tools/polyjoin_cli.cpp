// Command-line front end: constructions (dual, link, restrict, join,
// polyhedral join, composition), homology and table calculators, character
// and split reports, seeded verification sweeps, the sphere-pair Betti
// calculator, and a reproducible random-complex generator.
//
// Exit codes: 0 success, 1 counterexample found, 2 schema violation,
// 3 resource limit, 4 unsupported ring, 5 internal error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <polyjoin/polyjoin.hpp>

namespace {

using Json = nlohmann::json;
using namespace polyjoin;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitSchema = 2;
constexpr int kExitResource = 3;
constexpr int kExitRing = 4;
constexpr int kExitInternal = 5;

std::size_t default_face_cap() {
    if (const char* env = std::getenv("POLYJOIN_MAX_FACES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (env[0] == '\0' || end == nullptr || *end != '\0' || v == 0)
            throw invalid_input_error("POLYJOIN_MAX_FACES must be a positive integer");
        return static_cast<std::size_t>(v);
    }
    return 100000;
}

Json read_json(const std::string& path) {
    try {
        if (path == "-") return Json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw invalid_input_error("cannot open input: " + path);
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw invalid_input_error(std::string("JSON parse error: ") + e.what());
    }
}

SimplicialComplex read_complex(const std::string& path) {
    return complex_from_json(read_json(path));
}

SimplicialPair read_pair(const std::string& path) { return pair_from_json(read_json(path)); }

// "boundary:<n>", "simplex:<n>", "empty:<n>", "void:<n>", or a JSON path ("-"
// for stdin).
SimplicialComplex complex_from_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        std::string kind = spec.substr(0, colon);
        std::string num = spec.substr(colon + 1);
        bool numeric = !num.empty() && num.find_first_not_of("0123456789") == std::string::npos;
        if (numeric &&
            (kind == "boundary" || kind == "simplex" || kind == "empty" || kind == "void")) {
            int n = std::stoi(num);
            if (n < 1 || n > 16)
                throw invalid_input_error("complex spec size out of range: " + spec);
            GroundSet g = GroundSet::range(n);
            if (kind == "boundary") return boundary_complex(g);
            if (kind == "simplex") return full_simplex(g);
            if (kind == "empty") return empty_complex(g);
            return SimplicialComplex::make_void(g);
        }
    }
    return read_complex(spec);
}

bool is_shorthand_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) return false;
    std::string kind = spec.substr(0, colon);
    std::string num = spec.substr(colon + 1);
    bool numeric = !num.empty() && num.find_first_not_of("0123456789") == std::string::npos;
    return numeric &&
           (kind == "boundary" || kind == "simplex" || kind == "empty" || kind == "void");
}

// Multi-input positions need pairwise-disjoint grounds.  Shorthand specs all
// mint {1..n}, so each one is relabeled past the largest id seen; JSON inputs
// keep their vertex ids verbatim.
std::vector<SimplicialComplex> complexes_from_specs(const std::vector<std::string>& specs) {
    std::vector<SimplicialComplex> parts;
    int next_id = 1;
    for (const std::string& s : specs) {
        SimplicialComplex c = complex_from_spec(s);
        if (is_shorthand_spec(s) && c.ground().size() > 0) {
            std::vector<int> ids(static_cast<std::size_t>(c.ground().size()));
            std::iota(ids.begin(), ids.end(), next_id);
            c = relabel(c, GroundSet(ids));
        }
        for (int v : c.ground().universe()) next_id = std::max(next_id, v + 1);
        parts.push_back(std::move(c));
    }
    return parts;
}

std::vector<int> parse_id_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size()) throw invalid_input_error("bad id list entry: " + item);
        out.push_back(v);
    }
    return out;
}

std::vector<RingSpec> parse_ring_list(const std::string& s) {
    std::vector<RingSpec> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(RingSpec::parse(item));
    }
    if (out.empty()) throw invalid_input_error("empty ring list");
    return out;
}

// "r,q;r,q;..." with 0 <= q <= r per factor.
SpherePairSpec parse_sphere_spec(const std::string& s) {
    std::vector<std::pair<int, int>> rq;
    std::stringstream ss(s);
    std::string entry;
    while (std::getline(ss, entry, ';')) {
        if (entry.empty()) continue;
        auto comma = entry.find(',');
        if (comma == std::string::npos)
            throw invalid_input_error("sphere spec entry needs 'r,q': " + entry);
        rq.emplace_back(std::stoi(entry.substr(0, comma)), std::stoi(entry.substr(comma + 1)));
    }
    if (rq.empty()) throw invalid_input_error("empty sphere spec");
    return SpherePairSpec(std::move(rq));
}

void emit(const Json& j) { std::cout << j.dump(2) << std::endl; }

Json sweep_to_json(const SweepReport& rep) {
    Json j;
    j["id"] = rep.id;
    j["seed"] = rep.seed;
    j["instances"] = rep.instances;
    j["failures"] = rep.failures;
    j["pass"] = rep.pass();
    if (!rep.detail.empty()) j["first_failure"] = rep.detail;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simplicial-complex calculator: dual complexes, polyhedral joins, "
                 "compositions, homology tables, and seeded identity verification"};
    app.require_subcommand(1);

    // --- construction commands -------------------------------------------
    std::string in_dual = "-";
    auto* cmd_dual = app.add_subcommand("dual", "Dual complex (complements of non-faces)");
    cmd_dual->add_option("input", in_dual, "complex spec, JSON path, or '-'");

    std::string in_link = "-", link_sigma;
    auto* cmd_link = app.add_subcommand("link", "Link of a face");
    cmd_link->add_option("input", in_link, "complex spec, JSON path, or '-'");
    cmd_link->add_option("--sigma", link_sigma, "comma-separated vertex ids")->required();

    std::string in_restrict = "-", restrict_sigma, restrict_omega;
    auto* cmd_restrict = app.add_subcommand("restrict", "Restriction by a (sigma, omega) pair");
    cmd_restrict->add_option("input", in_restrict, "complex spec, JSON path, or '-'");
    cmd_restrict->add_option("--sigma", restrict_sigma, "comma-separated vertex ids");
    cmd_restrict->add_option("--omega", restrict_omega, "comma-separated vertex ids")->required();

    std::vector<std::string> join_inputs;
    auto* cmd_join = app.add_subcommand("join", "Join of complexes on disjoint ground sets");
    cmd_join->add_option("inputs", join_inputs, "complex specs or JSON paths")->required();

    std::string in_polyjoin = "-";
    auto* cmd_polyjoin =
        app.add_subcommand("polyjoin", "Polyhedral join of pairs over a control complex");
    cmd_polyjoin->add_option("input", in_polyjoin,
                             "JSON document with 'control' and 'pairs', or '-'");

    std::string compose_k;
    std::vector<std::string> compose_ls;
    auto* cmd_compose = app.add_subcommand("compose", "Composition complex");
    cmd_compose->add_option("--k", compose_k, "outer complex (spec or JSON path)")->required();
    cmd_compose->add_option("--ls", compose_ls, "inner complexes (specs or JSON paths)")
        ->required();

    // --- calculators -------------------------------------------------------
    std::string in_homology = "-", homology_ring = "Z";
    bool homology_unreduced = false;
    auto* cmd_homology = app.add_subcommand("homology", "Reduced (default) or unreduced homology");
    cmd_homology->add_option("input", in_homology, "complex spec, JSON path, or '-'");
    cmd_homology->add_option("--ring", homology_ring, "Z, Q, F2, F3, or Fp:<p>");
    cmd_homology->add_flag("--unreduced", homology_unreduced, "unreduced homology");

    std::string in_table = "-", table_ring = "Z", table_family = "X", table_out = "json";
    auto* cmd_table = app.add_subcommand("table", "Restriction-homology table over (sigma, omega)");
    cmd_table->add_option("input", in_table, "complex spec, JSON path, or '-'");
    cmd_table->add_option("--ring", table_ring, "Z, Q, F2, F3, or Fp:<p>");
    cmd_table->add_option("--family", table_family, "X (all pairs) or R (sigma empty)")
        ->check(CLI::IsMember({"X", "R"}));
    cmd_table->add_option("--out", table_out, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    std::string in_character = "-", character_ring = "Z";
    bool character_unreduced = false;
    auto* cmd_character =
        app.add_subcommand("character", "Coker/ker/im ranks of the inclusion-induced map");
    cmd_character->add_option("input", in_character, "pair JSON path or '-'");
    cmd_character->add_option("--ring", character_ring, "Z, Q, F2, F3, or Fp:<p>");
    cmd_character->add_flag("--unreduced", character_unreduced,
                            "characters on unreduced homology");

    std::string in_split = "-";
    bool split_total = false;
    auto* cmd_split = app.add_subcommand("split", "Integer split verdict of an inclusion pair");
    cmd_split->add_option("input", in_split, "pair JSON path or '-'");
    cmd_split->add_flag("--total", split_total, "verdict for every restricted pair");

    // --- verification -------------------------------------------------------
    std::string verify_id;
    std::uint64_t verify_seed = 1;
    long long verify_trials = -1;
    int verify_max_m = -1, verify_max_n = -1;
    std::string verify_rings, verify_complex;
    auto* cmd_verify = app.add_subcommand("verify", "Seeded verification sweep by identity id");
    cmd_verify->add_option("id", verify_id, "one of: " + [] {
                               std::string s;
                               for (const auto& v : verify_ids()) s += v + " ";
                               return s;
                           }())
        ->required();
    cmd_verify->add_option("--seed", verify_seed, "base seed");
    cmd_verify->add_option("--trials", verify_trials, "instance count (default per id)");
    cmd_verify->add_option("--max-m", verify_max_m, "control-complex ground cap");
    cmd_verify->add_option("--max-n", verify_max_n, "ground-size cap");
    cmd_verify->add_option("--rings", verify_rings, "comma-separated ring list");
    cmd_verify->add_option("--complex", verify_complex,
                           "single-complex mode (spec or JSON path)");

    // --- sphere pairs --------------------------------------------------------
    std::string sp_complex, sp_spec, sp_out = "json", sp_side = "both";
    auto* cmd_sp = app.add_subcommand("betti-spherepair",
                                      "Closed-form Betti tables of a sphere-pair product space");
    cmd_sp->add_option("--complex", sp_complex, "control complex (spec or JSON path)")->required();
    cmd_sp->add_option("--spec", sp_spec, "per-vertex 'r,q' entries joined by ';'")->required();
    cmd_sp->add_option("--out", sp_out, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    cmd_sp->add_option("--side", sp_side, "space, complement, or both (json only)")
        ->check(CLI::IsMember({"space", "complement", "both"}));

    // --- generator -----------------------------------------------------------
    int gen_n = 0;
    double gen_density = 0.5;
    std::uint64_t gen_seed = 1;
    int gen_deletions = 1;
    bool gen_pair = false, gen_void = false;
    auto* cmd_gen = app.add_subcommand("gen-random", "Reproducible random complex or pair");
    cmd_gen->add_option("--n", gen_n, "ground-set size (1..16)")->required();
    cmd_gen->add_option("--density", gen_density, "per-size retention density in [0,1]");
    cmd_gen->add_option("--seed", gen_seed, "seed");
    cmd_gen->add_flag("--pair", gen_pair, "emit a (total, sub) pair");
    cmd_gen->add_option("--deletions", gen_deletions, "facet deletions for the sub complex");
    cmd_gen->add_flag("--void", gen_void, "emit the void complex (never produced randomly)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        Json err;
        err["error"] = {{"kind", "schema"}, {"message", e.what()}};
        std::cerr << err.dump() << std::endl;
        return kExitSchema;
    }

    try {
        if (*cmd_dual) {
            emit(complex_to_json(dual(complex_from_spec(in_dual))));
        } else if (*cmd_link) {
            SimplicialComplex K = complex_from_spec(in_link);
            emit(complex_to_json(link(K, parse_id_list(link_sigma))));
        } else if (*cmd_restrict) {
            SimplicialComplex K = complex_from_spec(in_restrict);
            IndexPair ip(parse_id_list(restrict_sigma), parse_id_list(restrict_omega));
            emit(complex_to_json(restriction(K, ip)));
        } else if (*cmd_join) {
            emit(complex_to_json(join(complexes_from_specs(join_inputs), default_face_cap())));
        } else if (*cmd_polyjoin) {
            auto [K, pairs] = control_pairs_from_json(read_json(in_polyjoin));
            emit(complex_to_json(polyhedral_join(K, pairs)));
        } else if (*cmd_compose) {
            SimplicialComplex K = complex_from_spec(compose_k);
            emit(complex_to_json(compose(K, complexes_from_specs(compose_ls))));
        } else if (*cmd_homology) {
            RingSpec ring = RingSpec::parse(homology_ring);
            SimplicialComplex K = complex_from_spec(in_homology);
            GradedRanks h = homology_unreduced ? homology(simplicial_chains(K, ring, false))
                                               : reduced_homology(K, ring);
            Json out = ranks_to_json(h);
            out["ring"] = ring.str();
            out["reduced"] = !homology_unreduced;
            emit(out);
        } else if (*cmd_table) {
            RingSpec ring = RingSpec::parse(table_ring);
            SimplicialComplex K = complex_from_spec(in_table);
            PairFamily fam = (table_family == "R") ? PairFamily::omega_only : PairFamily::all_pairs;
            SigmaOmegaTable t = sigma_omega_table(K, ring, fam);
            if (table_out == "csv")
                std::cout << table_to_csv(t);
            else
                emit(table_to_json(t));
        } else if (*cmd_character) {
            RingSpec ring = RingSpec::parse(character_ring);
            SimplicialPair p = read_pair(in_character);
            CharacterRanks c = character_unreduced ? character_ranks_unreduced(p, ring)
                                                   : character_ranks(p, ring, true);
            Json out = character_to_json(c);
            out["ring"] = ring.str();
            out["reduced"] = !character_unreduced;
            emit(out);
        } else if (*cmd_split) {
            SimplicialPair p = read_pair(in_split);
            if (split_total) {
                Json arr = Json::array();
                auto reports = split_status_total(p);
                for (const auto& [ip, rep] : reports) {
                    Json row = split_to_json(rep);
                    row["sigma"] = ip.sigma;
                    row["omega"] = ip.omega;
                    arr.push_back(std::move(row));
                }
                Json out;
                out["verdict"] = to_string(combined_verdict(reports));
                out["pairs"] = std::move(arr);
                emit(out);
            } else {
                emit(split_to_json(split_status(p)));
            }
        } else if (*cmd_verify) {
            VerifyOptions opt;
            opt.seed = verify_seed;
            opt.trials = verify_trials;
            opt.max_m = verify_max_m;
            opt.max_n = verify_max_n;
            if (!verify_rings.empty()) opt.rings = parse_ring_list(verify_rings);
            SimplicialComplex single;
            if (!verify_complex.empty()) {
                single = complex_from_spec(verify_complex);
                opt.complex = &single;
            }
            SweepReport rep = run_verify(verify_id, opt);
            emit(sweep_to_json(rep));
            return rep.pass() ? kExitOk : kExitCounterexample;
        } else if (*cmd_sp) {
            SimplicialComplex K = complex_from_spec(sp_complex);
            SpherePairSpec spec = parse_sphere_spec(sp_spec);
            auto [M, Mc] = sphere_pair_betti(K, spec);
            int r = spec.ambient_dimension();
            if (sp_out == "csv") {
                const DecompositionRanks& chosen = (sp_side == "complement") ? Mc : M;
                std::cout << decomposition_to_csv(chosen, r);
            } else {
                Json out;
                out["ambient_dimension"] = r;
                if (sp_side != "complement") out["space"] = decomposition_to_json(M);
                if (sp_side != "space") out["complement"] = decomposition_to_json(Mc);
                emit(out);
            }
        } else if (*cmd_gen) {
            if (gen_void) {
                if (gen_n < 1 || gen_n > 16)
                    throw invalid_input_error("gen-random: need 1 <= n <= 16");
                emit(complex_to_json(SimplicialComplex::make_void(GroundSet::range(gen_n))));
            } else if (gen_pair) {
                emit(pair_to_json(gen_random_pair(gen_n, gen_density, gen_deletions, gen_seed)));
            } else {
                emit(complex_to_json(gen_random_complex(gen_n, gen_density, gen_seed)));
            }
        }
        return kExitOk;
    } catch (const resource_limit_error& e) {
        Json err;
        err["error"] = {{"kind", "resource"}, {"message", e.what()}};
        std::cerr << err.dump() << std::endl;
        return kExitResource;
    } catch (const unsupported_ring_error& e) {
        Json err;
        err["error"] = {{"kind", "ring"}, {"message", e.what()}};
        std::cerr << err.dump() << std::endl;
        return kExitRing;
    } catch (const invalid_input_error& e) {
        Json err;
        err["error"] = {{"kind", "schema"}, {"message", e.what()}};
        std::cerr << err.dump() << std::endl;
        return kExitSchema;
    } catch (const std::exception& e) {
        Json err;
        err["error"] = {{"kind", "internal"}, {"message", e.what()}};
        std::cerr << err.dump() << std::endl;
        return kExitInternal;
    }
}
