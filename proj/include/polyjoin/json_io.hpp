#pragma once

// JSON (nlohmann) and CSV serialization for every value the command-line
// surface exchanges: complexes, pairs, graded ranks, tables, characters,
// split reports, decompositions, and chain complexes.  Parsing is strict;
// any deviation from the documented shapes raises invalid_input_error.
//
// Complex document shape:
//   {"universe": [1,2,3], "blocks": [[1,2],[3]]?, "void": false?, "facets": [[1,2],[3]]}
// with "facets": [[]] denoting the complex whose only face is empty, and
// "void": true (facets omitted) denoting the complex with no faces at all.

#include <nlohmann/json.hpp>

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polyjoin/chain_complex.hpp"
#include "polyjoin/errors.hpp"
#include "polyjoin/hochster.hpp"
#include "polyjoin/induced_map.hpp"
#include "polyjoin/product_duality.hpp"
#include "polyjoin/ring.hpp"
#include "polyjoin/simplicial_complex.hpp"

namespace polyjoin {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Complexes.

inline Json complex_to_json(const SimplicialComplex& K) {
    Json j;
    j["universe"] = K.ground().universe();
    if (K.ground().has_blocks()) {
        Json blocks = Json::array();
        for (std::size_t b = 0; b < K.ground().block_sizes().size(); ++b)
            blocks.push_back(K.ground().block_ids(static_cast<int>(b)));
        j["blocks"] = blocks;
    }
    j["void"] = K.is_void();
    if (!K.is_void()) {
        Json facets = Json::array();
        for (Mask f : K.facets()) facets.push_back(K.ground().ids_of(f));
        j["facets"] = facets;
    }
    return j;
}

namespace detail {

inline std::vector<int> int_vector(const Json& j, const std::string& what) {
    if (!j.is_array()) throw invalid_input_error(what + " must be an array");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw invalid_input_error(what + " must hold integers");
        out.push_back(v.get<int>());
    }
    return out;
}

}  // namespace detail

inline SimplicialComplex complex_from_json(const Json& j) {
    if (!j.is_object()) throw invalid_input_error("complex: object expected");
    for (const auto& [key, value] : j.items()) {
        if (key != "universe" && key != "blocks" && key != "void" && key != "facets")
            throw invalid_input_error("complex: unknown key '" + key + "'");
    }
    if (!j.contains("universe")) throw invalid_input_error("complex: 'universe' required");
    std::vector<int> universe = detail::int_vector(j.at("universe"), "complex.universe");

    std::vector<int> block_sizes;  // empty: no block structure
    if (j.contains("blocks")) {
        const Json& blocks = j.at("blocks");
        if (!blocks.is_array()) throw invalid_input_error("complex.blocks must be an array");
        std::vector<int> flattened;
        for (const auto& b : blocks) {
            std::vector<int> ids = detail::int_vector(b, "complex.blocks entry");
            if (ids.empty()) throw invalid_input_error("complex.blocks entries must be nonempty");
            block_sizes.push_back(static_cast<int>(ids.size()));
            flattened.insert(flattened.end(), ids.begin(), ids.end());
        }
        if (flattened != universe)
            throw invalid_input_error(
                "complex.blocks must partition the universe in its given order");
    }

    bool is_void = false;
    if (j.contains("void")) {
        if (!j.at("void").is_boolean()) throw invalid_input_error("complex.void must be boolean");
        is_void = j.at("void").get<bool>();
    }

    GroundSet ground(universe, block_sizes);
    if (is_void) {
        if (j.contains("facets") && !j.at("facets").empty())
            throw invalid_input_error("complex: void complexes take no facets");
        return SimplicialComplex::make_void(ground);
    }
    if (!j.contains("facets"))
        throw invalid_input_error("complex: 'facets' required when not void");
    const Json& facets = j.at("facets");
    if (!facets.is_array() || facets.empty())
        throw invalid_input_error(
            "complex: 'facets' must be a nonempty array ([[ ]] for the empty-face complex)");
    std::vector<std::vector<int>> facet_ids;
    for (const auto& f : facets) facet_ids.push_back(detail::int_vector(f, "complex.facets entry"));
    return build(ComplexKind::facets, ground, facet_ids);
}

inline Json pair_to_json(const SimplicialPair& p) {
    return Json{{"total", complex_to_json(p.total)}, {"sub", complex_to_json(p.sub)}};
}

inline SimplicialPair pair_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("total") || !j.contains("sub"))
        throw invalid_input_error("pair: object with 'total' and 'sub' expected");
    return SimplicialPair(complex_from_json(j.at("total")), complex_from_json(j.at("sub")));
}

// {"control": <complex>, "pairs": [<pair>...]}
inline std::pair<SimplicialComplex, std::vector<SimplicialPair>> control_pairs_from_json(
    const Json& j) {
    if (!j.is_object() || !j.contains("control") || !j.contains("pairs"))
        throw invalid_input_error("document: object with 'control' and 'pairs' expected");
    SimplicialComplex K = complex_from_json(j.at("control"));
    if (!j.at("pairs").is_array())
        throw invalid_input_error("document: 'pairs' must be an array");
    std::vector<SimplicialPair> pairs;
    for (const auto& p : j.at("pairs")) pairs.push_back(pair_from_json(p));
    return {std::move(K), std::move(pairs)};
}

// ---------------------------------------------------------------------------
// Graded ranks.

inline Json ranks_to_json(const GradedRanks& r) {
    Json betti = Json::object();
    for (const auto& [d, v] : r.rank) betti[std::to_string(d)] = v;
    Json torsion = Json::object();
    for (const auto& [d, divs] : r.torsion) {
        Json list = Json::array();
        for (const auto& t : divs) list.push_back(t.str());
        torsion[std::to_string(d)] = list;
    }
    Json j;
    j["betti"] = betti;
    if (!r.torsion.empty()) j["torsion"] = torsion;
    return j;
}

inline Json character_to_json(const CharacterRanks& c) {
    return Json{{"alpha", ranks_to_json(c.alpha)},
                {"gamma", ranks_to_json(c.gamma)},
                {"eta", ranks_to_json(c.eta)}};
}

inline Json split_to_json(const SplitReport& r) {
    Json witnesses = Json::array();
    for (const auto& [d, note] : r.witnesses)
        witnesses.push_back(Json{{"degree", d}, {"note", note}});
    return Json{{"verdict", to_string(r.verdict)},
                {"witnesses", witnesses},
                {"integer_image_rank", ranks_to_json(r.integer_image_rank)}};
}

// ---------------------------------------------------------------------------
// Tables.

inline Json table_to_json(const SigmaOmegaTable& t) {
    Json entries = Json::array();
    for (const auto& [pair, ranks] : t.entries) {
        if (ranks.is_zero()) continue;
        entries.push_back(Json{{"sigma", pair.sigma},
                               {"omega", pair.omega},
                               {"ranks", ranks_to_json(ranks)}});
    }
    return Json{{"ring", t.ring.str()},
                {"family", to_string(t.family)},
                {"entries", entries}};
}

inline std::string csv_escape_ids(const std::vector<int>& ids) { return join_ids(ids, "-"); }

inline std::string table_to_csv(const SigmaOmegaTable& t) {
    std::string out = "sigma,omega,degree,rank,torsion\n";
    for (const auto& [pair, ranks] : t.entries) {
        std::set<int> degrees;
        for (const auto& [d, v] : ranks.rank) degrees.insert(d);
        for (const auto& [d, divs] : ranks.torsion) degrees.insert(d);
        for (int d : degrees) {
            out += csv_escape_ids(pair.sigma) + "," + csv_escape_ids(pair.omega) + "," +
                   std::to_string(d) + "," + std::to_string(ranks.rank_at(d)) + ",";
            const auto& divs = ranks.torsion_at(d);
            for (std::size_t i = 0; i < divs.size(); ++i) {
                if (i) out += ";";
                out += divs[i].str();
            }
            out += "\n";
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Decompositions.

inline Json decomposition_to_json(const DecompositionRanks& d) {
    return Json{{"hat", ranks_to_json(d.hat)},
                {"bar", ranks_to_json(d.bar)},
                {"total", ranks_to_json(total_ranks(d))}};
}

// CSV with the duality-pairing column p <-> r - p - 1.
inline std::string decomposition_to_csv(const DecompositionRanks& d, int ambient_r) {
    std::string out = "part,degree,rank,paired_degree\n";
    auto emit = [&](const char* part, const GradedRanks& r) {
        for (const auto& [deg, v] : r.rank)
            out += std::string(part) + "," + std::to_string(deg) + "," + std::to_string(v) + "," +
                   std::to_string(ambient_r - deg - 1) + "\n";
    };
    emit("hat", d.hat);
    emit("bar", d.bar);
    return out;
}

// ---------------------------------------------------------------------------
// Chain complexes.

inline Json chain_to_json(const BasedChainComplex& C) {
    Json degrees = Json::object();
    Json boundary = Json::object();
    for (int d = C.min_degree(); d < C.min_degree() + C.degree_count(); ++d) {
        degrees[std::to_string(d)] = C.basis_at(d);
        const Mat<long long>& B = C.boundary_from(d);
        Json rows = Json::array();
        for (std::size_t i = 0; i < B.rows(); ++i) {
            Json row = Json::array();
            for (std::size_t j = 0; j < B.cols(); ++j) row.push_back(B(i, j));
            rows.push_back(row);
        }
        boundary[std::to_string(d)] = rows;
    }
    return Json{{"ring", C.ring().str()}, {"degrees", degrees}, {"boundary", boundary}};
}

}  // namespace polyjoin
