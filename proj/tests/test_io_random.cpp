// Serialization (strict JSON schemas, CSV shapes), seeded random generators,
// and determinism of the verification sweeps.

#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "polyjoin/polyjoin.hpp"

using namespace polyjoin;

TEST_CASE("complex JSON round trip", "[io]") {
    RandomSource src(19937);
    for (int trial = 0; trial < 20; ++trial) {
        SimplicialComplex K = gen_random_complex(src.next_int(1, 6), 0.5, src.next_u64());
        SimplicialComplex back = complex_from_json(complex_to_json(K));
        INFO("trial " << trial << " K=" << K.str());
        REQUIRE(back == K);
        REQUIRE(back.ground().universe() == K.ground().universe());
    }

    // void complex round trip
    SimplicialComplex v = build(ComplexKind::void_complex, GroundSet::range(3), {});
    Json jv = complex_to_json(v);
    REQUIRE(jv.at("void").get<bool>() == true);
    REQUIRE_FALSE(jv.contains("facets"));
    REQUIRE(complex_from_json(jv).is_void());

    // blocked ground (from a join) keeps its block structure
    SimplicialComplex a = boundary_complex(GroundSet({1, 2}));
    SimplicialComplex b = full_simplex(GroundSet({3, 4, 5}));
    SimplicialComplex j = join({a, b});
    REQUIRE(j.ground().has_blocks());
    SimplicialComplex jj = complex_from_json(complex_to_json(j));
    REQUIRE(jj == j);
    REQUIRE(jj.ground().has_blocks());
    REQUIRE(jj.ground().block_ids(1) == std::vector<int>{3, 4, 5});

    // the empty-face complex serializes as [[]]
    SimplicialComplex e = empty_complex(GroundSet::range(2));
    Json je = complex_to_json(e);
    REQUIRE(je.at("facets").size() == 1);
    REQUIRE(je.at("facets")[0].empty());
    SimplicialComplex ee = complex_from_json(je);
    REQUIRE(ee == e);
    REQUIRE_FALSE(ee.is_void());
}

TEST_CASE("pair JSON round trip", "[io]") {
    RandomSource src(40);
    for (int trial = 0; trial < 10; ++trial) {
        SimplicialPair p = gen_random_pair(src.next_int(1, 5), 0.6, 1, src.next_u64());
        SimplicialPair back = pair_from_json(pair_to_json(p));
        REQUIRE(back.total == p.total);
        REQUIRE(back.sub == p.sub);
    }
    Json doc = {{"control", complex_to_json(full_simplex(GroundSet::range(1)))},
                {"pairs", Json::array({pair_to_json(gen_random_pair(2, 0.7, 1, 5))})}};
    auto [control, pairs] = control_pairs_from_json(doc);
    REQUIRE(control.ground().size() == 1);
    REQUIRE(pairs.size() == 1);
}

TEST_CASE("strict complex schema", "[io]") {
    Json good = {{"universe", {1, 2}}, {"facets", {{1, 2}}}};
    REQUIRE_NOTHROW(complex_from_json(good));

    Json unknown = good;
    unknown["extra"] = 1;
    REQUIRE_THROWS_AS(complex_from_json(unknown), invalid_input_error);

    Json no_universe = {{"facets", {{1}}}};
    REQUIRE_THROWS_AS(complex_from_json(no_universe), invalid_input_error);

    Json void_with_facets = {{"universe", {1}}, {"void", true}, {"facets", {{1}}}};
    REQUIRE_THROWS_AS(complex_from_json(void_with_facets), invalid_input_error);

    Json outside = {{"universe", {1, 2}}, {"facets", {{3}}}};
    REQUIRE_THROWS_AS(complex_from_json(outside), invalid_input_error);

    Json bad_blocks = {{"universe", {1, 2, 3}}, {"blocks", {{1, 3}, {2}}}, {"facets", {{1}}}};
    REQUIRE_THROWS_AS(complex_from_json(bad_blocks), invalid_input_error);

    // facets may not be the empty array; [[ ]] is the empty-face complex
    Json no_faces = {{"universe", {1}}, {"facets", Json::array()}};
    REQUIRE_THROWS_AS(complex_from_json(no_faces), invalid_input_error);
    Json empty_face = Json::parse(R"({"universe": [1], "facets": [[]]})");
    SimplicialComplex ef = complex_from_json(empty_face);
    REQUIRE_FALSE(ef.is_void());
    REQUIRE(ef.faces().size() == 1);

    Json bad_pair = {{"total", good}};
    REQUIRE_THROWS_AS(pair_from_json(bad_pair), invalid_input_error);
}

TEST_CASE("graded ranks serialize with torsion as strings", "[io]") {
    SimplicialComplex rp2 = build(ComplexKind::facets, GroundSet::range(6),
                                  {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                   {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
    Json j = ranks_to_json(reduced_homology(rp2, RingSpec::Z()));
    REQUIRE(j.at("betti").empty());
    REQUIRE(j.at("torsion").at("1") == Json::array({"2"}));

    Json plain = ranks_to_json(reduced_homology(boundary_complex(GroundSet::range(3)),
                                                RingSpec::Z()));
    REQUIRE(plain.at("betti").at("1") == 1);
    REQUIRE_FALSE(plain.contains("torsion"));
}

TEST_CASE("table serialization shapes", "[io]") {
    SimplicialComplex K = build(ComplexKind::facets, GroundSet::range(2), {{1}, {2}});
    SigmaOmegaTable t = sigma_omega_table(K, RingSpec::Z(), PairFamily::all_pairs);

    Json j = table_to_json(t);
    REQUIRE(j.at("ring") == "Z");
    REQUIRE(j.at("family") == "X");
    // zero entries are skipped: only nonzero rows appear
    for (const auto& e : j.at("entries")) REQUIRE_FALSE(e.at("ranks").at("betti").empty());

    std::string csv = table_to_csv(t);
    REQUIRE(csv.rfind("sigma,omega,degree,rank,torsion\n", 0) == 0);
    // the whole-complex entry: omega = {1,2}, one class at shifted degree 1
    REQUIRE(csv.find(",1-2,1,1,\n") != std::string::npos);

    // torsion renders in the last column, semicolon-joined
    SimplicialComplex rp2 = build(ComplexKind::facets, GroundSet::range(6),
                                  {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                   {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
    std::vector<IndexPair> only_full{IndexPair({}, {1, 2, 3, 4, 5, 6})};
    std::string tcsv = table_to_csv(sigma_omega_table(rp2, RingSpec::Z(), only_full));
    REQUIRE(tcsv.find(",1-2-3-4-5-6,2,0,2\n") != std::string::npos);
}

TEST_CASE("decomposition serialization shapes", "[io]") {
    SimplicialComplex K = build(ComplexKind::facets, GroundSet::range(2), {{1}, {2}});
    SpherePairSpec spec({{1, 0}, {1, 0}});
    DecompositionRanks d = decomposition_55(K, sphere_pair_realizations(spec), RingSpec::Q());

    Json j = decomposition_to_json(d);
    REQUIRE(j.at("hat").at("betti").at("0") == 1);
    REQUIRE(j.at("total").at("betti").at("2") == 4);

    std::string csv = decomposition_to_csv(d, spec.ambient_dimension());
    REQUIRE(csv.rfind("part,degree,rank,paired_degree\n", 0) == 0);
    REQUIRE(csv.find("hat,0,1,3\n") != std::string::npos);
    REQUIRE(csv.find("hat,2,2,1\n") != std::string::npos);
    REQUIRE(csv.find("bar,1,1,2\n") != std::string::npos);
}

TEST_CASE("chain complex serialization", "[io]") {
    BasedChainComplex c = reduced_chains(boundary_complex(GroundSet::range(3)), RingSpec::Z());
    Json j = chain_to_json(c);
    REQUIRE(j.at("ring") == "Z");
    REQUIRE(j.at("degrees").at("-1").size() == 1);
    REQUIRE(j.at("degrees").at("1").size() == 3);
    REQUIRE(j.at("boundary").at("0").size() == 1);  // one row: the empty face
}

TEST_CASE("random generators are seed-deterministic", "[random]") {
    for (std::uint64_t seed : {1ull, 42ull, 987654321ull}) {
        SimplicialComplex a = gen_random_complex(5, 0.5, seed);
        SimplicialComplex b = gen_random_complex(5, 0.5, seed);
        REQUIRE(a == b);
    }
    REQUIRE(gen_random_complex(4, 1.0, 9) == full_simplex(GroundSet::range(4)));
    REQUIRE(gen_random_complex(4, 0.0, 9) == empty_complex(GroundSet::range(4)));

    // generated pairs satisfy the sub-complex invariant by construction
    RandomSource src(3);
    for (int trial = 0; trial < 10; ++trial) {
        SimplicialPair p = gen_random_pair(src.next_int(1, 6), 0.5, 2, src.next_u64());
        REQUIRE_FALSE(p.total.is_void());
        for (Mask f : p.sub.faces()) REQUIRE(p.total.contains(f));
    }

    // index pairs are disjoint subsets of the ground
    for (int trial = 0; trial < 10; ++trial) {
        GroundSet g = GroundSet::range(src.next_int(1, 6));
        IndexPair ip = gen_random_index_pair(g, src);
        for (int s : ip.sigma)
            for (int o : ip.omega) REQUIRE(s != o);
    }
}

TEST_CASE("verification sweeps are seed-deterministic", "[random]") {
    VerifyOptions opt;
    opt.seed = 7;
    opt.trials = 25;
    SweepReport a = run_verify("thm2.4", opt);
    SweepReport b = run_verify("thm2.4", opt);
    REQUIRE(a.pass());
    REQUIRE(a.instances == 25);
    REQUIRE(a.str() == b.str());

    VerifyOptions small;
    small.seed = 11;
    small.trials = 40;
    small.max_n = 5;
    SweepReport laws = run_verify("dual-laws", small);
    REQUIRE(laws.pass());
    REQUIRE(laws.instances == 40);

    REQUIRE_THROWS_AS(run_verify("nope", opt), invalid_input_error);
    REQUIRE(verify_ids().size() == 13);
}
