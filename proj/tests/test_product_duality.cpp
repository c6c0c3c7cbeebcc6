// Product-space rank decompositions, sphere-pair tables and their
// complementary duality, and the staircase product-triangulation oracle.

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include "polyjoin/polyjoin.hpp"

using namespace polyjoin;

namespace {

SimplicialComplex two_points() {
    return build(ComplexKind::facets, GroundSet::range(2), {{1}, {2}});
}

} // namespace

TEST_CASE("unreduced characters of a sphere-pair realization", "[product_duality]") {
    // (S^2, S^0): two components mapping into one, plus a new top class
    SimplicialPair p = sphere_pair_realization(1, 0, 1);
    REQUIRE(p.total.ground().universe() == std::vector<int>{1, 2, 3, 4});
    CharacterRanks ch = character_ranks_unreduced(p, RingSpec::Q());
    REQUIRE(ch.eta.rank == std::map<int, long long>{{0, 1}});
    REQUIRE(ch.gamma.rank == std::map<int, long long>{{0, 1}});
    REQUIRE(ch.alpha.rank == std::map<int, long long>{{2, 1}});

    // equal spheres: the identity map has no kernel or cokernel
    SimplicialPair eq = sphere_pair_realization(0, 0, 1);
    CharacterRanks ide = character_ranks_unreduced(SimplicialPair(eq.total, eq.total),
                                                   RingSpec::Q());
    REQUIRE(ide.gamma.is_zero());
    REQUIRE(ide.alpha.is_zero());
    REQUIRE(ide.eta.rank == std::map<int, long long>{{0, 1}, {1, 1}});
}

TEST_CASE("sphere pair specs validate and complement", "[product_duality]") {
    REQUIRE_THROWS_AS(SpherePairSpec({{1, 2}}), invalid_input_error);
    SpherePairSpec spec({{1, 0}, {2, 1}});
    REQUIRE(spec.ambient_dimension() == 5);
    SpherePairSpec comp = spec.complementary();
    REQUIRE(comp.rq == std::vector<std::pair<int, int>>{{1, 1}, {2, 1}});
    REQUIRE_THROWS_AS(sphere_pair_realization(1, 2, 1), invalid_input_error);
}

TEST_CASE("rank decomposition of the pinned product space", "[product_duality]") {
    SimplicialComplex K = two_points();
    SpherePairSpec spec({{1, 0}, {1, 0}});
    std::vector<SimplicialPair> pairs = sphere_pair_realizations(spec);
    REQUIRE(pairs.size() == 2);
    REQUIRE(pairs[1].total.ground().universe() == std::vector<int>{5, 6, 7, 8});

    DecompositionRanks d = decomposition_55(K, pairs, RingSpec::Q());
    REQUIRE(d.hat.rank == std::map<int, long long>{{0, 1}, {2, 2}});
    REQUIRE(d.bar.rank == std::map<int, long long>{{1, 1}, {2, 2}});
    REQUIRE(total_ranks(d).rank == std::map<int, long long>{{0, 1}, {1, 1}, {2, 4}});

    // the closed-form sphere-pair table gives the same two parts
    auto [M, Mc] = sphere_pair_betti(K, spec);
    REQUIRE(M.hat == d.hat);
    REQUIRE(M.bar == d.bar);

    // integer coefficients are rejected rather than guessed
    REQUIRE_THROWS_AS(decomposition_55(K, pairs, RingSpec::Z()), unsupported_ring_error);
}

TEST_CASE("complement side of the sphere-pair table", "[product_duality]") {
    SimplicialComplex K = two_points();
    SpherePairSpec spec({{1, 0}, {1, 0}});
    auto [M, Mc] = sphere_pair_betti(K, spec);
    int r = spec.ambient_dimension();
    REQUIRE(r == 4);
    // bar tables mirror at r - 1
    REQUIRE(Mc.bar == mirrored(M.bar, r - 1));
    // complement's decomposition realizes on the dual complex's realizations
    std::vector<SimplicialPair> cpairs = sphere_pair_realizations(spec.complementary());
    DecompositionRanks dc = decomposition_55(dual(K), cpairs, RingSpec::Q());
    REQUIRE(dc.hat == Mc.hat);
    REQUIRE(dc.bar == Mc.bar);
}

TEST_CASE("duality of the two sphere-pair tables", "[product_duality]") {
    REQUIRE(duality_check_56(two_points(), SpherePairSpec({{1, 0}, {1, 0}})).pass);
    // void control complex: every face term vanishes, the identity still holds
    SimplicialComplex void_k = build(ComplexKind::void_complex, GroundSet::range(2), {});
    REQUIRE(duality_check_56(void_k, SpherePairSpec({{2, 1}, {1, 1}})).pass);

    RandomSource src(512);
    for (int trial = 0; trial < 10; ++trial) {
        int n = src.next_int(1, 4);
        SimplicialComplex K = gen_random_complex(n, 0.55, src.next_u64());
        std::vector<std::pair<int, int>> rq;
        for (int k = 0; k < n; ++k) {
            int r = src.next_int(0, 2);
            rq.emplace_back(r, src.next_int(0, r));
        }
        CheckResult res = duality_check_56(K, SpherePairSpec(rq));
        INFO("trial " << trial << " K=" << K.str() << ": " << res.detail);
        REQUIRE(res.pass);
    }
}

TEST_CASE("staircase products without a control complex", "[product_duality]") {
    // a single factor triangulates to the factor itself
    SimplicialComplex circle = boundary_complex(GroundSet::range(3));
    StaircaseComplex one = staircase_product({circle});
    REQUIRE(staircase_homology(one, RingSpec::Z(), false) ==
            unreduced_homology(circle, RingSpec::Z()));

    // edge x edge: contractible square
    SimplicialComplex edge = full_simplex(GroundSet::range(2));
    REQUIRE(staircase_homology(staircase_product({edge, edge}), RingSpec::Z(), false).rank ==
            std::map<int, long long>{{0, 1}});

    // two two-point factors: four isolated product points
    SimplicialComplex s0 = two_points();
    REQUIRE(staircase_homology(staircase_product({s0, s0}), RingSpec::Z(), false).rank ==
            std::map<int, long long>{{0, 4}});

    // circle x circle: the torus ranks, including the rank-2 middle
    GradedRanks torus = staircase_homology(staircase_product({circle, circle}),
                                           RingSpec::Z(), false);
    REQUIRE(torus.rank == std::map<int, long long>{{0, 1}, {1, 2}, {2, 1}});
    REQUIRE(torus.torsion.empty());
}

TEST_CASE("controlled staircase product builds the 3-sphere", "[product_duality]") {
    // two (disk, circle) pairs over two isolated points
    SimplicialComplex K = two_points();
    SimplicialComplex d1 = full_simplex(GroundSet({1, 2, 3}));
    SimplicialComplex d2 = full_simplex(GroundSet({4, 5, 6}));
    SimplicialComplex c1 = boundary_complex(GroundSet({1, 2, 3}));
    SimplicialComplex c2 = boundary_complex(GroundSet({4, 5, 6}));
    std::vector<SimplicialComplex> totals{d1, d2}, subs{c1, c2};
    StaircaseComplex model = staircase_product(totals, &K, &subs);
    GradedRanks h = staircase_homology(model, RingSpec::Z(), false);
    REQUIRE(h.rank == std::map<int, long long>{{0, 1}, {3, 1}});
    REQUIRE(h.torsion.empty());
}

TEST_CASE("staircase oracle agrees with the rank decomposition", "[product_duality]") {
    SimplicialComplex K = two_points();
    SpherePairSpec spec({{1, 0}, {1, 0}});
    std::vector<SimplicialPair> pairs = sphere_pair_realizations(spec);
    OracleReport rep = oracle_compare_55(K, pairs, RingSpec::Q());
    INFO(rep.detail);
    REQUIRE(rep.pass);
    REQUIRE(rep.direct.rank == std::map<int, long long>{{0, 1}, {1, 1}, {2, 4}});

    // a second ring and a non-sphere sub-complex pair
    RandomSource src(1313);
    for (int trial = 0; trial < 3; ++trial) {
        SimplicialComplex ctrl = gen_random_complex(2, 0.6, src.next_u64());
        std::vector<SimplicialPair> rnd;
        int first_id = 1;
        for (int k = 0; k < 2; ++k) {
            int nk = src.next_int(2, 3);
            SimplicialPair p = gen_random_pair(nk, 0.8, 1, src.next_u64());
            std::vector<int> ids;
            for (int v = 0; v < nk; ++v) ids.push_back(first_id + v);
            first_id += nk;
            rnd.emplace_back(relabel(p.total, GroundSet(ids)), relabel(p.sub, GroundSet(ids)));
        }
        RingSpec ring = trial % 2 == 0 ? RingSpec::Q() : RingSpec::Fp(2);
        OracleReport r2 = oracle_compare_55(ctrl, rnd, ring);
        INFO("trial " << trial << " K=" << ctrl.str() << ": " << r2.detail);
        REQUIRE(r2.pass);
    }
}
