#include <catch2/catch_amalgamated.hpp>

#include <polyjoin/identities.hpp>
#include <polyjoin/random_gen.hpp>
#include <polyjoin/simplicial_complex.hpp>
#include <polyjoin/verify_drivers.hpp>

using namespace polyjoin;

namespace {

SimplicialComplex from_facets(const GroundSet& g, const std::vector<std::vector<int>>& facets) {
    return build(ComplexKind::facets, g, facets);
}

}  // namespace

TEST_CASE("ground sets: ranges, blocks, masks") {
    GroundSet g = GroundSet::range(4);
    REQUIRE(g.size() == 4);
    REQUIRE(g.universe() == std::vector<int>{1, 2, 3, 4});
    REQUIRE_FALSE(g.has_blocks());

    Mask m = g.mask_of({2, 4});
    REQUIRE(g.ids_of(m) == std::vector<int>{2, 4});
    REQUIRE(mask_size(m) == 2);

    GroundSet b({1, 2, 3, 4, 5}, {2, 3});
    REQUIRE(b.has_blocks());
    REQUIRE(b.block_count() == 2);
    REQUIRE(b.block_ids(1) == std::vector<int>{3, 4, 5});

    REQUIRE_THROWS_AS(GroundSet({1, 1, 2}), invalid_input_error);
    REQUIRE_THROWS_AS(g.mask_of({7}), invalid_input_error);
}

TEST_CASE("void and empty-face complexes are distinct") {
    GroundSet g = GroundSet::range(2);
    SimplicialComplex v = SimplicialComplex::make_void(g);
    SimplicialComplex e = empty_complex(g);

    REQUIRE(v.is_void());
    REQUIRE(v.faces().empty());
    REQUIRE_FALSE(e.is_void());
    REQUIRE(e.faces() == std::vector<Mask>{Mask{0}});
    REQUIRE(v != e);
    REQUIRE(e.contains(Mask{0}));
    REQUIRE_FALSE(v.contains(Mask{0}));
}

TEST_CASE("downward closure from facets") {
    GroundSet g = GroundSet::range(3);
    SimplicialComplex K = from_facets(g, {{1, 2, 3}});
    REQUIRE(K.faces().size() == 8);
    REQUIRE(K.dim() == 2);
    REQUIRE(K == full_simplex(g));

    SimplicialComplex L = from_facets(g, {{1, 2}, {2, 3}});
    REQUIRE(L.faces().size() == 6);  // {}, 1, 2, 3, 12, 23
    REQUIRE(L.contains_ids({2, 3}));
    REQUIRE_FALSE(L.contains_ids({1, 3}));
    REQUIRE(L.facets().size() == 2);
}

TEST_CASE("ghost vertices are allowed and preserved") {
    GroundSet g = GroundSet::range(3);
    SimplicialComplex K = from_facets(g, {{1}});
    REQUIRE(K.contains_ids({1}));
    REQUIRE_FALSE(K.contains_ids({3}));
    REQUIRE(K.ground().size() == 3);  // 2 and 3 stay in the ground set
}

TEST_CASE("dual complex: hand examples") {
    GroundSet g2 = GroundSet::range(2);

    // K = two points; only non-face is {1,2}, so the dual is { complement } = { {} }.
    SimplicialComplex two_points = from_facets(g2, {{1}, {2}});
    REQUIRE(dual(two_points) == empty_complex(g2));
    REQUIRE(dual(empty_complex(g2)) == two_points);

    // Full simplex has no non-faces: its dual is void; and vice versa.
    REQUIRE(dual(full_simplex(g2)).is_void());
    REQUIRE(dual(SimplicialComplex::make_void(g2)) == full_simplex(g2));

    // n = 3 worked example: K generated by {1,2}.
    GroundSet g3 = GroundSet::range(3);
    SimplicialComplex K = from_facets(g3, {{1, 2}});
    // Non-faces: 3, 13, 23, 123 -> complements: 12, 2, 1, {}.
    SimplicialComplex expected = from_facets(g3, {{1, 2}});
    REQUIRE(dual(K) == expected);  // this K is self-dual on [3]
}

TEST_CASE("dual is an involution on random complexes") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        RandomSource src(seed);
        int n = src.next_int(1, 6);
        SimplicialComplex K = gen_random_complex(n, 0.5, src.next_u64());
        REQUIRE(dual(dual(K)) == K);
    }
}

TEST_CASE("De Morgan laws for the dual") {
    RandomSource src(7);
    for (int i = 0; i < 25; ++i) {
        int n = src.next_int(1, 6);
        SimplicialComplex K1 = gen_random_complex(n, 0.4, src.next_u64());
        SimplicialComplex K2 = gen_random_complex(n, 0.6, src.next_u64());
        CheckResult r = check_dual_demorgan(K1, K2);
        INFO(r.detail);
        REQUIRE(r.pass);
    }
}

TEST_CASE("restriction: definition cases") {
    GroundSet g = GroundSet::range(3);
    SimplicialComplex K = from_facets(g, {{1, 2}, {2, 3}});

    // sigma = {2}, omega = {1,3}: faces tau with {2} u tau in K -> {}, {1}, {3}.
    SimplicialComplex r = restriction(K, g.mask_of({2}), g.mask_of({1, 3}));
    REQUIRE_FALSE(r.is_void());
    REQUIRE(r.ground().universe() == std::vector<int>{1, 3});
    REQUIRE(r.faces().size() == 3);
    REQUIRE(r.contains_ids({1}));
    REQUIRE(r.contains_ids({3}));
    REQUIRE_FALSE(r.contains_ids({1, 3}));

    // sigma not a face -> void complex on omega.
    SimplicialComplex rv = restriction(K, g.mask_of({1, 3}), g.mask_of({2}));
    REQUIRE(rv.is_void());
    REQUIRE(rv.ground().universe() == std::vector<int>{2});

    // Overlapping sigma and omega is rejected.
    REQUIRE_THROWS_AS(restriction(K, g.mask_of({1}), g.mask_of({1, 2})), invalid_input_error);
}

TEST_CASE("link is restriction to the complement") {
    GroundSet g = GroundSet::range(4);
    SimplicialComplex K = boundary_complex(g);
    SimplicialComplex lk = link(K, g.mask_of({1}));
    // Link of a vertex of the 2-sphere boundary is the boundary of a triangle.
    REQUIRE(lk == boundary_complex(GroundSet({2, 3, 4})));

    RandomSource src(11);
    for (int i = 0; i < 20; ++i) {
        int n = src.next_int(1, 6);
        SimplicialComplex X = gen_random_complex(n, 0.5, src.next_u64());
        Mask sigma = 0;
        for (int b = 0; b < n; ++b)
            if (src.next_bool(0.3)) sigma |= bit(b);
        Mask omega = X.ground().full_mask() & ~sigma;
        REQUIRE(link(X, sigma) == restriction(X, sigma, omega));
    }
}

TEST_CASE("join of complexes") {
    GroundSet ga({1, 2}), gb({3, 4});
    SimplicialComplex a = from_facets(ga, {{1}, {2}});  // S^0
    SimplicialComplex b = from_facets(gb, {{3}, {4}});  // S^0
    SimplicialComplex j = join({a, b});
    REQUIRE(j.ground().universe() == std::vector<int>{1, 2, 3, 4});
    REQUIRE(j.ground().has_blocks());
    // S^0 * S^0 = 4-cycle: 4 vertices + 4 edges + empty face.
    REQUIRE(j.faces().size() == 9);
    REQUIRE(j.contains_ids({1, 3}));
    REQUIRE_FALSE(j.contains_ids({1, 2}));

    // Void absorbs joins.
    REQUIRE(join({a, SimplicialComplex::make_void(gb)}).is_void());
    // The empty-face complex is the unit.
    SimplicialComplex unit = empty_complex(gb);
    REQUIRE(join({a, unit}).faces().size() == a.faces().size());
}

TEST_CASE("polyhedral join membership rule") {
    // K = two points on [2]; pairs (edge, two endpoints) on each block.
    GroundSet gk = GroundSet::range(2);
    SimplicialComplex K = boundary_complex(gk);
    auto mk_pair = [](int first) {
        GroundSet g({first, first + 1});
        return SimplicialPair(full_simplex(g), boundary_complex(g));
    };
    std::vector<SimplicialPair> pairs{mk_pair(1), mk_pair(3)};
    SimplicialComplex S = polyhedral_join(K, pairs);

    // Joined ground: {1,2 | 3,4}.  A face is in S iff at most one block part
    // is a full edge.  The only excluded subsets are {1,2,3,4} and {1,2},{3,4}
    // extended by nothing else... concretely S = boundary of the 3-simplex.
    REQUIRE(S.ground().universe() == std::vector<int>{1, 2, 3, 4});
    REQUIRE(S == boundary_complex(S.ground()));

    // S(void; ...) is void, S({}); note {} here is the empty-face complex.
    REQUIRE(polyhedral_join(SimplicialComplex::make_void(gk), pairs).is_void());
    SimplicialComplex SE = polyhedral_join(empty_complex(gk), pairs);
    // Only tau = {} contributes: the join of the two sub complexes (a 4-cycle).
    REQUIRE(SE.faces().size() == 9);
}

TEST_CASE("composition with empty-face inners recovers the outer complex") {
    RandomSource src(23);
    for (int i = 0; i < 15; ++i) {
        int m = src.next_int(1, 4);
        SimplicialComplex K = gen_random_complex(m, 0.5, src.next_u64());
        std::vector<SimplicialComplex> parts;
        for (int k = 0; k < m; ++k) parts.push_back(empty_complex(GroundSet({10 + k})));
        SimplicialComplex C = compose(K, parts);
        REQUIRE(C.faces().size() == K.faces().size());
        REQUIRE(C.is_void() == K.is_void());
    }
}

TEST_CASE("restriction duality identity on hand instances") {
    GroundSet g = GroundSet::range(3);
    SimplicialComplex K = from_facets(g, {{1, 2}, {3}});
    for (Mask sigma = 0; sigma < 8; ++sigma) {
        for (Mask omega = 1; omega < 8; ++omega) {
            if (sigma & omega) continue;
            CheckResult r = check_dual_restriction(K, sigma, omega);
            INFO("sigma=" << static_cast<int>(sigma) << " omega=" << static_cast<int>(omega)
                          << ": " << r.detail);
            REQUIRE(r.pass);
        }
    }
}

TEST_CASE("composition duality identity on a hand instance") {
    GroundSet gk = GroundSet::range(2);
    SimplicialComplex K = from_facets(gk, {{1}, {2}});
    std::vector<SimplicialComplex> parts{
        from_facets(GroundSet({1, 2}), {{1}, {2}}),
        from_facets(GroundSet({3, 4}), {{3, 4}}),
    };
    CheckResult r = check_composition_dual(K, parts);
    INFO(r.detail);
    REQUIRE(r.pass);
}

TEST_CASE("exhaustive enumeration of small complexes matches known counts") {
    REQUIRE(downward_closed_families(0).size() == 2);
    REQUIRE(downward_closed_families(1).size() == 3);
    REQUIRE(downward_closed_families(2).size() == 6);
    REQUIRE(downward_closed_families(3).size() == 20);
    REQUIRE(downward_closed_families(4).size() == 168);
    REQUIRE(downward_closed_families(5).size() == 7581);

    // Every family decodes to a valid complex; downward closure is automatic.
    GroundSet g = GroundSet::range(3);
    for (std::uint64_t bits : downward_closed_families(3)) {
        SimplicialComplex K = complex_from_face_bitset(g, bits);
        if (!K.is_void()) {
            for (Mask f : K.faces())
                for (Mask sub = f; ; sub = (sub - 1) & f) {
                    REQUIRE(K.contains(sub));
                    if (sub == 0) break;
                }
        }
    }
}

TEST_CASE("relabel and offset copies preserve structure") {
    GroundSet g = GroundSet::range(3);
    SimplicialComplex K = from_facets(g, {{1, 2}, {3}});
    SimplicialComplex R = relabel(K, GroundSet({7, 8, 9}));
    REQUIRE(R.contains_ids({7, 8}));
    REQUIRE(R.contains_ids({9}));
    REQUIRE_FALSE(R.contains_ids({8, 9}));
    REQUIRE(R.faces().size() == K.faces().size());
    REQUIRE_THROWS_AS(relabel(K, GroundSet({1, 2})), invalid_input_error);
}
