#pragma once

#include <string>

#include "simplicial_complex.hpp"

namespace polyjoin {

/// Outcome of a single identity check; `detail` describes the first mismatch.
struct CheckResult {
    bool pass = true;
    std::string detail;

    static CheckResult ok() { return {true, ""}; }
    static CheckResult fail(std::string d) { return {false, std::move(d)}; }
};

/// Both De Morgan laws for the dual plus the involution, on one ground set.
inline CheckResult check_dual_demorgan(const SimplicialComplex& K1, const SimplicialComplex& K2) {
    if (K1.ground() != K2.ground())
        throw invalid_input_error("De Morgan check needs a shared ground set");
    if (dual(complex_union(K1, K2)) != complex_intersection(dual(K1), dual(K2)))
        return CheckResult::fail("dual of union differs from intersection of duals");
    if (dual(complex_intersection(K1, K2)) != complex_union(dual(K1), dual(K2)))
        return CheckResult::fail("dual of intersection differs from union of duals");
    if (dual(dual(K1)) != K1 || dual(dual(K2)) != K2)
        return CheckResult::fail("dual is not an involution");
    return CheckResult::ok();
}

/**
 * Duality of restrictions: for omega nonempty and sigma-tilde the complement
 * of sigma and omega, the dual of K_(sigma, omega) taken on omega equals
 * (dual K)_(sigma-tilde, omega); when sigma is not a face both sides are the
 * full simplex on omega.
 */
inline CheckResult check_dual_restriction(const SimplicialComplex& K, Mask sigma, Mask omega) {
    if (!omega) throw invalid_input_error("restriction duality needs omega nonempty");
    Mask full = K.ground().full_mask();
    Mask sigma_tilde = full & ~(sigma | omega);
    SimplicialComplex lhs_inner = restriction(K, sigma, omega);
    SimplicialComplex lhs = lhs_inner.is_void() ? full_simplex(lhs_inner.ground()) : dual(lhs_inner);
    SimplicialComplex rhs = restriction(dual(K), sigma_tilde, omega);
    if (lhs_inner.is_void() && rhs != full_simplex(lhs_inner.ground()))
        return CheckResult::fail("sigma not a face: dual restriction is not the full simplex");
    if (!lhs_inner.is_void() && lhs != rhs)
        return CheckResult::fail("dual of restriction differs from restriction of dual");
    return CheckResult::ok();
}

/// Restriction of a polyhedral join equals the polyhedral join of restrictions.
inline CheckResult check_polyjoin_restriction(const SimplicialComplex& K,
                                              const std::vector<SimplicialPair>& pairs,
                                              Mask sigma, Mask omega) {
    SimplicialComplex S = polyhedral_join(K, pairs);
    SimplicialComplex lhs = restriction(S, sigma, omega);
    SimplicialComplex rhs = polyhedral_join(K, restrict_pairs(pairs, sigma, omega));
    if (lhs != rhs)
        return CheckResult::fail("restriction does not commute with the polyhedral join");
    return CheckResult::ok();
}

/// Link of a polyhedral join equals the polyhedral join of links.
inline CheckResult check_polyjoin_link(const SimplicialComplex& K,
                                       const std::vector<SimplicialPair>& pairs,
                                       Mask sigma) {
    SimplicialComplex S = polyhedral_join(K, pairs);
    SimplicialComplex lhs = link(S, sigma);
    SimplicialComplex rhs = polyhedral_join(K, link_pairs(pairs, sigma));
    if (lhs != rhs)
        return CheckResult::fail("link does not commute with the polyhedral join");
    return CheckResult::ok();
}

/// Dual of a composition equals the composition of the duals.
inline CheckResult check_composition_dual(const SimplicialComplex& K,
                                          const std::vector<SimplicialComplex>& parts) {
    std::vector<SimplicialComplex> dual_parts;
    dual_parts.reserve(parts.size());
    for (const auto& L : parts) dual_parts.push_back(dual(L));
    SimplicialComplex lhs = dual(compose(K, parts));
    SimplicialComplex rhs = compose(dual(K), dual_parts);
    if (lhs != rhs)
        return CheckResult::fail("dual of composition differs from composition of duals");
    return CheckResult::ok();
}

} // namespace polyjoin
