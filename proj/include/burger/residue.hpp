#pragma once

#include <array>
#include <string>
#include <vector>

#include "burger/numeric.hpp"
#include "burger/sign_involution.hpp"
#include "burger/weighted_space.hpp"

namespace burger {

// A family of weighted hypersurfaces: degree-d forms on `space` subject to an
// evenness constraint. Requires degree > sum of weights (general type).
struct SurfaceFamily {
    SurfaceFamily(WeightedSpace space_, Integer degree_, EvennessConstraint evenness_);

    WeightedSpace space;
    Integer degree;
    EvennessConstraint evenness;

    // Constrained monomials of the family degree, canonical order.
    std::vector<WMonomial> basis() const;
    // Monomials of degree (degree - sum of weights); these index the residue
    // generators x_k * Omega / f spanning H^{0,2}.
    std::vector<WMonomial> residue_generators() const;

    std::string to_string() const;
};

// The induced sign action of three involutions on the residue generators.
// Entry formula: lambda[j][k] = sign_{sigma_j}(g_k) * omega_sign(sigma_j) * eps_j.
struct SignMatrix {
    std::vector<SignInvolution> rows;  // exactly 3 involutions
    std::vector<WMonomial> generators;
    std::array<int, 3> f_signs{};              // the semi-invariance signs eps_j
    std::vector<std::vector<int>> entries;     // entries[j][k] in {+1,-1}

    std::vector<int> row(std::size_t j) const { return entries.at(j); }
    std::vector<int> column(std::size_t k) const;
    std::vector<std::string> row_strings() const;  // e.g. {"+--","-+-","--+"}
};

SignMatrix generator_sign_matrix(const SurfaceFamily& fam,
                                 const std::vector<SignInvolution>& triple,
                                 const std::array<int, 3>& f_signs);

// Number of +1 entries: the rank of the invariant part of H^{2,0} in the
// quotient by the row's involution.
long quotient_pg(const std::vector<int>& row);

// Sign-level K3 criterion: the quotient has p_g exactly 1.
bool k3_quotient_check(const std::vector<int>& row);

// True iff the three column sign vectors are exactly (+,-,-), (-,+,-), (-,-,+).
bool eigensplit_check(const SignMatrix& m);

Integer geometric_genus(const SurfaceFamily& fam);

// (degree - sum q)^2 * degree / prod q, evaluated on the well-formed model of
// the space (the raw formula assumes well-formedness). Cross-check value only.
Rational canonical_square(const SurfaceFamily& fam);

// canonical_square - (2 * geometric_genus - 4): the excess over the Noether line.
Rational noether_gap(const SurfaceFamily& fam);

}  // namespace burger
