#pragma once

#include <string>
#include <vector>

#include "burger/numeric.hpp"
#include "burger/weighted_space.hpp"

namespace burger {

// A complete linear system of constrained monomials of one degree.
struct MonomialSystem {
    MonomialSystem(WeightedSpace space_, Integer degree_, EvennessConstraint constraint_);

    WeightedSpace space;
    Integer degree;
    EvennessConstraint constraint;
    std::vector<WMonomial> basis;  // canonical order, derived at construction
};

struct DelormeResult {
    bool pass = false;
    long witness_k = 0;      // the failing k, when pass == false
    WMonomial witness;       // a degree k*m monomial with no degree-m divisor
    long k_max_used = 0;
    std::string to_string() const;
};

// Checks, for every k in 2..k_max, that each monomial of weighted degree k*m
// has a componentwise sub-monomial of weighted degree exactly m. This is the
// divisibility hypothesis of the very-ampleness criterion in its E(x) = 0 case.
DelormeResult delorme_divisibility(const WeightedSpace& space, const Integer& m, long k_max);

// Default bound 1 + sum of weights; the criterion quantifies over all k, we
// check up to a bound and record it (passing degrees propagate to multiples).
long default_k_max(const WeightedSpace& space);

struct AmpleResult {
    bool very_ample = false;  // one-sided: never claims non-ampleness
    Integer passing_m;        // the divisor of t that passed, when very_ample
    long k_max_used = 0;
};

// VeryAmpleByCriterion iff some divisor m' of t, with m' a multiple of
// lcm(weights), passes delorme_divisibility; multiples of a passing degree
// inherit the verdict.
AmpleResult very_ample_verdict(const WeightedSpace& space, const Integer& t, long k_max = 0);

struct BaseLocusResult {
    bool empty = false;
    std::vector<std::size_t> witness;  // maximal support set on which all basis monomials vanish
    std::string to_string() const;
};

// Empty iff for every nonempty support set T there is a basis monomial whose
// support lies inside T. Throws EmptySystem when the basis is empty.
BaseLocusResult base_locus(const MonomialSystem& sys);

// Same support criterion on an explicit monomial list (no emptiness error;
// an empty list has every set as witness).
BaseLocusResult base_locus_of(const WeightedSpace& space, const std::vector<WMonomial>& monomials);

struct ModuliInput {
    Integer parameter_count;  // positive
    Integer normalizations;   // coefficients fixed by scaling / completing squares
    Integer group_dimension;  // dimension of the acting projectivity group
};

// (parameter_count - 1) - normalizations - group_dimension. May be negative;
// negative values are reported, never clamped.
Integer moduli_dimension(const ModuliInput& mi);

// dim PGL(k) = k^2 - 1, for k >= 2.
Integer pgl_dimension(const Integer& k);

}  // namespace burger
