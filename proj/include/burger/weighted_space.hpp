#pragma once

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "burger/numeric.hpp"

namespace burger {

// Weight vector of a weighted projective space P(q_0,...,q_n). Immutable;
// gcd/lcm/sum of the weights are computed once at construction.
class WeightedSpace {
public:
    explicit WeightedSpace(std::vector<Integer> weights);

    const std::vector<Integer>& weights() const { return weights_; }
    std::size_t coordinate_count() const { return weights_.size(); }
    const Integer& weight(std::size_t i) const { return weights_.at(i); }
    const Integer& weight_sum() const { return sum_; }
    const Integer& weight_gcd() const { return gcd_; }
    const Integer& weight_lcm() const { return lcm_; }

    // ((-1)^{q_0},...,(-1)^{q_n}): the action of the scalar -1 on coordinates.
    // Sign vectors differing by this act identically on the space.
    std::vector<int> scalar_sign_vector() const;

    bool operator==(const WeightedSpace& o) const { return weights_ == o.weights_; }
    bool operator!=(const WeightedSpace& o) const { return !(*this == o); }

    std::string to_string() const;  // "P(1,1,1,4)"

private:
    std::vector<Integer> weights_;
    Integer sum_, gcd_, lcm_;
};

// Exponent vector of a monomial x_0^{b_0}...x_n^{b_n}.
struct WMonomial {
    std::vector<Integer> exponents;

    Integer weighted_degree(const WeightedSpace& space) const;
    std::vector<std::size_t> support() const;  // indices with positive exponent
    bool divides(const WMonomial& other) const;
    bool is_constant() const;

    auto operator<=>(const WMonomial&) const = default;

    std::string to_string() const;  // "x0^2*x1", "1" for the constant monomial
};

// Subset of coordinate indices required to occur only in even exponents.
struct EvennessConstraint {
    std::set<std::size_t> even_set;

    bool satisfied_by(const WMonomial& m) const {
        for (std::size_t i : even_set)
            if (i < m.exponents.size() && m.exponents[i] % 2 != 0) return false;
        return true;
    }
    bool empty() const { return even_set.empty(); }
    std::string to_string() const;
};

// Number of monomials of weighted degree exactly d (0 for d < 0, 1 for d = 0).
// Equals the coefficient of t^d in prod_i 1/(1 - t^{q_i}).
Integer graded_dimension(const WeightedSpace& space, const Integer& d);

// As above, restricted to monomials with even exponents at the indices of c
// and zero exponent at the indices of `exclude`.
Integer constrained_dimension(const WeightedSpace& space, const Integer& d,
                              const EvennessConstraint& c,
                              const std::set<std::size_t>& exclude = {});

// All monomials of weighted degree d, in the fixed canonical order:
// lexicographic with x_0 > x_1 > ... (largest exponent vector first).
std::vector<WMonomial> enumerate_monomials(const WeightedSpace& space, const Integer& d);
std::vector<WMonomial> enumerate_constrained_monomials(const WeightedSpace& space,
                                                       const Integer& d,
                                                       const EvennessConstraint& c,
                                                       const std::set<std::size_t>& exclude = {});

// Divides the weights and the degree by the overall gcd, then repeatedly
// divides out factors common to all-but-one weight (scaling the degree along)
// as long as the degree stays integral. Throws NonIntegralDegree when the
// overall gcd does not divide the degree.
std::pair<WeightedSpace, Integer> normalize_weights(const WeightedSpace& space,
                                                    const Integer& degree);

// The normalization convention above, recorded verbatim in every report.
inline const char* well_forming_convention() {
    return "global gcd division first, then per-index division of factors common to "
           "all-but-one weight while the twist degree stays integral";
}

}  // namespace burger
