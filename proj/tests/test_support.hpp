#pragma once

// Shared generators, oracles and property suites for the property and
// acceptance binaries. Everything is seeded deterministically.

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "burger/classify.hpp"
#include "burger/linear_system.hpp"
#include "burger/motive_model.hpp"
#include "burger/residue.hpp"
#include "burger/wpolynomial.hpp"

namespace burger::testing {

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::string detail;

    void fail(const std::string& why) {
        if (passed) detail = why;
        passed = false;
    }
};

inline WeightedSpace random_space(std::mt19937_64& rng, int max_coords = 4, int max_weight = 4) {
    std::uniform_int_distribution<int> coords(2, max_coords);
    std::uniform_int_distribution<int> weight(1, max_weight);
    std::vector<Integer> w;
    const int n = coords(rng);
    for (int i = 0; i < n; ++i) w.emplace_back(weight(rng));
    return WeightedSpace(std::move(w));
}

inline WPolynomial random_sparse_poly(std::mt19937_64& rng, const WeightedSpace& space) {
    std::uniform_int_distribution<int> degree_dist(1, 10);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    for (int attempt = 0; attempt < 32; ++attempt) {
        const Integer degree = degree_dist(rng);
        auto monomials = enumerate_monomials(space, degree);
        if (monomials.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick(0, monomials.size() - 1);
        std::uniform_int_distribution<int> terms_dist(1, 6);
        std::map<WMonomial, Rational> terms;
        const int want = terms_dist(rng);
        for (int t = 0; t < want; ++t) {
            int numerator = num(rng);
            if (numerator == 0) numerator = 1;
            terms[monomials[pick(rng)]] = Rational(numerator, den(rng));
        }
        return WPolynomial(space, std::move(terms));
    }
    return WPolynomial(space, {{WMonomial{std::vector<Integer>(space.coordinate_count(), 0)},
                                Rational(1)}});
}

inline SignInvolution random_involution(std::mt19937_64& rng, const WeightedSpace& space) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::set<std::size_t> flips;
    for (std::size_t i = 0; i < space.coordinate_count(); ++i)
        if (coin(rng)) flips.insert(i);
    return SignInvolution(space, std::move(flips));
}

// coefficients of prod_i 1/(1 - t^{q_i}) up to max_degree, by series product
inline std::vector<Integer> series_coefficients(const WeightedSpace& space, long max_degree) {
    std::vector<Integer> coeff(static_cast<std::size_t>(max_degree) + 1, 0);
    coeff[0] = 1;
    for (const Integer& q : space.weights()) {
        const long step = static_cast<long>(q);
        for (long d = step; d <= max_degree; ++d) coeff[d] += coeff[d - step];
    }
    return coeff;
}

// involution action is an involution and a ring homomorphism; the
// semi-invariance trichotomy is consistent with the action
inline SuiteResult involution_properties(int trials = 1000) {
    SuiteResult result{"involution action: involutivity, homomorphism, semi-invariance"};
    std::mt19937_64 rng(0x5eed0001);
    for (int t = 0; t < trials; ++t) {
        WeightedSpace space = random_space(rng);
        WPolynomial f = random_sparse_poly(rng, space);
        WPolynomial g = random_sparse_poly(rng, space);
        SignInvolution s = random_involution(rng, space);

        if (apply_involution(apply_involution(f, s), s) != f)
            result.fail("double application is not the identity on " + f.to_string());
        if (apply_involution(f * g, s) != apply_involution(f, s) * apply_involution(g, s))
            result.fail("not multiplicative on " + f.to_string() + " and " + g.to_string());

        const SemiInvariance sign = semi_invariance_sign(f, s);
        const WPolynomial image = apply_involution(f, s);
        if (sign == SemiInvariance::plus && !(image == f))
            result.fail("+1 but not fixed: " + f.to_string());
        if (sign == SemiInvariance::minus && !(image == -f))
            result.fail("-1 but not negated: " + f.to_string());
        if (!f.is_zero() && sign == SemiInvariance::minus && image == f)
            result.fail("+1 and -1 simultaneously on a nonzero polynomial");

        // a polynomial even at every flipped index is fixed
        std::map<WMonomial, Rational> even_terms;
        for (const auto& [m, c] : f.terms()) {
            bool even = true;
            for (std::size_t i : s.flips())
                if (m.exponents[i] % 2 != 0) even = false;
            if (even) even_terms.emplace(m, c);
        }
        if (!even_terms.empty()) {
            WPolynomial even_f(space, std::move(even_terms));
            if (semi_invariance_sign(even_f, s) != SemiInvariance::plus)
                result.fail("even polynomial not fixed: " + even_f.to_string());
        }
    }
    std::ostringstream d;
    d << trials << " random sparse polynomials";
    if (result.passed) result.detail = d.str();
    return result;
}

// graded_dimension vs the generating-function series and direct enumeration
inline SuiteResult graded_dimension_series_suite(int systems = 50, long max_degree = 20) {
    SuiteResult result{"graded dimension vs generating-function series"};
    std::mt19937_64 rng(0x5eed0002);
    for (int t = 0; t < systems; ++t) {
        WeightedSpace space = random_space(rng, 4, 6);
        auto series = series_coefficients(space, max_degree);
        for (long d = 0; d <= max_degree; ++d) {
            const Integer counted = graded_dimension(space, d);
            if (counted != series[d]) {
                result.fail("series mismatch on " + space.to_string() + " at degree " +
                            std::to_string(d));
            }
            if (counted != Integer(enumerate_monomials(space, d).size()))
                result.fail("enumeration mismatch on " + space.to_string() + " at degree " +
                            std::to_string(d));
        }
        // empty constraint agrees; permuted weights agree
        EvennessConstraint none;
        std::vector<Integer> permuted = space.weights();
        std::rotate(permuted.begin(), permuted.begin() + 1, permuted.end());
        WeightedSpace rotated(permuted);
        for (long d = 0; d <= max_degree; ++d) {
            if (constrained_dimension(space, d, none) != graded_dimension(space, d))
                result.fail("constrained/graded mismatch on " + space.to_string());
            if (graded_dimension(space, d) != graded_dimension(rotated, d))
                result.fail("permutation variance on " + space.to_string());
        }
    }
    std::ostringstream d;
    d << systems << " random weight systems, all degrees <= " << max_degree;
    if (result.passed) result.detail = d.str();
    return result;
}

inline SuiteResult smash_pigeonhole_suite(long max_d = 5, long max_r = 20) {
    SuiteResult result{"smash pigeonhole: closed form vs exhaustive enumeration"};
    for (long d = 0; d <= max_d; ++d)
        for (long r = 0; r <= max_r; ++r) {
            const bool closed = r >= 3 * d + 1;
            if (smash_pigeonhole_enumerate(d, r) != closed)
                result.fail("mismatch at d=" + std::to_string(d) + ", r=" + std::to_string(r));
            if (smash_pigeonhole(d, r) != closed)
                result.fail("operation mismatch at d=" + std::to_string(d) +
                            ", r=" + std::to_string(r));
        }
    std::ostringstream d;
    d << "all d <= " << max_d << ", r <= " << max_r;
    if (result.passed) result.detail = d.str();
    return result;
}

// a pass at m propagates to every multiple of m (k-bound scaled accordingly)
inline SuiteResult delorme_monotonicity_suite(int systems = 200) {
    SuiteResult result{"divisibility monotonicity over random weight systems"};
    std::mt19937_64 rng(0x5eed0003);
    int passes_checked = 0;
    for (int t = 0; t < systems; ++t) {
        WeightedSpace space = random_space(rng, 3, 6);
        std::vector<Integer> candidates = {1, 2, 3, 4};
        if (space.weight_lcm() <= 6) candidates.push_back(space.weight_lcm());
        for (const Integer& m : candidates) {
            if (!delorme_divisibility(space, m, 6).pass) continue;
            ++passes_checked;
            if (!delorme_divisibility(space, m * 2, 3).pass)
                result.fail("pass at m=" + m.str() + " but fail at 2m on " + space.to_string());
            if (!delorme_divisibility(space, m * 3, 2).pass)
                result.fail("pass at m=" + m.str() + " but fail at 3m on " + space.to_string());
        }
    }
    std::ostringstream d;
    d << systems << " systems, " << passes_checked << " passing bases propagated";
    if (result.passed) result.detail = d.str();
    return result;
}

// eigensplit is invariant under row and column permutations, and forces
// quotient p_g = 1 on every row when it holds
inline SuiteResult eigensplit_properties(int trials = 2000) {
    SuiteResult result{"eigensplit: permutation invariance and forced row ranks"};
    std::mt19937_64 rng(0x5eed0005);
    SurfaceFamily fam(WeightedSpace({1, 1, 1, 4}), 8, EvennessConstraint{{0, 1, 2}});
    std::vector<SignInvolution> triple = {SignInvolution(fam.space, {0}),
                                          SignInvolution(fam.space, {1}),
                                          SignInvolution(fam.space, {2})};
    SignMatrix m = generator_sign_matrix(fam, triple, {+1, +1, +1});
    std::uniform_int_distribution<int> coin(0, 1);
    std::array<std::size_t, 3> row_perm{}, col_perm{};
    std::iota(row_perm.begin(), row_perm.end(), 0);
    std::iota(col_perm.begin(), col_perm.end(), 0);
    int splitting = 0;
    for (int t = 0; t < trials; ++t) {
        for (auto& row : m.entries)
            for (int& v : row) v = coin(rng) ? +1 : -1;
        const bool split = eigensplit_check(m);
        if (split) {
            ++splitting;
            for (std::size_t j = 0; j < 3; ++j)
                if (quotient_pg(m.row(j)) != 1)
                    result.fail("splitting matrix with a row of quotient p_g != 1");
        }
        std::shuffle(row_perm.begin(), row_perm.end(), rng);
        std::shuffle(col_perm.begin(), col_perm.end(), rng);
        SignMatrix permuted = m;
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                permuted.entries[j][k] = m.entries[row_perm[j]][col_perm[k]];
        if (eigensplit_check(permuted) != split)
            result.fail("verdict changed under a row/column permutation");
    }
    std::ostringstream d;
    d << trials << " random sign matrices, " << splitting << " splitting";
    if (result.passed) result.detail = d.str();
    return result;
}

// geometric_genus and canonical_square are invariant under weight
// normalization whenever the normalization is defined
inline SuiteResult normalization_invariance_suite(int systems = 100) {
    SuiteResult result{"invariants stable under weight normalization"};
    std::mt19937_64 rng(0x5eed0004);
    std::uniform_int_distribution<int> extra(1, 10);
    int families_checked = 0;
    for (int t = 0; t < systems; ++t) {
        WeightedSpace space = random_space(rng, 4, 4);
        Integer degree = space.weight_sum() + extra(rng);
        if (space.weight_gcd() > 1 && degree % space.weight_gcd() != 0) continue;
        auto [reduced_space, reduced_degree] = normalize_weights(space, degree);
        auto [twice_space, twice_degree] = normalize_weights(reduced_space, reduced_degree);
        if (!(twice_space == reduced_space) || twice_degree != reduced_degree)
            result.fail("normalization not idempotent on " + space.to_string());
        if (reduced_degree <= reduced_space.weight_sum()) continue;
        ++families_checked;
        SurfaceFamily original(space, degree, EvennessConstraint{});
        SurfaceFamily reduced(reduced_space, reduced_degree, EvennessConstraint{});
        if (geometric_genus(original) != geometric_genus(reduced))
            result.fail("p_g changed under normalization of " + space.to_string() + " degree " +
                        degree.str());
        if (canonical_square(original) != canonical_square(reduced))
            result.fail("K^2 changed under normalization of " + space.to_string() + " degree " +
                        degree.str());
    }
    std::ostringstream d;
    d << families_checked << " normalizable families";
    if (result.passed) result.detail = d.str();
    return result;
}

}  // namespace burger::testing
