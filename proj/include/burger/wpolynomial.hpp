#pragma once

#include <map>
#include <string>
#include <vector>

#include "burger/numeric.hpp"
#include "burger/sign_involution.hpp"
#include "burger/weighted_space.hpp"

namespace burger {

// Exact sparse weighted-homogeneous polynomial. Every stored monomial has
// weighted degree equal to degree(); zero coefficients are never stored, so
// the zero polynomial is an empty term map carrying a nominal degree.
class WPolynomial {
public:
    WPolynomial(WeightedSpace space, std::map<WMonomial, Rational> terms);
    static WPolynomial zero(WeightedSpace space, Integer degree);

    const WeightedSpace& space() const { return space_; }
    const Integer& degree() const { return degree_; }
    const std::map<WMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    WPolynomial operator+(const WPolynomial& o) const;  // requires equal degrees
    WPolynomial operator-() const;
    WPolynomial operator*(const WPolynomial& o) const;  // degrees add
    bool operator==(const WPolynomial& o) const {
        return space_ == o.space_ && degree_ == o.degree_ && terms_ == o.terms_;
    }

    std::string to_string() const;

private:
    WPolynomial(WeightedSpace space, std::map<WMonomial, Rational> terms, Integer degree,
                bool trust);

    WeightedSpace space_;
    std::map<WMonomial, Rational> terms_;
    Integer degree_;
};

// Grammar: term := [sign] [rational] {var}; var := "x" index ["^" exponent];
// rational := integer ["/" positive-integer]; terms joined by "+"/"-".
// "*" is optional between a coefficient and a variable; variables must be
// separated by "*" or whitespace (no implicit juxtaposition "x0x1").
WPolynomial parse_wpoly(const std::string& text, const WeightedSpace& space);

// Each coefficient multiplied by (-1)^{sum of exponents over the flip set}.
WPolynomial apply_involution(const WPolynomial& f, const SignInvolution& s);

enum class SemiInvariance { plus, minus, not_semi_invariant };

std::string to_string(SemiInvariance v);

// +1 if s fixes f, -1 if s negates f, not_semi_invariant otherwise.
// The zero polynomial is reported as +1.
SemiInvariance semi_invariance_sign(const WPolynomial& f, const SignInvolution& s);

// The n+1 partial derivatives; entry i is weighted-homogeneous of degree
// deg(f) - q_i (possibly the zero polynomial).
std::vector<WPolynomial> jacobian_generators(const WPolynomial& f);

enum class QuasiSmoothVerdict { quasi_smooth, singular_witness, inconclusive };
enum class QuasiSmoothMode { diagonal_exact, finite_field_heuristic };

std::string to_string(QuasiSmoothVerdict v);

struct QuasiSmoothResult {
    QuasiSmoothVerdict verdict = QuasiSmoothVerdict::inconclusive;
    std::string detail;   // elimination order, witness point, or search statistics
    std::string witness;  // point description when verdict == singular_witness
};

// diagonal_exact: a sound syntactic procedure. A coordinate without any term
// of the shape c*x_u^k or c*x_u^k*x_j yields the exact singular witness e_u;
// otherwise triangular elimination on the actual partial derivatives either
// proves that the partials vanish simultaneously only at the origin, or gives
// up with Inconclusive. QuasiSmooth is never claimed heuristically.
//
// finite_field_heuristic: exhaustive search for a nonzero common zero of the
// partials over the given prime fields. A found witness is reported mod p
// (no lifting attempted); exhaustion is reported as Inconclusive with search
// statistics.
QuasiSmoothResult quasi_smooth_check(const WPolynomial& f, QuasiSmoothMode mode,
                                     const std::vector<long>& primes = {5, 7, 11, 13});

// True when f vanishes at the coordinate point P_i (equivalently: f has no
// pure power of x_i). Used to report whether a hypersurface meets coordinate
// strata that may carry ambient singularities.
bool vanishes_at_coordinate_point(const WPolynomial& f, std::size_t i);

}  // namespace burger
