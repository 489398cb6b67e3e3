#pragma once

#include <array>
#include <vector>

#include "burger/numeric.hpp"
#include "burger/verification.hpp"

namespace burger {

// Dense rational matrix, just large enough for the cohomology model checks.
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols);
    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator*(const Rational& scalar) const;
    bool operator==(const RatMatrix& o) const;

    std::size_t rank() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

// Rank bookkeeping (1, b2, 1) for H^0, H^2, H^4 of a regular surface with a
// polarization of self-intersection d.
struct CohomologyModel {
    Integer d;
    long b2;
};

// Builds pi_0 = (1/d) * (pair with the polarization square, project to H^0),
// pi_4 analogously, pi_2 = id - pi_0 - pi_4 on the rank-(b2+2) model; asserts
// idempotency, vanishing pairwise composites, completeness and image ranks
// (1, b2, 1). Throws InvalidModel for nonpositive parameters.
VerificationRecord kunneth_model(const CohomologyModel& model);
VerificationRecord kunneth_model(const Integer& d, long b2);

// A G-module with prescribed character multiplicities, G = (Z/2)^3.
// Index convention: bit j set <=> g_j acts by -1.
struct EigenspaceProfile {
    std::array<long, 8> ranks{};

    long total_rank() const;
    static std::size_t index_of(const std::array<int, 3>& signs);
};

// For a profile supported on the three even-minus characters (+,-,-), (-,+,-),
// (-,-,+): asserts (a) the three surviving eigenprojectors decompose the
// module and (b) (e + g_j) acts as 2*id on the components where g_j acts by +1
// and as 0 where it acts by -1. Throws ProfileViolation when the profile has
// nonzero rank on an odd-minus character or on (+,+,+).
VerificationRecord claim_decomposition_check(const EigenspaceProfile& profile);

// True iff every composition r_0 + r_1 + r_2 = r in nonnegative integers has
// max >= d + 1; equivalently r >= 3d + 1. Exhaustive enumeration for
// r <= enumeration_bound, closed form beyond.
bool smash_pigeonhole(const Integer& d, const Integer& r, long enumeration_bound = 24);

// The exhaustive route, exposed for cross-checking against the closed form.
bool smash_pigeonhole_enumerate(long d, long r);

}  // namespace burger
