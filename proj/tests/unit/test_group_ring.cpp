#include <doctest.h>

#include <random>

#include "burger/errors.hpp"
#include "burger/group_ring.hpp"
#include "burger/motive_model.hpp"

using namespace burger;

namespace {

GroupRingElement random_element(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    GroupRingElement x;
    for (std::size_t mask = 0; mask < 8; ++mask)
        x.coefficient(mask) = Rational(num(rng), den(rng));
    return x;
}

// independent Noether-formula oracle: e = 12*chi - K^2 and e = 2 + b_2 for a
// regular surface, so b_2 = 12*(1 + p_g) - K^2 - 2
long b2_from_noether(long pg, long k2) { return 12 * (1 + pg) - k2 - 2; }

}  // namespace

TEST_SUITE("group_ring") {

TEST_CASE("eigenprojector formulas") {
    // (1/8) * sum over the group of the product-of-signs character
    GroupRingElement expected;
    for (std::size_t mask = 0; mask < 8; ++mask) {
        int chi = character_value({-1, -1, -1}, mask);
        expected.coefficient(mask) = Rational(chi, 8);
    }
    CHECK(eigenprojector({-1, -1, -1}) == expected);

    // the invariants projector is the plain average
    GroupRingElement average;
    for (std::size_t mask = 0; mask < 8; ++mask) average.coefficient(mask) = Rational(1, 8);
    CHECK(eigenprojector({+1, +1, +1}) == average);

    CHECK((eigenprojector({-1, -1, -1}) * eigenprojector({+1, +1, +1})).is_zero());
}

TEST_CASE("verify_projector_system passes completely") {
    VerificationRecord record = verify_projector_system();
    CHECK(record.all_passed());
    // 8 idempotents + 28 orthogonality pairs + completeness + 8 eigen-equations + table
    CHECK(record.assertions.size() == 8 + 28 + 1 + 8 + 1);
}

TEST_CASE("group ring multiplication is associative and commutative") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        GroupRingElement a = random_element(rng), b = random_element(rng),
                         c = random_element(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * GroupRingElement::identity() == a);
    }
}

TEST_CASE("eigen-equation for every character") {
    for (std::size_t idx = 0; idx < 8; ++idx) {
        const auto signs = sign_pattern_from_index(idx);
        const GroupRingElement p = eigenprojector(signs);
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(p * GroupRingElement::generator(j) == p * Rational(signs[j]));
    }
}

TEST_CASE("element formatting") {
    CHECK(GroupRingElement::identity().to_string() == "1");
    CHECK(GroupRingElement().to_string() == "0");
    CHECK(eigenprojector({+1, +1, +1}).to_string() ==
          "1/8 + 1/8*g0 + 1/8*g1 + 1/8*g0g1 + 1/8*g2 + 1/8*g0g2 + 1/8*g1g2 + 1/8*g0g1g2");
}

}  // TEST_SUITE

TEST_SUITE("motive_model") {

TEST_CASE("kunneth_model on small instances") {
    CHECK(kunneth_model(2, 2).all_passed());
    CHECK(kunneth_model(1, 1).all_passed());
    CHECK(kunneth_model(7, 5).all_passed());
}

TEST_CASE("kunneth_model on the derived surface instances") {
    CHECK(b2_from_noether(3, 2) == 44);
    CHECK(b2_from_noether(3, 3) == 43);
    CHECK(kunneth_model(2, b2_from_noether(3, 2)).all_passed());
    CHECK(kunneth_model(3, b2_from_noether(3, 3)).all_passed());
}

TEST_CASE("kunneth_model rejects bad parameters") {
    CHECK_THROWS_AS(kunneth_model(0, 5), InvalidModel);
    CHECK_THROWS_AS(kunneth_model(2, 0), InvalidModel);
}

TEST_CASE("RatMatrix rank") {
    RatMatrix m(3, 3);
    m.at(0, 0) = 1;
    m.at(1, 1) = Rational(1, 2);
    CHECK(m.rank() == 2);
    m.at(2, 2) = 3;
    CHECK(m.rank() == 3);
    CHECK(RatMatrix(4, 4).rank() == 0);
    CHECK(RatMatrix::identity(5).rank() == 5);
}

TEST_CASE("claim_decomposition_check on the unit profile") {
    EigenspaceProfile profile;
    profile.ranks[EigenspaceProfile::index_of({+1, -1, -1})] = 1;
    profile.ranks[EigenspaceProfile::index_of({-1, +1, -1})] = 1;
    profile.ranks[EigenspaceProfile::index_of({-1, -1, +1})] = 1;
    VerificationRecord record = claim_decomposition_check(profile);
    CHECK(record.all_passed());
    CHECK(profile.total_rank() == 3);
}

TEST_CASE("claim_decomposition_check rejects forbidden profiles") {
    EigenspaceProfile bad;
    bad.ranks[EigenspaceProfile::index_of({-1, -1, -1})] = 1;
    CHECK_THROWS_AS(claim_decomposition_check(bad), ProfileViolation);

    EigenspaceProfile invariants;
    invariants.ranks[EigenspaceProfile::index_of({+1, +1, +1})] = 2;
    CHECK_THROWS_AS(claim_decomposition_check(invariants), ProfileViolation);
}

TEST_CASE("claim_decomposition_check holds vacuously on the zero profile") {
    CHECK(claim_decomposition_check(EigenspaceProfile{}).all_passed());
}

TEST_CASE("smash_pigeonhole") {
    CHECK(smash_pigeonhole(1, 4));
    CHECK(!smash_pigeonhole(1, 3));
    CHECK(smash_pigeonhole(0, 1));
    CHECK(!smash_pigeonhole(0, 0));  // the empty composition has max 0 < 1
    CHECK_THROWS_AS(smash_pigeonhole(-1, 3), DomainError);
}

TEST_CASE("smash_pigeonhole closed form agrees with enumeration") {
    for (long d = 0; d <= 5; ++d)
        for (long r = 0; r <= 20; ++r) {
            CHECK(smash_pigeonhole_enumerate(d, r) == (r >= 3 * d + 1));
            // force the closed form by shrinking the enumeration bound
            CHECK(smash_pigeonhole(d, r, 0) == smash_pigeonhole_enumerate(d, r));
        }
}

}  // TEST_SUITE
