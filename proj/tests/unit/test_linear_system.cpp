#include <doctest.h>

#include "burger/errors.hpp"
#include "burger/linear_system.hpp"
#include "burger/weighted_space.hpp"

using namespace burger;

TEST_SUITE("linear_system") {

TEST_CASE("delorme_divisibility passes on the two reference spaces") {
    CHECK(delorme_divisibility(WeightedSpace({1, 1, 1, 2}), 2, 8).pass);
    CHECK(delorme_divisibility(WeightedSpace({1, 1, 1, 4}), 4, 8).pass);
    CHECK(delorme_divisibility(WeightedSpace({1, 1}), 1, 4).pass);
}

TEST_CASE("delorme_divisibility produces a fail witness") {
    // on P(2,3) the monomial x1^2 has degree 6 = 3*2 but no degree-2 divisor
    auto r = delorme_divisibility(WeightedSpace({2, 3}), 2, 4);
    CHECK(!r.pass);
    CHECK(r.witness_k == 3);
    CHECK(r.witness.to_string() == "x1^2");
}

TEST_CASE("delorme_divisibility validates its inputs") {
    CHECK_THROWS_AS(delorme_divisibility(WeightedSpace({1, 1}), 0, 4), DomainError);
    CHECK_THROWS_AS(delorme_divisibility(WeightedSpace({1, 1}), 1, 1), DomainError);
}

TEST_CASE("default_k_max is one plus the weight sum") {
    CHECK(default_k_max(WeightedSpace({1, 1, 1, 2})) == 6);
    CHECK(default_k_max(WeightedSpace({1, 1, 1, 4})) == 8);
}

TEST_CASE("very_ample_verdict") {
    auto a4 = very_ample_verdict(WeightedSpace({1, 1, 1, 2}), 4);
    CHECK(a4.very_ample);
    CHECK(a4.passing_m == 2);

    auto a2 = very_ample_verdict(WeightedSpace({1, 1, 1, 2}), 2);
    CHECK(a2.very_ample);

    // 1 is not a multiple of the lcm 2: the criterion is silent
    CHECK(!very_ample_verdict(WeightedSpace({1, 1, 1, 2}), 1).very_ample);
}

TEST_CASE("very_ample_verdict never contradicts delorme_divisibility") {
    for (Integer t = 1; t <= 8; ++t) {
        auto r = very_ample_verdict(WeightedSpace({1, 1, 1, 2}), t);
        if (r.very_ample) {
            CHECK(t % r.passing_m == 0);
            CHECK(delorme_divisibility(WeightedSpace({1, 1, 1, 2}), r.passing_m, r.k_max_used)
                      .pass);
        }
    }
}

TEST_CASE("divisibility monotonicity on the reference spaces") {
    // pass at m propagates to multiples of m (with the k-bound scaled down)
    WeightedSpace p({1, 1, 1, 2});
    REQUIRE(delorme_divisibility(p, 2, 8).pass);
    CHECK(delorme_divisibility(p, 4, 4).pass);
    CHECK(delorme_divisibility(p, 6, 2).pass);
}

TEST_CASE("base_locus of the even reference systems is empty") {
    MonomialSystem octic(WeightedSpace({1, 1, 1, 4}), 8, EvennessConstraint{{0, 1, 2}});
    CHECK(base_locus(octic).empty);
    CHECK(octic.basis.size() == 22);

    MonomialSystem sextic(WeightedSpace({1, 1, 1, 2}), 6, EvennessConstraint{{0, 1, 2}});
    CHECK(base_locus(sextic).empty);
    // the basis contains the pure powers that keep every stratum covered
    bool has_x0_6 = false, has_x3_3 = false;
    for (const auto& m : sextic.basis) {
        if (m.to_string() == "x0^6") has_x0_6 = true;
        if (m.to_string() == "x3^3") has_x3_3 = true;
    }
    CHECK(has_x0_6);
    CHECK(has_x3_3);
}

TEST_CASE("base_locus witness") {
    // the system {x0*x1} on P(1,1) vanishes identically where x1 = 0
    auto r = base_locus_of(WeightedSpace({1, 1}), {WMonomial{{1, 1}}});
    CHECK(!r.empty);
    CHECK(r.witness == std::vector<std::size_t>{0});
    CHECK(r.to_string() == "SupportWitness T={0}");

    // witness is maximal: x3 * (even quartics) on P(1,1,1,4) dies on x3 = 0
    std::vector<WMonomial> x3_times_quartics = {
        WMonomial{{4, 0, 0, 1}}, WMonomial{{2, 2, 0, 1}}, WMonomial{{2, 0, 2, 1}},
        WMonomial{{0, 4, 0, 1}}, WMonomial{{0, 2, 2, 1}}, WMonomial{{0, 0, 4, 1}}};
    auto w = base_locus_of(WeightedSpace({1, 1, 1, 4}), x3_times_quartics);
    CHECK(!w.empty);
    CHECK(w.witness == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("base_locus rejects an empty system") {
    MonomialSystem none(WeightedSpace({2, 2}), 3, EvennessConstraint{});
    CHECK(none.basis.empty());
    CHECK_THROWS_AS(base_locus(none), EmptySystem);
}

TEST_CASE("base_locus agrees with brute-force grid evaluation") {
    // evaluate the basis over all points with entries in {0,1,2,3} of F_5;
    // Empty iff there is no nonzero common zero
    const std::vector<std::vector<Integer>> spaces = {{1, 1}, {1, 2}, {1, 1, 2}, {1, 1, 1, 4}};
    for (const auto& w : spaces) {
        WeightedSpace space(w);
        for (int degree = 1; degree <= 8; ++degree) {
            for (bool even : {false, true}) {
                EvennessConstraint c;
                if (even) c.even_set = {0};
                MonomialSystem sys(space, degree, c);
                if (sys.basis.empty()) continue;
                const long p = 5;
                const std::size_t n = space.coordinate_count();
                bool common_zero = false;
                std::vector<long> point(n, 0);
                while (true) {
                    bool nonzero = false;
                    for (long v : point)
                        if (v) nonzero = true;
                    if (nonzero) {
                        bool all_vanish = true;
                        for (const auto& m : sys.basis) {
                            long value = 1;
                            for (std::size_t i = 0; i < n; ++i)
                                for (Integer e = 0; e < m.exponents[i]; ++e)
                                    value = value * point[i] % p;
                            if (value != 0) {
                                all_vanish = false;
                                break;
                            }
                        }
                        if (all_vanish) {
                            common_zero = true;
                            break;
                        }
                    }
                    std::size_t i = n;
                    bool done = true;
                    while (i > 0) {
                        --i;
                        if (++point[i] <= 3) {
                            done = false;
                            break;
                        }
                        point[i] = 0;
                    }
                    if (done) break;
                }
                CHECK(base_locus(sys).empty == !common_zero);
            }
        }
    }
}

TEST_CASE("moduli_dimension reproduces the reference counts") {
    CHECK(moduli_dimension({15, 0, 8}) == 6);
    CHECK(moduli_dimension({10, 0, 8}) == 1);
    CHECK(moduli_dimension({20, 0, 15}) == 4);
}

TEST_CASE("moduli_dimension with a computed parameter count") {
    // cubic surfaces: 20 cubic monomials on P^3, PGL(4) acts
    Integer params = constrained_dimension(WeightedSpace({1, 1, 1, 1}), 3, EvennessConstraint{});
    CHECK(params == 20);
    CHECK(moduli_dimension({params, 0, pgl_dimension(4)}) == 4);
}

TEST_CASE("moduli_dimension is linear in the parameter count") {
    for (int k = 1; k <= 5; ++k)
        CHECK(moduli_dimension({Integer(10 + k), 1, 8}) - moduli_dimension({Integer(10), 1, 8}) ==
              k);
}

TEST_CASE("negative moduli dimensions are reported, not clamped") {
    CHECK(moduli_dimension({2, 0, 8}) == -7);
    CHECK_THROWS_AS(moduli_dimension({0, 0, 8}), DomainError);
}

TEST_CASE("pgl_dimension") {
    CHECK(pgl_dimension(3) == 8);
    CHECK(pgl_dimension(4) == 15);
    CHECK(pgl_dimension(2) == 3);
    CHECK_THROWS_AS(pgl_dimension(1), DomainError);
}

}  // TEST_SUITE
