#include "burger/linear_system.hpp"

#include <algorithm>
#include <sstream>

#include "burger/errors.hpp"

namespace burger {

MonomialSystem::MonomialSystem(WeightedSpace space_, Integer degree_, EvennessConstraint constraint_)
    : space(std::move(space_)), degree(std::move(degree_)), constraint(std::move(constraint_)) {
    basis = enumerate_constrained_monomials(space, degree, constraint);
}

std::string DelormeResult::to_string() const {
    if (pass) return "Pass (k <= " + std::to_string(k_max_used) + ")";
    return "FailWitness: " + witness.to_string() + " at k=" + std::to_string(witness_k);
}

namespace {

bool has_degree_m_divisor(const WMonomial& mono, const std::vector<WMonomial>& divisors) {
    for (const WMonomial& d : divisors)
        if (d.divides(mono)) return true;
    return false;
}

}  // namespace

DelormeResult delorme_divisibility(const WeightedSpace& space, const Integer& m, long k_max) {
    if (m < 1) throw DomainError("delorme_divisibility: m must be >= 1");
    if (k_max < 2) throw DomainError("delorme_divisibility: k_max must be >= 2");

    DelormeResult result;
    result.k_max_used = k_max;
    const std::vector<WMonomial> divisors = enumerate_monomials(space, m);
    for (long k = 2; k <= k_max; ++k) {
        for (const WMonomial& mono : enumerate_monomials(space, Integer(k) * m)) {
            if (!has_degree_m_divisor(mono, divisors)) {
                result.pass = false;
                result.witness_k = k;
                result.witness = mono;
                return result;
            }
        }
    }
    result.pass = true;
    return result;
}

long default_k_max(const WeightedSpace& space) {
    return 1 + static_cast<long>(space.weight_sum());
}

AmpleResult very_ample_verdict(const WeightedSpace& space, const Integer& t, long k_max) {
    if (t < 1) throw DomainError("very_ample_verdict: t must be >= 1");
    if (k_max <= 0) k_max = default_k_max(space);

    AmpleResult result;
    result.k_max_used = k_max;
    const Integer lcm = space.weight_lcm();
    for (Integer m = 1; m * m <= t; ++m) {
        if (t % m != 0) continue;
        for (const Integer& candidate : {m, Integer(t / m)}) {
            if (candidate % lcm != 0) continue;
            if (delorme_divisibility(space, candidate, k_max).pass) {
                if (!result.very_ample || candidate < result.passing_m) {
                    result.very_ample = true;
                    result.passing_m = candidate;
                }
            }
        }
    }
    return result;
}

std::string BaseLocusResult::to_string() const {
    if (empty) return "Empty";
    std::ostringstream out;
    out << "SupportWitness T={";
    for (std::size_t i = 0; i < witness.size(); ++i) out << (i ? "," : "") << witness[i];
    out << "}";
    return out.str();
}

BaseLocusResult base_locus_of(const WeightedSpace& space, const std::vector<WMonomial>& monomials) {
    const std::size_t n = space.coordinate_count();
    // failing support sets are downward closed, so a failing set of largest
    // size is maximal; ties broken by lexicographically least index list
    std::vector<std::vector<std::size_t>> failing;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
        bool covered = false;
        for (const WMonomial& m : monomials) {
            bool inside = true;
            for (std::size_t i = 0; i < n && inside; ++i)
                if (m.exponents[i] > 0 && !(mask & (std::uint64_t(1) << i))) inside = false;
            if (inside) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            std::vector<std::size_t> t;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::uint64_t(1) << i)) t.push_back(i);
            failing.push_back(std::move(t));
        }
    }
    BaseLocusResult result;
    if (failing.empty()) {
        result.empty = true;
        return result;
    }
    std::sort(failing.begin(), failing.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    result.empty = false;
    result.witness = failing.front();
    return result;
}

BaseLocusResult base_locus(const MonomialSystem& sys) {
    if (sys.basis.empty()) throw EmptySystem("base_locus: empty monomial system");
    return base_locus_of(sys.space, sys.basis);
}

Integer moduli_dimension(const ModuliInput& mi) {
    if (mi.parameter_count < 1) throw DomainError("moduli_dimension: parameter_count must be >= 1");
    if (mi.normalizations < 0) throw DomainError("moduli_dimension: normalizations must be >= 0");
    return (mi.parameter_count - 1) - mi.normalizations - mi.group_dimension;
}

Integer pgl_dimension(const Integer& k) {
    if (k < 2) throw DomainError("pgl_dimension: k must be >= 2");
    return k * k - 1;
}

}  // namespace burger
