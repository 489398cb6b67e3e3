#include "burger/classify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "burger/errors.hpp"
#include "burger/linear_system.hpp"

namespace burger {

std::vector<SignInvolution> enumerate_sign_involutions(const WeightedSpace& space,
                                                       bool restrict_to_first_three) {
    const std::size_t n = space.coordinate_count();
    const std::size_t limit = restrict_to_first_three ? std::min<std::size_t>(3, n) : n;
    std::vector<SignInvolution> pool;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << limit); ++mask) {
        std::set<std::size_t> flips;
        for (std::size_t i = 0; i < limit; ++i)
            if (mask & (std::uint64_t(1) << i)) flips.insert(i);
        pool.emplace_back(space, std::move(flips));
    }
    std::sort(pool.begin(), pool.end());
    return pool;
}

namespace {

bool shortlex_less(const std::set<std::size_t>& a, const std::set<std::size_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::set<std::size_t> symmetric_difference(const std::set<std::size_t>& a,
                                           const std::set<std::size_t>& b) {
    std::set<std::size_t> out;
    for (std::size_t i : a)
        if (!b.count(i)) out.insert(i);
    for (std::size_t i : b)
        if (!a.count(i)) out.insert(i);
    return out;
}

}  // namespace

GroupDescriptor verify_group_structure(const BurgerCandidate& c) {
    // GF(2) rank of the three flip sets as bit vectors
    std::array<std::uint64_t, 64> basis{};
    int rank = 0;
    for (const auto& s : c.triple) {
        std::uint64_t v = 0;
        for (std::size_t i : s.flips()) v |= std::uint64_t(1) << i;
        for (int bit = 63; bit >= 0 && v; --bit) {
            if (!(v >> bit & 1)) continue;
            if (!basis[bit]) {
                basis[bit] = v;
                ++rank;
                break;
            }
            v ^= basis[bit];
        }
    }
    GroupDescriptor g;
    g.order = 1L << rank;
    // dependence in (Z/2)^{n+1}: some involution equals the product of the others
    const auto& t = c.triple;
    SignInvolution product = t[0].compose(t[1]);
    if (product == t[2]) {
        g.dependent = true;
        g.relation = t[2].name() + " = " + t[0].name() + " o " + t[1].name();
    }
    // the full subgroup: one element per partial diagonal graph
    std::set<std::set<std::size_t>> span = {{}};
    for (const auto& inv : t) {
        std::set<std::set<std::size_t>> next = span;
        for (const auto& member : span)
            next.insert(symmetric_difference(member, inv.flips()));
        span = std::move(next);
    }
    g.elements.assign(span.begin(), span.end());
    return g;
}

std::string ScalarClass::to_string() const {
    std::ostringstream out;
    out << "[";
    if (representative.empty()) {
        out << "id";
    } else {
        out << "s_";
        for (std::size_t i : representative) out << i;
    }
    out << "]";
    if (trivial) out << " (trivial)";
    return out.str();
}

ScalarClass scalar_class(const WeightedSpace& space, const std::set<std::size_t>& flips) {
    std::set<std::size_t> scalar;
    const auto signs = space.scalar_sign_vector();
    for (std::size_t i = 0; i < signs.size(); ++i)
        if (signs[i] < 0) scalar.insert(i);
    const std::set<std::size_t> partner = symmetric_difference(flips, scalar);

    ScalarClass c;
    c.representative = shortlex_less(flips, partner) ? flips : partner;
    c.trivial = flips.empty() || partner.empty();
    return c;
}

std::vector<ScalarClass> canonicalize_automorphism_class(const BurgerCandidate& c) {
    std::vector<ScalarClass> classes;
    classes.reserve(3);
    for (const auto& s : c.triple) classes.push_back(scalar_class(c.family.space, s.flips()));
    std::sort(classes.begin(), classes.end(), [](const ScalarClass& a, const ScalarClass& b) {
        return shortlex_less(a.representative, b.representative);
    });
    return classes;
}

std::vector<int> realizable_f_signs(const SurfaceFamily& fam, const SignInvolution& s) {
    std::vector<int> out;
    const std::vector<WMonomial> family_basis = fam.basis();
    for (int eps : {+1, -1}) {
        std::vector<WMonomial> subsystem;
        for (const WMonomial& m : family_basis)
            if (s.sign_on(m) == eps) subsystem.push_back(m);
        if (!subsystem.empty() && base_locus_of(fam.space, subsystem).empty) out.push_back(eps);
    }
    return out;
}

bool realizable_assignment(const SurfaceFamily& fam,
                           const std::vector<SignInvolution>& involutions,
                           const std::vector<int>& signs) {
    std::vector<WMonomial> subsystem;
    for (const WMonomial& m : fam.basis()) {
        bool match = true;
        for (std::size_t j = 0; j < involutions.size() && match; ++j)
            if (involutions[j].sign_on(m) != signs[j]) match = false;
        if (match) subsystem.push_back(m);
    }
    return !subsystem.empty() && base_locus_of(fam.space, subsystem).empty;
}

namespace {

// Orbits are taken under the permutations of the coordinates {0,1,2} that
// preserve the family: equal weights and a setwise-fixed evenness constraint.
std::vector<std::array<std::size_t, 3>> coordinate_permutations(const SurfaceFamily& fam) {
    std::vector<std::array<std::size_t, 3>> perms = {{0, 1, 2}};
    if (fam.space.coordinate_count() < 3) return perms;
    std::array<std::size_t, 3> p = {0, 1, 2};
    while (std::next_permutation(p.begin(), p.end())) {
        bool preserves = true;
        for (std::size_t i = 0; i < 3 && preserves; ++i) {
            if (fam.space.weight(p[i]) != fam.space.weight(i)) preserves = false;
            if (fam.evenness.even_set.count(p[i]) != fam.evenness.even_set.count(i))
                preserves = false;
        }
        if (preserves) perms.push_back(p);
    }
    return perms;
}

using CandidateKey = std::vector<std::pair<std::vector<std::size_t>, int>>;

CandidateKey candidate_key(const std::vector<SignInvolution>& triple,
                           const std::array<int, 3>& f_signs) {
    CandidateKey key;
    for (std::size_t j = 0; j < 3; ++j) {
        std::vector<std::size_t> flips(triple[j].flips().begin(), triple[j].flips().end());
        key.emplace_back(std::move(flips), f_signs[j]);
    }
    std::sort(key.begin(), key.end());
    return key;
}

CandidateKey permuted_key(const CandidateKey& key, const std::array<std::size_t, 3>& perm) {
    CandidateKey out;
    for (const auto& [flips, eps] : key) {
        std::set<std::size_t> image;
        for (std::size_t i : flips) image.insert(i < 3 ? perm[i] : i);
        out.emplace_back(std::vector<std::size_t>(image.begin(), image.end()), eps);
    }
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<std::pair<std::string, std::vector<std::set<std::size_t>>>>&
orbit_patterns() {
    static const std::vector<std::pair<std::string, std::vector<std::set<std::size_t>>>>
        patterns = {
            {"(i)", {{0}, {1}, {2}}},
            {"(ii)", {{0}, {1}, {0, 1}}},
            {"(iii)", {{0}, {0, 1}, {0, 2}}},
            {"(iv)", {{0, 1}, {0, 2}, {1, 2}}},
        };
    return patterns;
}

std::string label_for(const std::vector<CandidateKey>& orbit_keys) {
    for (const auto& [label, pattern] : orbit_patterns()) {
        std::vector<std::vector<std::size_t>> want;
        for (const auto& f : pattern) want.emplace_back(f.begin(), f.end());
        std::sort(want.begin(), want.end());
        for (const auto& key : orbit_keys) {
            std::vector<std::vector<std::size_t>> have;
            for (const auto& [flips, eps] : key) have.push_back(flips);
            std::sort(have.begin(), have.end());
            if (have == want) return label;
        }
    }
    return "unclassified";
}

}  // namespace

ClassificationReport classify_triples(const SurfaceFamily& fam,
                                      const std::vector<SignInvolution>& pool) {
    if (pool.empty()) throw DomainError("classify_triples: empty pool");

    ClassificationReport report{fam, 0, 0, 0, {}, {}, {}};
    report.pool_size = pool.size();

    // per-involution realizable sign sets, cached
    std::vector<std::vector<int>> realizable;
    realizable.reserve(pool.size());
    for (const auto& s : pool) realizable.push_back(realizable_f_signs(fam, s));

    for (std::size_t a = 0; a < pool.size(); ++a) {
        for (std::size_t b = a + 1; b < pool.size(); ++b) {
            for (std::size_t c = b + 1; c < pool.size(); ++c) {
                ++report.triples_examined;
                const std::vector<SignInvolution> triple = {pool[a], pool[b], pool[c]};
                for (int ea : realizable[a]) {
                    for (int eb : realizable[b]) {
                        for (int ec : realizable[c]) {
                            ++report.assignments_examined;
                            const std::array<int, 3> signs = {ea, eb, ec};
                            if (!realizable_assignment(fam, triple, {ea, eb, ec})) continue;
                            SignMatrix m = generator_sign_matrix(fam, triple, signs);
                            bool rows_ok = true;
                            for (std::size_t j = 0; j < 3 && rows_ok; ++j)
                                if (!k3_quotient_check(m.row(j))) rows_ok = false;
                            if (!rows_ok) continue;
                            if (m.generators.size() != 3 || !eigensplit_check(m)) continue;
                            report.valid.push_back(BurgerCandidate{fam, triple, signs, m});
                        }
                    }
                }
            }
        }
    }

    // group the valid candidates into orbits under coordinate permutations
    const auto perms = coordinate_permutations(fam);
    std::map<CandidateKey, std::size_t> key_to_index;
    for (std::size_t i = 0; i < report.valid.size(); ++i)
        key_to_index[candidate_key(report.valid[i].triple, report.valid[i].f_signs)] = i;

    std::map<CandidateKey, Orbit> orbit_by_canonical;
    std::map<CandidateKey, std::vector<CandidateKey>> orbit_keys_by_canonical;
    for (std::size_t i = 0; i < report.valid.size(); ++i) {
        const CandidateKey key = candidate_key(report.valid[i].triple, report.valid[i].f_signs);
        CandidateKey canonical = key;
        for (const auto& p : perms) canonical = std::min(canonical, permuted_key(key, p));
        auto [it, inserted] = orbit_by_canonical.try_emplace(canonical);
        Orbit& orbit = it->second;
        if (inserted) {
            auto rep = key_to_index.find(canonical);
            orbit.representative_index = rep != key_to_index.end() ? rep->second : i;
        }
        orbit.member_indices.push_back(i);
        orbit_keys_by_canonical[canonical].push_back(key);
    }
    for (auto& [canonical, orbit] : orbit_by_canonical) {
        orbit.label = label_for(orbit_keys_by_canonical[canonical]);
        report.orbits.push_back(orbit);
    }

    // automorphism-class level, deduplicated
    std::set<std::vector<ScalarClass>> class_sets;
    for (const auto& cand : report.valid) class_sets.insert(canonicalize_automorphism_class(cand));
    report.automorphism_class_sets.assign(class_sets.begin(), class_sets.end());

    return report;
}

}  // namespace burger
