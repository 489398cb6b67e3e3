#include "burger/residue.hpp"

#include <algorithm>
#include <sstream>

#include "burger/errors.hpp"

namespace burger {

SurfaceFamily::SurfaceFamily(WeightedSpace space_, Integer degree_, EvennessConstraint evenness_)
    : space(std::move(space_)), degree(std::move(degree_)), evenness(std::move(evenness_)) {
    if (degree <= space.weight_sum())
        throw DomainError("SurfaceFamily: degree " + degree.str() +
                          " must exceed the weight sum " + space.weight_sum().str() +
                          " (general type)");
    for (std::size_t i : evenness.even_set)
        if (i >= space.coordinate_count())
            throw DomainError("SurfaceFamily: evenness index out of range");
}

std::vector<WMonomial> SurfaceFamily::basis() const {
    return enumerate_constrained_monomials(space, degree, evenness);
}

std::vector<WMonomial> SurfaceFamily::residue_generators() const {
    return enumerate_monomials(space, degree - space.weight_sum());
}

std::string SurfaceFamily::to_string() const {
    std::ostringstream out;
    out << space.to_string() << ", degree " << degree;
    if (!evenness.empty()) out << ", even " << evenness.to_string();
    return out.str();
}

std::vector<int> SignMatrix::column(std::size_t k) const {
    std::vector<int> col;
    col.reserve(entries.size());
    for (const auto& r : entries) col.push_back(r.at(k));
    return col;
}

std::vector<std::string> SignMatrix::row_strings() const {
    std::vector<std::string> out;
    out.reserve(entries.size());
    for (const auto& r : entries) {
        std::string s;
        for (int v : r) s += sign_char(v);
        out.push_back(s);
    }
    return out;
}

SignMatrix generator_sign_matrix(const SurfaceFamily& fam,
                                 const std::vector<SignInvolution>& triple,
                                 const std::array<int, 3>& f_signs) {
    if (triple.size() != 3)
        throw WrongShape("generator_sign_matrix: expected exactly 3 involutions");
    for (const auto& s : triple)
        if (s.space() != fam.space)
            throw SpaceMismatch("generator_sign_matrix: involution on a different space");
    for (int e : f_signs)
        if (e != +1 && e != -1) throw DomainError("generator_sign_matrix: f_signs must be +-1");

    const std::vector<WMonomial> family_basis = fam.basis();
    for (std::size_t j = 0; j < 3; ++j) {
        bool realizable = false;
        for (const WMonomial& m : family_basis)
            if (triple[j].sign_on(m) == f_signs[j]) {
                realizable = true;
                break;
            }
        if (!realizable)
            throw InconsistentFSign("generator_sign_matrix: no family member realizes sign " +
                                    std::string(1, sign_char(f_signs[j])) + " for " +
                                    triple[j].name());
    }

    SignMatrix m;
    m.rows = triple;
    m.generators = fam.residue_generators();
    m.f_signs = f_signs;
    m.entries.resize(3);
    for (std::size_t j = 0; j < 3; ++j) {
        const int omega = triple[j].omega_sign();
        m.entries[j].reserve(m.generators.size());
        for (const WMonomial& g : m.generators)
            m.entries[j].push_back(triple[j].sign_on(g) * omega * f_signs[j]);
    }
    return m;
}

long quotient_pg(const std::vector<int>& row) {
    long n = 0;
    for (int v : row)
        if (v > 0) ++n;
    return n;
}

bool k3_quotient_check(const std::vector<int>& row) { return quotient_pg(row) == 1; }

bool eigensplit_check(const SignMatrix& m) {
    if (m.generators.size() != 3)
        throw WrongShape("eigensplit_check: expected exactly 3 generator columns, got " +
                         std::to_string(m.generators.size()));
    std::vector<std::vector<int>> cols;
    for (std::size_t k = 0; k < 3; ++k) cols.push_back(m.column(k));
    std::sort(cols.begin(), cols.end());
    const std::vector<std::vector<int>> expected = {
        {-1, -1, +1}, {-1, +1, -1}, {+1, -1, -1}};
    return cols == expected;
}

Integer geometric_genus(const SurfaceFamily& fam) {
    return graded_dimension(fam.space, fam.degree - fam.space.weight_sum());
}

Rational canonical_square(const SurfaceFamily& fam) {
    // The standard formula needs a well-formed weight vector; reduce first.
    WeightedSpace space = fam.space;
    Integer degree = fam.degree;
    if (space.weight_gcd() == 1 || degree % space.weight_gcd() == 0) {
        auto [reduced_space, reduced_degree] = normalize_weights(space, degree);
        space = reduced_space;
        degree = reduced_degree;
    }
    Integer excess = degree - space.weight_sum();
    Integer product = 1;
    for (const Integer& q : space.weights()) product *= q;
    return Rational(excess * excess * degree, product);
}

Rational noether_gap(const SurfaceFamily& fam) {
    return canonical_square(fam) - Rational(2 * geometric_genus(fam) - 4);
}

}  // namespace burger
