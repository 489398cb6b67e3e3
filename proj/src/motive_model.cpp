#include "burger/motive_model.hpp"

#include <sstream>

#include "burger/errors.hpp"
#include "burger/group_ring.hpp"

namespace burger {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    RatMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;  // the model matrices are sparse
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Rational& b = o.at(k, j);
                if (b == 0) continue;
                r.at(i, j) += a * b;
            }
        }
    }
    return r;
}

RatMatrix RatMatrix::operator*(const Rational& scalar) const {
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * scalar;
    return r;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::size_t RatMatrix::rank() const {
    std::vector<Rational> work = data_;
    auto entry = [&](std::size_t r, std::size_t c) -> Rational& { return work[r * cols_ + c]; };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows_ && entry(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(entry(rank, c), entry(pivot, c));
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            if (entry(r, col) == 0) continue;
            Rational factor = entry(r, col) / entry(rank, col);
            for (std::size_t c = col; c < cols_; ++c) entry(r, c) -= factor * entry(rank, c);
        }
        ++rank;
    }
    return rank;
}

VerificationRecord kunneth_model(const Integer& d, long b2) {
    return kunneth_model(CohomologyModel{d, b2});
}

VerificationRecord kunneth_model(const CohomologyModel& model) {
    const Integer& d = model.d;
    const long b2 = model.b2;
    if (d < 1 || b2 < 1) throw InvalidModel("kunneth_model: need d >= 1 and b2 >= 1");

    const std::size_t n = static_cast<std::size_t>(b2) + 2;
    const std::size_t h0 = 0, h4 = n - 1;
    const Rational deg(d);

    // pairing with the polarization square (a degree-d point class) and
    // projecting to the H^0 generator; the 1/d normalization makes it a
    // projector
    RatMatrix pair0(n, n), pair4(n, n);
    pair0.at(h0, h0) = deg;
    pair4.at(h4, h4) = deg;
    const RatMatrix pi0 = pair0 * Rational(1, d);
    const RatMatrix pi4 = pair4 * Rational(1, d);
    const RatMatrix pi2 = RatMatrix::identity(n) - pi0 - pi4;

    VerificationRecord record;
    const std::string suffix = " (d=" + d.str() + ", b2=" + std::to_string(b2) + ")";
    const std::array<const RatMatrix*, 3> pis = {&pi0, &pi2, &pi4};
    const std::array<std::string, 3> names = {"pi_0", "pi_2", "pi_4"};

    for (std::size_t i = 0; i < 3; ++i)
        record.check("idempotent " + names[i] + suffix, *pis[i] * *pis[i] == *pis[i]);

    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (i == j) continue;
            RatMatrix prod = *pis[i] * *pis[j];
            record.check(names[i] + " o " + names[j] + " = 0" + suffix,
                         prod == RatMatrix(n, n));
        }

    record.check("pi_0 + pi_2 + pi_4 = id" + suffix,
                 pi0 + pi2 + pi4 == RatMatrix::identity(n));

    record.check("rank pi_0 = 1" + suffix, pi0.rank() == 1,
                 "rank is " + std::to_string(pi0.rank()));
    record.check("rank pi_2 = b2" + suffix, pi2.rank() == static_cast<std::size_t>(b2),
                 "rank is " + std::to_string(pi2.rank()));
    record.check("rank pi_4 = 1" + suffix, pi4.rank() == 1,
                 "rank is " + std::to_string(pi4.rank()));
    return record;
}

long EigenspaceProfile::total_rank() const {
    long total = 0;
    for (long r : ranks) total += r;
    return total;
}

std::size_t EigenspaceProfile::index_of(const std::array<int, 3>& signs) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < 3; ++j)
        if (signs[j] < 0) idx |= std::size_t(1) << j;
    return idx;
}

VerificationRecord claim_decomposition_check(const EigenspaceProfile& profile) {
    for (long r : profile.ranks)
        if (r < 0) throw ProfileViolation("claim_decomposition_check: negative rank");

    // bit j set <=> chi_j = -1, so the popcount is the number of minus signs
    std::vector<std::size_t> surviving;
    for (std::size_t idx = 0; idx < 8; ++idx) {
        const int minus_count = __builtin_popcount(static_cast<unsigned>(idx));
        const bool allowed = minus_count == 2;
        if (!allowed && profile.ranks[idx] != 0)
            throw ProfileViolation("claim_decomposition_check: nonzero rank on forbidden character " +
                                   sign_pattern_string(sign_pattern_from_index(idx)));
        if (allowed) surviving.push_back(idx);
    }

    VerificationRecord record;

    // the module is semisimple: each group-ring element acts on the chi
    // component by its character value, scaled into a rank-r_chi block
    auto action_scalar = [](const GroupRingElement& x, std::size_t chi_idx) {
        const auto chi = sign_pattern_from_index(chi_idx);
        Rational value = 0;
        for (std::size_t mask = 0; mask < 8; ++mask)
            value += x.coefficient(mask) * Rational(character_value(chi, mask));
        return value;
    };

    // (a) the three surviving eigenprojectors decompose the module
    for (std::size_t chi : surviving) {
        const auto pattern = sign_pattern_from_index(chi);
        const GroupRingElement p = eigenprojector(pattern);
        bool ok = true;
        std::string witness;
        for (std::size_t component : surviving) {
            const Rational expected = component == chi ? 1 : 0;
            const Rational got = action_scalar(p, component);
            if (got != expected) {
                ok = false;
                witness = "Gamma^" + sign_pattern_string(pattern) + " acts by " +
                          format_rational(got) + " on the " +
                          sign_pattern_string(sign_pattern_from_index(component)) + " component";
            }
        }
        record.check("Gamma^" + sign_pattern_string(pattern) +
                         " is the identity on its component and 0 on the others",
                     ok, witness);
    }
    {
        GroupRingElement sum;
        for (std::size_t chi : surviving) sum = sum + eigenprojector(sign_pattern_from_index(chi));
        bool ok = true;
        for (std::size_t component : surviving)
            if (action_scalar(sum, component) != 1) ok = false;
        record.check("the surviving eigenprojectors sum to the identity on the module", ok);
    }

    // (b) (e + g_j) acts as multiplication by 1 + chi_j: literally 2*id or 0
    for (std::size_t j = 0; j < 3; ++j) {
        const GroupRingElement op = GroupRingElement::identity() + GroupRingElement::generator(j);
        bool ok = true;
        std::string witness;
        for (std::size_t component : surviving) {
            const auto chi = sign_pattern_from_index(component);
            const Rational expected = chi[j] > 0 ? 2 : 0;
            const Rational got = action_scalar(op, component);
            if (got != expected) {
                ok = false;
                witness = "(e + g" + std::to_string(j) + ") acts by " + format_rational(got) +
                          " on the " + sign_pattern_string(chi) + " component (rank " +
                          std::to_string(profile.ranks[component]) + ")";
            }
        }
        record.check("(e + g" + std::to_string(j) + ") acts as 2*id where g" + std::to_string(j) +
                         " = +1 and as 0 where g" + std::to_string(j) + " = -1",
                     ok, witness);
    }

    std::ostringstream ranks;
    for (std::size_t chi : surviving)
        ranks << sign_pattern_string(sign_pattern_from_index(chi)) << ":"
              << profile.ranks[chi] << " ";
    record.check("profile total rank " + std::to_string(profile.total_rank()) +
                     " decomposes as " + ranks.str(),
                 true);
    return record;
}

bool smash_pigeonhole_enumerate(long d, long r) {
    for (long r0 = 0; r0 <= r; ++r0)
        for (long r1 = 0; r0 + r1 <= r; ++r1) {
            const long r2 = r - r0 - r1;
            const long maxpart = std::max(r0, std::max(r1, r2));
            if (maxpart < d + 1) return false;
        }
    return true;
}

bool smash_pigeonhole(const Integer& d, const Integer& r, long enumeration_bound) {
    if (d < 0 || r < 0) throw DomainError("smash_pigeonhole: need d >= 0 and r >= 0");
    if (r <= enumeration_bound && d <= enumeration_bound)
        return smash_pigeonhole_enumerate(static_cast<long>(d), static_cast<long>(r));
    return r >= 3 * d + 1;
}

}  // namespace burger
