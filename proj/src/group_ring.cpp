#include "burger/group_ring.hpp"

#include <sstream>

#include "burger/errors.hpp"

namespace burger {

GroupRingElement GroupRingElement::identity() {
    GroupRingElement e;
    e.coeff_[0] = 1;
    return e;
}

GroupRingElement GroupRingElement::generator(std::size_t j) {
    if (j >= 3) throw DomainError("GroupRingElement: generator index out of range");
    return basis_element(std::size_t(1) << j);
}

GroupRingElement GroupRingElement::basis_element(std::size_t mask) {
    if (mask >= group_order) throw DomainError("GroupRingElement: mask out of range");
    GroupRingElement e;
    e.coeff_[mask] = 1;
    return e;
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
    GroupRingElement r;
    for (std::size_t i = 0; i < group_order; ++i) r.coeff_[i] = coeff_[i] + o.coeff_[i];
    return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
    GroupRingElement r;
    for (std::size_t i = 0; i < group_order; ++i) r.coeff_[i] = coeff_[i] - o.coeff_[i];
    return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
    GroupRingElement r;
    for (std::size_t i = 0; i < group_order; ++i) {
        if (coeff_[i] == 0) continue;
        for (std::size_t j = 0; j < group_order; ++j) {
            if (o.coeff_[j] == 0) continue;
            r.coeff_[i ^ j] += coeff_[i] * o.coeff_[j];
        }
    }
    return r;
}

GroupRingElement GroupRingElement::operator*(const Rational& scalar) const {
    GroupRingElement r;
    for (std::size_t i = 0; i < group_order; ++i) r.coeff_[i] = coeff_[i] * scalar;
    return r;
}

bool GroupRingElement::is_zero() const {
    for (const auto& c : coeff_)
        if (c != 0) return false;
    return true;
}

std::string GroupRingElement::element_name(std::size_t mask) {
    if (mask == 0) return "e";
    std::string s;
    for (std::size_t j = 0; j < 3; ++j)
        if (mask & (std::size_t(1) << j)) s += "g" + std::to_string(j);
    return s;
}

std::string GroupRingElement::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < group_order; ++i) {
        if (coeff_[i] == 0) continue;
        Rational abs = coeff_[i] < 0 ? Rational(-coeff_[i]) : coeff_[i];
        if (first) {
            if (coeff_[i] < 0) out << "-";
        } else {
            out << (coeff_[i] < 0 ? " - " : " + ");
        }
        if (abs != 1 || i == 0) out << format_rational(abs);
        if (i != 0) {
            if (abs != 1) out << "*";
            out << element_name(i);
        }
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

int character_value(const std::array<int, 3>& signs, std::size_t mask) {
    int v = 1;
    for (std::size_t j = 0; j < 3; ++j)
        if (mask & (std::size_t(1) << j)) v *= signs[j];
    return v;
}

std::string sign_pattern_string(const std::array<int, 3>& signs) {
    std::string s;
    for (int v : signs) s += sign_char(v);
    return s;
}

std::array<int, 3> sign_pattern_from_index(std::size_t idx) {
    std::array<int, 3> signs{};
    for (std::size_t j = 0; j < 3; ++j)
        signs[j] = (idx & (std::size_t(1) << j)) ? -1 : +1;
    return signs;
}

GroupRingElement eigenprojector(const std::array<int, 3>& signs) {
    for (int v : signs)
        if (v != +1 && v != -1) throw DomainError("eigenprojector: signs must be +-1");
    GroupRingElement p = GroupRingElement::identity();
    for (std::size_t j = 0; j < 3; ++j) {
        GroupRingElement factor =
            GroupRingElement::identity() + GroupRingElement::generator(j) * Rational(signs[j]);
        p = p * factor;
    }
    return p * Rational(1, 8);
}

VerificationRecord verify_projector_system() {
    VerificationRecord record;

    std::array<GroupRingElement, 8> projectors;
    std::array<std::array<int, 3>, 8> patterns;
    for (std::size_t i = 0; i < 8; ++i) {
        patterns[i] = sign_pattern_from_index(i);
        projectors[i] = eigenprojector(patterns[i]);
    }

    for (std::size_t i = 0; i < 8; ++i)
        record.check("idempotent Gamma^" + sign_pattern_string(patterns[i]),
                     projectors[i].is_idempotent(),
                     "square is " + (projectors[i] * projectors[i]).to_string());

    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = i + 1; j < 8; ++j) {
            GroupRingElement prod = projectors[i] * projectors[j];
            record.check("orthogonal Gamma^" + sign_pattern_string(patterns[i]) + " * Gamma^" +
                             sign_pattern_string(patterns[j]),
                         prod.is_zero(), "product is " + prod.to_string());
        }
    }

    GroupRingElement sum;
    for (const auto& p : projectors) sum = sum + p;
    record.check("completeness: sum of the 8 eigenprojectors equals e",
                 sum == GroupRingElement::identity(), "sum is " + sum.to_string());

    // eigen-equation: Gamma_chi * g_j = chi_j * Gamma_chi
    for (std::size_t i = 0; i < 8; ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < 3 && ok; ++j) {
            GroupRingElement lhs = projectors[i] * GroupRingElement::generator(j);
            GroupRingElement rhs = projectors[i] * Rational(patterns[i][j]);
            ok = lhs == rhs;
        }
        record.check("eigen-equation Gamma^" + sign_pattern_string(patterns[i]) +
                         " * g_j = chi_j * Gamma^" + sign_pattern_string(patterns[i]),
                     ok);
    }

    // multiplication table: every product is either the common projector or 0
    bool table_ok = true;
    std::string table_witness;
    for (std::size_t i = 0; i < 8 && table_ok; ++i) {
        for (std::size_t j = 0; j < 8 && table_ok; ++j) {
            GroupRingElement prod = projectors[i] * projectors[j];
            const GroupRingElement expected = i == j ? projectors[i] : GroupRingElement();
            if (!(prod == expected)) {
                table_ok = false;
                table_witness = "Gamma^" + sign_pattern_string(patterns[i]) + " * Gamma^" +
                                sign_pattern_string(patterns[j]) + " = " + prod.to_string();
            }
        }
    }
    record.check("multiplication table: Gamma_chi * Gamma_chi' = delta_{chi,chi'} Gamma_chi",
                 table_ok, table_witness);

    return record;
}

}  // namespace burger
