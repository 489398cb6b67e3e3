#pragma once

#include <array>
#include <string>

#include "burger/numeric.hpp"
#include "burger/verification.hpp"

namespace burger {

// Exact-rational element of the group ring Q[G], G = <g_0,g_1,g_2> = (Z/2)^3.
// Group elements are indexed by bitmasks: bit j set means g_j occurs.
class GroupRingElement {
public:
    static constexpr std::size_t group_order = 8;

    GroupRingElement() = default;  // zero
    static GroupRingElement identity();
    static GroupRingElement generator(std::size_t j);        // g_j
    static GroupRingElement basis_element(std::size_t mask);

    const Rational& coefficient(std::size_t mask) const { return coeff_.at(mask); }
    Rational& coefficient(std::size_t mask) { return coeff_.at(mask); }

    GroupRingElement operator+(const GroupRingElement& o) const;
    GroupRingElement operator-(const GroupRingElement& o) const;
    GroupRingElement operator*(const GroupRingElement& o) const;  // convolution, XOR on masks
    GroupRingElement operator*(const Rational& scalar) const;
    bool operator==(const GroupRingElement& o) const { return coeff_ == o.coeff_; }

    bool is_zero() const;
    bool is_idempotent() const { return *this * *this == *this; }

    static std::string element_name(std::size_t mask);  // "e", "g0", "g0g1", ...
    std::string to_string() const;

private:
    std::array<Rational, group_order> coeff_{};
};

// (1/8) * prod_j (e + sign_j * g_j): the idempotent projecting onto the
// simultaneous eigenspace with the given signs.
GroupRingElement eigenprojector(const std::array<int, 3>& signs);

// Character value of the group element `mask` on the sign pattern.
int character_value(const std::array<int, 3>& signs, std::size_t mask);

std::string sign_pattern_string(const std::array<int, 3>& signs);
std::array<int, 3> sign_pattern_from_index(std::size_t idx);  // bit j set <=> sign_j = -1

// Asserts that the 8 eigenprojectors are idempotent, pairwise orthogonal and
// sum to the identity; includes the eigen-equation Gamma_chi * g_j =
// chi_j * Gamma_chi and the full multiplication table.
VerificationRecord verify_projector_system();

}  // namespace burger
