#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "burger/residue.hpp"
#include "burger/sign_involution.hpp"
#include "burger/weighted_space.hpp"

namespace burger {

// Candidate pool. Restricted: all nonempty flip sets inside {0,1,2} (7
// involutions on a 4-coordinate space). Unrestricted: all 2^{n+1}-1 nonempty
// flip sets.
std::vector<SignInvolution> enumerate_sign_involutions(const WeightedSpace& space,
                                                       bool restrict_to_first_three);

// A triple of commuting sign involutions with semi-invariance signs and the
// induced action on the residue generators.
struct BurgerCandidate {
    SurfaceFamily family;
    std::vector<SignInvolution> triple;  // 3 distinct involutions
    std::array<int, 3> f_signs;
    SignMatrix matrix;
};

struct GroupDescriptor {
    long order = 0;          // order of the subgroup the triple generates in (Z/2)^{n+1}
    bool dependent = false;  // one involution is the product of the other two
    std::string relation;
    std::vector<std::set<std::size_t>> elements;  // the subgroup itself (graphs = partial diagonals)
};

GroupDescriptor verify_group_structure(const BurgerCandidate& c);

// Scalar-coset class of a flip set: F and F ^ {i : q_i odd} give the same
// ambient automorphism. Representative: least member under size-then-lex.
struct ScalarClass {
    std::set<std::size_t> representative;
    bool trivial = false;  // the class of the identity automorphism

    auto operator<=>(const ScalarClass&) const = default;
    std::string to_string() const;
};

ScalarClass scalar_class(const WeightedSpace& space, const std::set<std::size_t>& flips);

// The triple reduced modulo the scalar sign vector, as a sorted set of class
// representatives.
std::vector<ScalarClass> canonicalize_automorphism_class(const BurgerCandidate& c);

struct Orbit {
    std::string label;  // "(i)".."(iv)" or "unclassified"
    std::size_t representative_index = 0;  // into ClassificationReport::valid
    std::vector<std::size_t> member_indices;
};

struct ClassificationReport {
    SurfaceFamily family;
    std::size_t pool_size = 0;
    std::size_t triples_examined = 0;
    std::size_t assignments_examined = 0;
    std::vector<BurgerCandidate> valid;
    std::vector<Orbit> orbits;  // under permutations of the weight-1 coordinates {0,1,2}
    std::vector<std::vector<ScalarClass>> automorphism_class_sets;  // deduplicated
};

// Sign assignments realizable by a member of the family: the semi-invariant
// monomial subsystem must be nonempty and base-point free (a subsystem with a
// base stratum has no quasi-smooth member).
std::vector<int> realizable_f_signs(const SurfaceFamily& fam, const SignInvolution& s);
bool realizable_assignment(const SurfaceFamily& fam, const std::vector<SignInvolution>& involutions,
                           const std::vector<int>& signs);

// Iterates over unordered triples of distinct pool involutions and realizable
// sign assignments; keeps a candidate iff every row passes the sign-level K3
// criterion and the three generator columns split into the eigenspace
// patterns (+,-,-), (-,+,-), (-,-,+).
ClassificationReport classify_triples(const SurfaceFamily& fam,
                                      const std::vector<SignInvolution>& pool);

}  // namespace burger
