#pragma once

#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "burger/errors.hpp"
#include "burger/weighted_space.hpp"

namespace burger {

// Coordinate sign involution s_F: negates the coordinates in the flip set F.
// The empty set is the identity; composition is symmetric difference of flip
// sets, so these form the group (Z/2)^{n+1}.
class SignInvolution {
public:
    SignInvolution(WeightedSpace space, std::set<std::size_t> flips)
        : space_(std::move(space)), flips_(std::move(flips)) {
        for (std::size_t i : flips_)
            if (i >= space_.coordinate_count())
                throw DomainError("SignInvolution: flip index out of range");
    }

    const WeightedSpace& space() const { return space_; }
    const std::set<std::size_t>& flips() const { return flips_; }
    bool is_identity() const { return flips_.empty(); }
    bool flips_coordinate(std::size_t i) const { return flips_.count(i) > 0; }

    SignInvolution compose(const SignInvolution& other) const {
        if (space_ != other.space_) throw SpaceMismatch("SignInvolution: different spaces");
        std::set<std::size_t> sym;
        for (std::size_t i : flips_)
            if (!other.flips_.count(i)) sym.insert(i);
        for (std::size_t i : other.flips_)
            if (!flips_.count(i)) sym.insert(i);
        return SignInvolution(space_, std::move(sym));
    }

    // (-1)^{sum of exponents over the flip set}
    int sign_on(const WMonomial& m) const {
        Integer parity = 0;
        for (std::size_t i : flips_) {
            if (i >= m.exponents.size())
                throw SpaceMismatch("SignInvolution: monomial has too few exponents");
            parity += m.exponents[i];
        }
        return parity % 2 == 0 ? +1 : -1;
    }

    // Action on the standard weighted n-form: every term of the form contains
    // each coordinate exactly once (as a variable or a differential), so the
    // sign is (-1)^{|F|}.
    int omega_sign() const { return flips_.size() % 2 == 0 ? +1 : -1; }

    std::string name() const {
        if (flips_.empty()) return "id";
        std::ostringstream out;
        out << "s_";
        bool compact = space_.coordinate_count() <= 10;
        bool first = true;
        for (std::size_t i : flips_) {
            if (!first && !compact) out << ",";
            out << i;
            first = false;
        }
        return out.str();
    }

    bool operator==(const SignInvolution& o) const {
        return space_ == o.space_ && flips_ == o.flips_;
    }
    bool operator<(const SignInvolution& o) const { return flips_ < o.flips_; }

private:
    WeightedSpace space_;
    std::set<std::size_t> flips_;
};

}  // namespace burger
