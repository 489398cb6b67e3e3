#include "burger/weighted_space.hpp"

#include <map>
#include <sstream>

#include "burger/errors.hpp"

namespace burger {

WeightedSpace::WeightedSpace(std::vector<Integer> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw DomainError("WeightedSpace: weight list must be nonempty");
    sum_ = 0;
    gcd_ = 0;
    lcm_ = 1;
    for (const Integer& q : weights_) {
        if (q < 1) throw DomainError("WeightedSpace: weights must be >= 1");
        sum_ += q;
        gcd_ = boost::multiprecision::gcd(gcd_, q);
        lcm_ = boost::multiprecision::lcm(lcm_, q);
    }
}

std::vector<int> WeightedSpace::scalar_sign_vector() const {
    std::vector<int> v;
    v.reserve(weights_.size());
    for (const Integer& q : weights_) v.push_back(q % 2 == 0 ? +1 : -1);
    return v;
}

std::string WeightedSpace::to_string() const {
    std::ostringstream out;
    out << "P(";
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i) out << ",";
        out << weights_[i];
    }
    out << ")";
    return out.str();
}

Integer WMonomial::weighted_degree(const WeightedSpace& space) const {
    if (exponents.size() != space.coordinate_count())
        throw SpaceMismatch("WMonomial: exponent count differs from coordinate count");
    Integer d = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 0) throw DomainError("WMonomial: negative exponent");
        d += exponents[i] * space.weight(i);
    }
    return d;
}

std::vector<std::size_t> WMonomial::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] > 0) s.push_back(i);
    return s;
}

bool WMonomial::divides(const WMonomial& other) const {
    if (exponents.size() != other.exponents.size()) return false;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] > other.exponents[i]) return false;
    return true;
}

bool WMonomial::is_constant() const {
    for (const Integer& b : exponents)
        if (b != 0) return false;
    return true;
}

std::string WMonomial::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue;
        if (!first) out << "*";
        out << "x" << i;
        if (exponents[i] != 1) out << "^" << exponents[i];
        first = false;
    }
    if (first) out << "1";
    return out.str();
}

std::string EvennessConstraint::to_string() const {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (std::size_t i : even_set) {
        if (!first) out << ",";
        out << i;
        first = false;
    }
    out << "}";
    return out.str();
}

namespace {

struct CountContext {
    const std::vector<Integer>& weights;
    const EvennessConstraint* even;
    const std::set<std::size_t>* exclude;
    std::map<std::pair<std::size_t, Integer>, Integer> memo;

    bool is_even(std::size_t i) const { return even && even->even_set.count(i) > 0; }
    bool is_excluded(std::size_t i) const { return exclude && exclude->count(i) > 0; }

    Integer count(std::size_t i, const Integer& remaining) {
        if (remaining < 0) return 0;
        if (i == weights.size()) return remaining == 0 ? Integer(1) : Integer(0);
        auto key = std::make_pair(i, remaining);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Integer total = 0;
        Integer maxb = is_excluded(i) ? Integer(0) : remaining / weights[i];
        Integer step = 1;
        if (is_even(i)) {
            step = 2;
            if (maxb % 2 != 0) maxb -= 1;
        }
        for (Integer b = 0; b <= maxb; b += step) total += count(i + 1, remaining - b * weights[i]);
        memo.emplace(key, total);
        return total;
    }
};

void enumerate_rec(const std::vector<Integer>& weights, std::size_t i, const Integer& remaining,
                   std::vector<Integer>& current, std::vector<WMonomial>& out,
                   const EvennessConstraint* even, const std::set<std::size_t>* exclude) {
    const bool is_even = even && even->even_set.count(i) > 0;
    const bool is_excluded = exclude && exclude->count(i) > 0;
    if (i + 1 == weights.size()) {
        if (remaining % weights[i] != 0) return;
        Integer b = remaining / weights[i];
        if (is_excluded && b != 0) return;
        if (is_even && b % 2 != 0) return;
        current[i] = b;
        out.push_back(WMonomial{current});
        current[i] = 0;
        return;
    }
    Integer maxb = is_excluded ? Integer(0) : remaining / weights[i];
    Integer step = 1;
    if (is_even) {
        step = 2;
        if (maxb % 2 != 0) maxb -= 1;
    }
    // descending exponent at each index gives the canonical x_0 > x_1 > ... order
    for (Integer b = maxb; b >= 0; b -= step) {
        current[i] = b;
        enumerate_rec(weights, i + 1, remaining - b * weights[i], current, out, even, exclude);
    }
    current[i] = 0;
}

}  // namespace

Integer graded_dimension(const WeightedSpace& space, const Integer& d) {
    if (d < 0) return 0;
    CountContext ctx{space.weights(), nullptr, nullptr, {}};
    return ctx.count(0, d);
}

Integer constrained_dimension(const WeightedSpace& space, const Integer& d,
                              const EvennessConstraint& c, const std::set<std::size_t>& exclude) {
    if (d < 0) return 0;
    CountContext ctx{space.weights(), &c, &exclude, {}};
    return ctx.count(0, d);
}

std::vector<WMonomial> enumerate_monomials(const WeightedSpace& space, const Integer& d) {
    std::vector<WMonomial> out;
    if (d < 0) return out;
    std::vector<Integer> current(space.coordinate_count(), 0);
    enumerate_rec(space.weights(), 0, d, current, out, nullptr, nullptr);
    return out;
}

std::vector<WMonomial> enumerate_constrained_monomials(const WeightedSpace& space, const Integer& d,
                                                       const EvennessConstraint& c,
                                                       const std::set<std::size_t>& exclude) {
    std::vector<WMonomial> out;
    if (d < 0) return out;
    std::vector<Integer> current(space.coordinate_count(), 0);
    enumerate_rec(space.weights(), 0, d, current, out, &c, &exclude);
    return out;
}

std::pair<WeightedSpace, Integer> normalize_weights(const WeightedSpace& space,
                                                    const Integer& degree) {
    std::vector<Integer> w = space.weights();
    Integer d = degree;

    Integer g = space.weight_gcd();
    if (g > 1) {
        if (d % g != 0)
            throw NonIntegralDegree("normalize_weights: degree " + degree.str() +
                                    " not divisible by weight gcd " + g.str());
        for (Integer& q : w) q /= g;
        d /= g;
    }

    if (w.size() >= 2) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < w.size(); ++i) {
                Integer a = 0;
                for (std::size_t j = 0; j < w.size(); ++j)
                    if (j != i) a = boost::multiprecision::gcd(a, w[j]);
                if (a > 1 && d % a == 0) {
                    for (std::size_t j = 0; j < w.size(); ++j)
                        if (j != i) w[j] /= a;
                    d /= a;
                    changed = true;
                }
            }
        }
    }
    return {WeightedSpace(std::move(w)), d};
}

}  // namespace burger
