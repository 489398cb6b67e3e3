#include "burger/wpolynomial.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "burger/errors.hpp"

namespace burger {

WPolynomial::WPolynomial(WeightedSpace space, std::map<WMonomial, Rational> terms, Integer degree,
                         bool /*trust*/)
    : space_(std::move(space)), terms_(std::move(terms)), degree_(std::move(degree)) {}

WPolynomial::WPolynomial(WeightedSpace space, std::map<WMonomial, Rational> terms)
    : space_(std::move(space)), degree_(0) {
    bool first = true;
    for (auto& [m, c] : terms) {
        if (c == 0) continue;
        Integer d = m.weighted_degree(space_);
        if (first) {
            degree_ = d;
            first = false;
        } else if (d != degree_) {
            throw InhomogeneousError("WPolynomial: mixed weighted degrees " + degree_.str() +
                                     " and " + d.str());
        }
        terms_.emplace(m, c);
    }
}

WPolynomial WPolynomial::zero(WeightedSpace space, Integer degree) {
    return WPolynomial(std::move(space), {}, std::move(degree), true);
}

WPolynomial WPolynomial::operator+(const WPolynomial& o) const {
    if (space_ != o.space_) throw SpaceMismatch("WPolynomial: sum over different spaces");
    if (o.is_zero()) return *this;
    if (is_zero()) return o;
    if (degree_ != o.degree_)
        throw InhomogeneousError("WPolynomial: sum of degrees " + degree_.str() + " and " +
                                 o.degree_.str());
    std::map<WMonomial, Rational> terms = terms_;
    for (const auto& [m, c] : o.terms_) {
        Rational& acc = terms[m];
        acc += c;
        if (acc == 0) terms.erase(m);
    }
    return WPolynomial(space_, std::move(terms), degree_, true);
}

WPolynomial WPolynomial::operator-() const {
    std::map<WMonomial, Rational> terms;
    for (const auto& [m, c] : terms_) terms.emplace(m, -c);
    return WPolynomial(space_, std::move(terms), degree_, true);
}

WPolynomial WPolynomial::operator*(const WPolynomial& o) const {
    if (space_ != o.space_) throw SpaceMismatch("WPolynomial: product over different spaces");
    std::map<WMonomial, Rational> terms;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            WMonomial prod = m1;
            for (std::size_t i = 0; i < prod.exponents.size(); ++i)
                prod.exponents[i] += m2.exponents[i];
            Rational& acc = terms[prod];
            acc += c1 * c2;
            if (acc == 0) terms.erase(prod);
        }
    }
    return WPolynomial(space_, std::move(terms), degree_ + o.degree_, true);
}

std::string WPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // iterate in descending order to match the canonical x_0 > x_1 > ... display
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational abs = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (abs != 1 || m.is_constant()) {
            out << format_rational(abs);
            if (!m.is_constant()) out << "*";
        }
        if (!m.is_constant()) out << m.to_string();
        first = false;
    }
    return out.str();
}

namespace {

struct Token {
    enum Kind { plus, minus, star, slash, caret, number, var } kind;
    Integer value;     // number value or variable index
    bool after_space;  // whitespace immediately before this token
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    bool pending_space = false;
    while (i < text.size()) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            pending_space = true;
            ++i;
            continue;
        }
        Token tok{};
        tok.after_space = pending_space;
        pending_space = false;
        if (ch == '+') {
            tok.kind = Token::plus;
            ++i;
        } else if (ch == '-') {
            tok.kind = Token::minus;
            ++i;
        } else if (ch == '*') {
            tok.kind = Token::star;
            ++i;
        } else if (ch == '/') {
            tok.kind = Token::slash;
            ++i;
        } else if (ch == '^') {
            tok.kind = Token::caret;
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            tok.kind = Token::number;
            tok.value = Integer(text.substr(i, j - i));
            i = j;
        } else if (ch == 'x') {
            std::size_t j = i + 1;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i + 1) throw ParseError("parse_wpoly: 'x' must be followed by an index");
            tok.kind = Token::var;
            tok.value = Integer(text.substr(i + 1, j - i - 1));
            i = j;
        } else {
            throw ParseError(std::string("parse_wpoly: unexpected character '") + ch + "'");
        }
        tokens.push_back(std::move(tok));
    }
    return tokens;
}

}  // namespace

WPolynomial parse_wpoly(const std::string& text, const WeightedSpace& space) {
    const std::vector<Token> tokens = tokenize(text);
    if (tokens.empty()) throw ParseError("parse_wpoly: empty input");

    std::map<WMonomial, Rational> terms;
    std::optional<Integer> seen_degree;

    std::size_t pos = 0;
    bool first_term = true;
    while (pos < tokens.size()) {
        int sign = +1;
        if (tokens[pos].kind == Token::plus || tokens[pos].kind == Token::minus) {
            sign = tokens[pos].kind == Token::minus ? -1 : +1;
            ++pos;
        } else if (!first_term) {
            throw ParseError("parse_wpoly: terms must be joined by '+' or '-'");
        }
        first_term = false;
        if (pos >= tokens.size()) throw ParseError("parse_wpoly: dangling sign");

        Rational coeff(sign);
        bool have_rational = false;
        if (tokens[pos].kind == Token::number) {
            Integer num = tokens[pos].value;
            ++pos;
            Integer den = 1;
            if (pos < tokens.size() && tokens[pos].kind == Token::slash) {
                ++pos;
                if (pos >= tokens.size() || tokens[pos].kind != Token::number)
                    throw ParseError("parse_wpoly: '/' must be followed by a positive integer");
                den = tokens[pos].value;
                if (den == 0) throw ParseError("parse_wpoly: zero denominator");
                ++pos;
            }
            coeff *= Rational(num, den);
            have_rational = true;
            // optional '*' between coefficient and first variable
            if (pos < tokens.size() && tokens[pos].kind == Token::star) {
                if (pos + 1 >= tokens.size() || tokens[pos + 1].kind != Token::var)
                    throw ParseError("parse_wpoly: '*' must be followed by a variable");
                ++pos;
            }
        }

        WMonomial mono{std::vector<Integer>(space.coordinate_count(), 0)};
        bool have_var = false;
        bool expect_separator = false;  // set after a parsed variable factor
        while (pos < tokens.size() && (tokens[pos].kind == Token::var ||
                                       (tokens[pos].kind == Token::star && expect_separator))) {
            bool separated = false;
            if (tokens[pos].kind == Token::star) {
                ++pos;
                separated = true;
                if (pos >= tokens.size() || tokens[pos].kind != Token::var)
                    throw ParseError("parse_wpoly: '*' must be followed by a variable");
            }
            if (expect_separator && !separated && !tokens[pos].after_space)
                throw ParseError(
                    "parse_wpoly: variables must be separated by '*' or whitespace");
            Integer index = tokens[pos].value;
            if (index >= space.coordinate_count())
                throw ParseError("parse_wpoly: variable x" + index.str() +
                                 " out of range for " + space.to_string());
            ++pos;
            Integer exponent = 1;
            if (pos < tokens.size() && tokens[pos].kind == Token::caret) {
                ++pos;
                if (pos >= tokens.size() || tokens[pos].kind != Token::number)
                    throw ParseError("parse_wpoly: '^' must be followed by an integer");
                exponent = tokens[pos].value;
                ++pos;
            }
            mono.exponents[static_cast<std::size_t>(index)] += exponent;
            have_var = true;
            expect_separator = true;
        }

        if (!have_rational && !have_var)
            throw ParseError("parse_wpoly: expected a coefficient or a variable");

        Integer d = mono.weighted_degree(space);
        if (!seen_degree) {
            seen_degree = d;
        } else if (*seen_degree != d) {
            throw InhomogeneousError("parse_wpoly: mixed weighted degrees " +
                                     seen_degree->str() + " and " + d.str());
        }
        Rational& acc = terms[mono];
        acc += coeff;
        if (acc == 0) terms.erase(mono);
    }

    WPolynomial result(space, std::move(terms));
    if (result.is_zero() && seen_degree) return WPolynomial::zero(space, *seen_degree);
    return result;
}

WPolynomial apply_involution(const WPolynomial& f, const SignInvolution& s) {
    if (f.space() != s.space()) throw SpaceMismatch("apply_involution: different spaces");
    std::map<WMonomial, Rational> terms;
    for (const auto& [m, c] : f.terms()) terms.emplace(m, s.sign_on(m) > 0 ? c : -c);
    WPolynomial g = WPolynomial::zero(f.space(), f.degree());
    return g + WPolynomial(f.space(), std::move(terms));
}

std::string to_string(SemiInvariance v) {
    switch (v) {
        case SemiInvariance::plus: return "+1";
        case SemiInvariance::minus: return "-1";
        default: return "not semi-invariant";
    }
}

SemiInvariance semi_invariance_sign(const WPolynomial& f, const SignInvolution& s) {
    if (f.space() != s.space()) throw SpaceMismatch("semi_invariance_sign: different spaces");
    bool any_plus = false, any_minus = false;
    for (const auto& [m, c] : f.terms()) {
        (s.sign_on(m) > 0 ? any_plus : any_minus) = true;
        if (any_plus && any_minus) return SemiInvariance::not_semi_invariant;
    }
    return any_minus ? SemiInvariance::minus : SemiInvariance::plus;
}

std::vector<WPolynomial> jacobian_generators(const WPolynomial& f) {
    std::vector<WPolynomial> partials;
    const std::size_t n = f.space().coordinate_count();
    partials.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::map<WMonomial, Rational> terms;
        for (const auto& [m, c] : f.terms()) {
            if (m.exponents[i] == 0) continue;
            WMonomial dm = m;
            Rational dc = c * Rational(m.exponents[i]);
            dm.exponents[i] -= 1;
            terms.emplace(std::move(dm), std::move(dc));
        }
        Integer d = f.degree() - f.space().weight(i);
        if (terms.empty()) {
            partials.push_back(WPolynomial::zero(f.space(), d));
        } else {
            partials.push_back(WPolynomial::zero(f.space(), d) +
                               WPolynomial(f.space(), std::move(terms)));
        }
    }
    return partials;
}

std::string to_string(QuasiSmoothVerdict v) {
    switch (v) {
        case QuasiSmoothVerdict::quasi_smooth: return "QuasiSmooth";
        case QuasiSmoothVerdict::singular_witness: return "SingularWitness";
        default: return "Inconclusive";
    }
}

namespace {

std::string coordinate_point_name(std::size_t u, std::size_t n) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < n; ++i) {
        if (i) out << ",";
        out << (i == u ? "1" : "0");
    }
    out << ")";
    return out.str();
}

// A term of shape c*x_u^k or c*x_u^k*x_j is exactly what makes some partial
// derivative nonzero at the coordinate point e_u.
bool has_shape_term(const WPolynomial& f, std::size_t u) {
    for (const auto& [m, c] : f.terms()) {
        auto supp = m.support();
        if (supp.size() == 1 && supp[0] == u) return true;
        if (supp.size() == 2 && (supp[0] == u || supp[1] == u)) {
            std::size_t other = supp[0] == u ? supp[1] : supp[0];
            if (m.exponents[other] == 1 && m.exponents[u] >= 1) return true;
        }
    }
    return false;
}

QuasiSmoothResult diagonal_exact_check(const WPolynomial& f) {
    const std::size_t n = f.space().coordinate_count();

    for (std::size_t u = 0; u < n; ++u) {
        if (!has_shape_term(f, u)) {
            QuasiSmoothResult r;
            r.verdict = QuasiSmoothVerdict::singular_witness;
            r.witness = coordinate_point_name(u, n);
            r.detail = "all partial derivatives vanish at the coordinate point " + r.witness +
                       ": f has no term of shape x" + std::to_string(u) + "^k or x" +
                       std::to_string(u) + "^k*x_j";
            return r;
        }
    }

    const std::vector<WPolynomial> partials = jacobian_generators(f);
    std::set<std::size_t> forced_zero;
    std::ostringstream narrative;

    bool progressed = true;
    while (progressed && forced_zero.size() < n) {
        progressed = false;
        for (std::size_t t = 0; t < n; ++t) {
            // monomials of d f / d x_t surviving on the stratum x_Z = 0
            const WMonomial* survivor = nullptr;
            std::size_t survivors = 0;
            for (const auto& [m, c] : partials[t].terms()) {
                bool killed = false;
                for (std::size_t z : forced_zero)
                    if (m.exponents[z] > 0) {
                        killed = true;
                        break;
                    }
                if (killed) continue;
                survivor = &m;
                if (++survivors > 1) break;
            }
            if (survivors != 1) continue;
            auto supp = survivor->support();
            if (supp.empty()) {
                QuasiSmoothResult r;
                r.verdict = QuasiSmoothVerdict::quasi_smooth;
                r.detail = "d f/d x" + std::to_string(t) +
                           " reduces to a nonzero constant once x_i = 0 is forced for i in {" +
                           narrative.str() + "}; the partials have no common zero at all";
                return r;
            }
            if (supp.size() == 1 && !forced_zero.count(supp[0])) {
                forced_zero.insert(supp[0]);
                if (narrative.tellp() > 0) narrative << ",";
                narrative << supp[0];
                progressed = true;
            }
        }
    }

    QuasiSmoothResult r;
    if (forced_zero.size() == n) {
        r.verdict = QuasiSmoothVerdict::quasi_smooth;
        r.detail = "triangular elimination forces every coordinate to zero (order: " +
                   narrative.str() + "); the partials vanish simultaneously only at the origin";
    } else {
        r.verdict = QuasiSmoothVerdict::inconclusive;
        std::ostringstream left;
        for (std::size_t i = 0; i < n; ++i)
            if (!forced_zero.count(i)) left << (left.tellp() > 0 ? "," : "") << i;
        r.detail = "triangular elimination stalled; coordinates not forced to zero: {" +
                   left.str() + "}";
    }
    return r;
}

long mod_pow(long base, const Integer& exponent, long p) {
    base %= p;
    if (base < 0) base += p;
    if (base == 0) return exponent == 0 ? 1 % p : 0;
    Integer e = exponent % (p - 1);  // Fermat
    long result = 1, b = base;
    Integer k = e;
    while (k > 0) {
        if (k % 2 == 1) result = result * b % p;
        b = b * b % p;
        k /= 2;
    }
    return result;
}

long mod_inverse(long a, long p) {
    // p prime, a not divisible by p
    long result = 1, b = a % p, k = p - 2;
    while (k > 0) {
        if (k & 1) result = result * b % p;
        b = b * b % p;
        k >>= 1;
    }
    return result;
}

QuasiSmoothResult finite_field_check(const WPolynomial& f, const std::vector<long>& primes) {
    const std::size_t n = f.space().coordinate_count();
    const std::vector<WPolynomial> partials = jacobian_generators(f);

    long long points_scanned = 0;
    std::vector<long> primes_used, primes_skipped;

    for (long p : primes) {
        if (p < 2) continue;
        bool bad_denominator = false;
        for (const auto& [m, c] : f.terms())
            if (denominator(c) % p == 0) bad_denominator = true;
        if (bad_denominator) {
            primes_skipped.push_back(p);
            continue;
        }
        primes_used.push_back(p);

        // partials reduced mod p: (exponent vectors, coefficients)
        struct ModPoly {
            std::vector<std::pair<const WMonomial*, long>> terms;
        };
        std::vector<ModPoly> reduced(n);
        for (std::size_t t = 0; t < n; ++t) {
            for (const auto& [m, c] : partials[t].terms()) {
                long num = static_cast<long>(numerator(c) % p);
                if (num < 0) num += p;
                long den = static_cast<long>(denominator(c) % p);
                long coeff = num * mod_inverse(den, p) % p;
                if (coeff != 0) reduced[t].terms.emplace_back(&m, coeff);
            }
        }

        std::vector<long> point(n, 0);
        bool done = false;
        while (!done) {
            bool nonzero_point = false;
            for (long x : point)
                if (x != 0) nonzero_point = true;
            if (nonzero_point) {
                ++points_scanned;
                bool all_vanish = true;
                for (std::size_t t = 0; t < n && all_vanish; ++t) {
                    long value = 0;
                    for (const auto& [m, coeff] : reduced[t].terms) {
                        long term = coeff;
                        for (std::size_t i = 0; i < n && term != 0; ++i)
                            if (m->exponents[i] != 0)
                                term = term * mod_pow(point[i], m->exponents[i], p) % p;
                        value = (value + term) % p;
                    }
                    if (value != 0) all_vanish = false;
                }
                if (all_vanish) {
                    QuasiSmoothResult r;
                    r.verdict = QuasiSmoothVerdict::singular_witness;
                    std::ostringstream w;
                    w << "(";
                    for (std::size_t i = 0; i < n; ++i) w << (i ? "," : "") << point[i];
                    w << ") mod " << p;
                    r.witness = w.str();
                    r.detail = "nonzero common zero of the partials over F_" + std::to_string(p) +
                               " at " + r.witness + " (liftability to characteristic 0 not attempted)";
                    return r;
                }
            }
            // next point in lexicographic order
            std::size_t i = n;
            while (i > 0) {
                --i;
                if (++point[i] < p) break;
                point[i] = 0;
                if (i == 0) done = true;
            }
        }
    }

    QuasiSmoothResult r;
    r.verdict = QuasiSmoothVerdict::inconclusive;
    std::ostringstream d;
    d << "no nonzero common zero of the partials found; primes used {";
    for (std::size_t i = 0; i < primes_used.size(); ++i) d << (i ? "," : "") << primes_used[i];
    d << "}";
    if (!primes_skipped.empty()) {
        d << ", primes skipped (divide a coefficient denominator) {";
        for (std::size_t i = 0; i < primes_skipped.size(); ++i)
            d << (i ? "," : "") << primes_skipped[i];
        d << "}";
    }
    d << ", " << points_scanned << " points scanned; exhaustion is evidence, not a proof";
    r.detail = d.str();
    return r;
}

}  // namespace

QuasiSmoothResult quasi_smooth_check(const WPolynomial& f, QuasiSmoothMode mode,
                                     const std::vector<long>& primes) {
    if (f.is_zero()) throw DomainError("quasi_smooth_check: zero polynomial");
    if (mode == QuasiSmoothMode::diagonal_exact) return diagonal_exact_check(f);
    return finite_field_check(f, primes);
}

bool vanishes_at_coordinate_point(const WPolynomial& f, std::size_t i) {
    for (const auto& [m, c] : f.terms()) {
        auto supp = m.support();
        if (supp.size() == 1 && supp[0] == i) return false;
    }
    return true;
}

}  // namespace burger
