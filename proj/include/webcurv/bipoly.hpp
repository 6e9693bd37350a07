#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "webcurv/rational.hpp"

namespace webcurv {

// Sparse bivariate polynomial in x, y over Rational. Terms are kept sorted in
// graded-lex order with x > y (packed into one key), with no zero coefficients;
// the zero polynomial has no terms.
class BiPoly {
public:
    using Key = std::uint64_t;
    struct Term {
        Key key;
        Rational coeff;
    };

    static constexpr unsigned kMaxExponent = (1u << 21) - 1;

    BiPoly() = default;
    explicit BiPoly(long c) { if (c != 0) terms_.push_back({pack(0, 0), Rational(c)}); }
    explicit BiPoly(const Rational& c) { if (c != 0) terms_.push_back({pack(0, 0), c}); }

    static BiPoly variable_x() { return monomial(1, 0, Rational(1)); }
    static BiPoly variable_y() { return monomial(0, 1, Rational(1)); }
    static BiPoly monomial(unsigned ex, unsigned ey, const Rational& c);
    // Sorts, merges equal keys, drops zeros.
    static BiPoly from_terms(std::vector<Term> terms);

    static Key pack(unsigned ex, unsigned ey) {
        return (Key(ex + ey) << 42) | (Key(ex) << 21) | Key(ey);
    }
    static unsigned exp_x(Key k) { return unsigned((k >> 21) & kMaxExponent); }
    static unsigned exp_y(Key k) { return unsigned(k & kMaxExponent); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].key == 0); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].key == 0 && terms_[0].coeff == 1; }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Graded-lex leading term; polynomial must be nonzero.
    const Term& leading_term() const { return terms_.back(); }

    unsigned degree_x() const;
    unsigned degree_y() const;
    unsigned total_degree() const;  // 0 for the zero polynomial

    Rational coefficient(unsigned ex, unsigned ey) const;
    Rational constant_coefficient() const { return coefficient(0, 0); }

    BiPoly operator-() const;
    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly& operator+=(const BiPoly& o) { *this = *this + o; return *this; }
    BiPoly& operator-=(const BiPoly& o) { *this = *this - o; return *this; }
    bool operator==(const BiPoly& o) const;
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    BiPoly scaled(const Rational& c) const;
    BiPoly shifted(unsigned ex, unsigned ey) const;  // * x^ex * y^ey

    BiPoly derivative_x() const;
    BiPoly derivative_y() const;

    Rational evaluate(const Rational& x0, const Rational& y0) const;

    // Pulls the rational content out: *this == factor * result where the result
    // has coprime integer coefficients and a positive graded-lex leading
    // coefficient. Returns the factor (0 for the zero polynomial).
    Rational make_integer_primitive();
    bool has_integer_coefficients() const;

    // Terms in descending graded-lex order, e.g. "2*x^2*y - x + 1/3".
    std::string to_string() const;

private:
    std::vector<Term> terms_;  // ascending key order
};

// gcd of polynomials with integer coefficients (heuristic gcd with an exact
// division check, subresultant PRS fallback). The result has coprime integer
// coefficients and positive leading coefficient; gcd(0, g) is normalized g.
BiPoly integer_poly_gcd(const BiPoly& f, const BiPoly& g);

// Exact division of integer-coefficient polynomials; nullopt when the division
// does not come out exact.
std::optional<BiPoly> exact_divide(const BiPoly& f, const BiPoly& g);
bool divides(const BiPoly& g, const BiPoly& f);

}  // namespace webcurv
