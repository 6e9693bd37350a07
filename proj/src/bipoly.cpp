#include "webcurv/bipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "webcurv/errors.hpp"

namespace webcurv {

BiPoly BiPoly::monomial(unsigned ex, unsigned ey, const Rational& c) {
    BiPoly p;
    if (c != 0) p.terms_.push_back({pack(ex, ey), c});
    return p;
}

BiPoly BiPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.key < b.key; });
    BiPoly p;
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        if (!p.terms_.empty() && p.terms_.back().key == t.key) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

unsigned BiPoly::degree_x() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, exp_x(t.key));
    return d;
}

unsigned BiPoly::degree_y() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, exp_y(t.key));
    return d;
}

unsigned BiPoly::total_degree() const {
    if (terms_.empty()) return 0;
    return unsigned(terms_.back().key >> 42);
}

Rational BiPoly::coefficient(unsigned ex, unsigned ey) const {
    const Key k = pack(ex, ey);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& t, Key key) { return t.key < key; });
    if (it != terms_.end() && it->key == k) return it->coeff;
    return Rational(0);
}

BiPoly BiPoly::operator-() const {
    BiPoly p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.key, -t.coeff});
    return p;
}

namespace {

// Merge-add of two sorted term lists; `sign` applies to b.
BiPoly merge(const BiPoly& a, const BiPoly& b, int sign) {
    BiPoly out;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    std::vector<BiPoly::Term> r;
    r.reserve(ta.size() + tb.size());
    std::size_t i = 0, j = 0;
    while (i < ta.size() || j < tb.size()) {
        if (j == tb.size() || (i < ta.size() && ta[i].key < tb[j].key)) {
            r.push_back(ta[i++]);
        } else if (i == ta.size() || tb[j].key < ta[i].key) {
            r.push_back({tb[j].key, sign > 0 ? tb[j].coeff : -tb[j].coeff});
            ++j;
        } else {
            Rational c = sign > 0 ? ta[i].coeff + tb[j].coeff : ta[i].coeff - tb[j].coeff;
            if (c != 0) r.push_back({ta[i].key, std::move(c)});
            ++i;
            ++j;
        }
    }
    return BiPoly::from_terms(std::move(r));  // already sorted & merged; cheap pass
}

}  // namespace

BiPoly BiPoly::operator+(const BiPoly& o) const { return merge(*this, o, +1); }
BiPoly BiPoly::operator-(const BiPoly& o) const { return merge(*this, o, -1); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
    if (is_zero() || o.is_zero()) return BiPoly();
    if (is_constant()) return o.scaled(terms_[0].coeff);
    if (o.is_constant()) return scaled(o.terms_[0].coeff);
    const BiPoly& small = terms_.size() <= o.terms_.size() ? *this : o;
    const BiPoly& big = terms_.size() <= o.terms_.size() ? o : *this;
    std::unordered_map<Key, Rational> acc;
    acc.reserve(small.terms_.size() * big.terms_.size() / 2 + 8);
    for (const auto& s : small.terms_) {
        for (const auto& b : big.terms_) {
            acc[s.key + b.key] += s.coeff * b.coeff;
        }
    }
    std::vector<Term> r;
    r.reserve(acc.size());
    for (auto& [k, c] : acc) {
        if (c != 0) r.push_back({k, std::move(c)});
    }
    return from_terms(std::move(r));
}

bool BiPoly::operator==(const BiPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].key != o.terms_[i].key || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    }
    return true;
}

BiPoly BiPoly::scaled(const Rational& c) const {
    if (c == 0) return BiPoly();
    BiPoly p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.key, t.coeff * c});
    return p;
}

BiPoly BiPoly::shifted(unsigned ex, unsigned ey) const {
    const Key delta = pack(ex, ey);
    BiPoly p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.key + delta, t.coeff});
    return p;
}

BiPoly BiPoly::derivative_x() const {
    std::vector<Term> r;
    r.reserve(terms_.size());
    for (const auto& t : terms_) {
        const unsigned ex = exp_x(t.key);
        if (ex == 0) continue;
        r.push_back({pack(ex - 1, exp_y(t.key)), t.coeff * long(ex)});
    }
    return from_terms(std::move(r));
}

BiPoly BiPoly::derivative_y() const {
    std::vector<Term> r;
    r.reserve(terms_.size());
    for (const auto& t : terms_) {
        const unsigned ey = exp_y(t.key);
        if (ey == 0) continue;
        r.push_back({pack(exp_x(t.key), ey - 1), t.coeff * long(ey)});
    }
    return from_terms(std::move(r));
}

Rational BiPoly::evaluate(const Rational& x0, const Rational& y0) const {
    // Powers memoized up to the needed degrees.
    std::vector<Rational> px{Rational(1)}, py{Rational(1)};
    px.reserve(degree_x() + 1);
    py.reserve(degree_y() + 1);
    for (unsigned i = 1; i <= degree_x(); ++i) px.push_back(px.back() * x0);
    for (unsigned j = 1; j <= degree_y(); ++j) py.push_back(py.back() * y0);
    Rational acc(0);
    for (const auto& t : terms_) acc += t.coeff * px[exp_x(t.key)] * py[exp_y(t.key)];
    return acc;
}

Rational BiPoly::make_integer_primitive() {
    if (terms_.empty()) return Rational(0);
    Integer den_lcm(1);
    for (const auto& t : terms_) {
        Integer d = t.coeff.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    Integer num_gcd(0);
    std::vector<Integer> scaled_coeffs;
    scaled_coeffs.reserve(terms_.size());
    for (const auto& t : terms_) {
        Integer v = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
        scaled_coeffs.push_back(std::move(v));
    }
    bool negate = sgn(scaled_coeffs.back()) < 0;  // leading (highest key) coefficient
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        Integer v = scaled_coeffs[i] / num_gcd;
        if (negate) v = -v;
        terms_[i].coeff = Rational(v);
    }
    Rational factor(negate ? -num_gcd : num_gcd, den_lcm);
    factor.canonicalize();
    return factor;
}

bool BiPoly::has_integer_coefficients() const {
    for (const auto& t : terms_) {
        if (!is_integer(t.coeff)) return false;
    }
    return true;
}

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->coeff;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        const unsigned ex = exp_x(it->key), ey = exp_y(it->key);
        const bool has_vars = ex > 0 || ey > 0;
        if (!has_vars || c != 1) {
            os << webcurv::to_string(c);
            if (has_vars) os << "*";
        }
        if (ex > 0) {
            os << "x";
            if (ex > 1) os << "^" << ex;
        }
        if (ey > 0) {
            if (ex > 0) os << "*";
            os << "y";
            if (ey > 1) os << "^" << ey;
        }
    }
    return os.str();
}

}  // namespace webcurv
