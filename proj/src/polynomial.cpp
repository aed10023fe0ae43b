#include "blockspec/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace blockspec {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, int degree) {
    std::vector<Integer> v(static_cast<std::size_t>(degree + 1));
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear(const Integer& root) { return IntPolynomial(std::vector<Integer>{-root, 1}); }

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[i];
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Integer> out(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Rational IntPolynomial::evaluate(const Rational& at) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + Rational(*it);
    acc.canonicalize();
    return acc;
}

int IntPolynomial::sign_at(const Rational& at) const {
    // den^d * p(num/den) = sum c_i num^i den^(d-i), same sign as p(at).
    const Integer& num = at.get_num();
    const Integer& den = at.get_den();
    Integer acc = 0;
    Integer den_pow = 1;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * num + (*it) * den_pow;
        den_pow *= den;
    }
    return sgn(acc);
}

int IntPolynomial::sign_at_pos_infinity() const { return is_zero() ? 0 : sgn(leading()); }

int IntPolynomial::sign_at_neg_infinity() const {
    if (is_zero()) return 0;
    return (degree() % 2 == 0) ? sgn(leading()) : -sgn(leading());
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Integer> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
    IntPolynomial result = constant(1);
    IntPolynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

Integer IntPolynomial::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return {};
    Integer g = content();
    if (leading() < 0) g = -g;
    IntPolynomial out = *this;
    for (auto& c : out.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return out;
}

std::string IntPolynomial::to_text() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? " " : "") << coeffs_[i];
    return os.str();
}

IntPolynomial IntPolynomial::from_text(const std::string& text) {
    std::istringstream is(text);
    std::vector<Integer> v;
    std::string tok;
    while (is >> tok) {
        Integer c;
        if (c.set_str(tok, 10) != 0) throw std::invalid_argument("bad coefficient '" + tok + "'");
        v.push_back(c);
    }
    return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Integer& c = coeffs_[i];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = (mag == 1);
        if (i == 0) {
            os << mag;
        } else {
            if (!unit) os << mag << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

PseudoDivision pseudo_divide(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("pseudo-division by zero polynomial");
    if (a.degree() < b.degree()) return {IntPolynomial{}, a, 0};
    const unsigned e = static_cast<unsigned>(a.degree() - b.degree() + 1);
    const Integer& lc = b.leading();
    std::vector<Integer> rem = a.coeffs();
    std::vector<Integer> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const auto& bc = b.coeffs();
    const int db = b.degree();
    // Classic pseudo-division: each step multiplies the running remainder by lc.
    for (int k = a.degree() - db; k >= 0; --k) {
        const Integer top = rem[k + db];
        for (auto& qc : quo) qc *= lc;
        quo[k] += top;
        for (auto& rc : rem) rc *= lc;
        for (int j = 0; j <= db; ++j) rem[k + j] -= top * bc[j];
    }
    return {IntPolynomial(std::move(quo)), IntPolynomial(std::move(rem)), e};
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) { return pseudo_divide(a, b).remainder; }

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero()) return {};
    auto pd = pseudo_divide(a, b);
    if (!pd.remainder.is_zero()) throw std::domain_error("exact_divide: nonzero remainder");
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), b.leading().get_mpz_t(), pd.exponent);
    std::vector<Integer> q = pd.quotient.coeffs();
    for (auto& c : q) {
        if (!mpz_divisible_p(c.get_mpz_t(), scale.get_mpz_t()))
            throw std::domain_error("exact_divide: quotient is not integral");
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), scale.get_mpz_t());
    }
    return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial u = a.primitive_part();
    IntPolynomial v = b.primitive_part();
    if (u.is_zero()) return v;
    if (v.is_zero()) return u;
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPolynomial r = pseudo_remainder(u, v).primitive_part();
        u = std::move(v);
        v = std::move(r);
    }
    if (u.degree() == 0) return IntPolynomial::constant(1);
    return u;
}

IntPolynomial square_free_part(const IntPolynomial& p) {
    if (p.degree() <= 0) return p.primitive_part();
    const IntPolynomial g = gcd(p, p.derivative());
    const IntPolynomial pp = p.primitive_part();
    if (g.degree() == 0) return pp;
    // pp = g * s over the integers by Gauss's lemma since g is primitive.
    return exact_divide(pp, g).primitive_part();
}

}  // namespace blockspec
