#ifndef BLOCKSPEC_POLYNOMIAL_HPP
#define BLOCKSPEC_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace blockspec {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense univariate polynomial over the integers; coeffs()[i] multiplies x^i.
// The zero polynomial has no coefficients and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial constant(const Integer& c);
    static IntPolynomial monomial(const Integer& c, int degree);
    static IntPolynomial x() { return monomial(1, 1); }
    // (x - root)
    static IntPolynomial linear(const Integer& root);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    Integer coeff(int i) const;
    const Integer& leading() const { return coeffs_.back(); }

    IntPolynomial& operator+=(const IntPolynomial& other);
    IntPolynomial& operator-=(const IntPolynomial& other);
    IntPolynomial& operator*=(const IntPolynomial& other);
    IntPolynomial& operator*=(const Integer& scalar);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
    friend IntPolynomial operator*(IntPolynomial a, const Integer& s) { return a *= s; }
    friend IntPolynomial operator*(const Integer& s, IntPolynomial a) { return a *= s; }
    IntPolynomial operator-() const;

    bool operator==(const IntPolynomial&) const = default;

    Rational evaluate(const Rational& at) const;
    // Sign of p(at) without forming the rational value.
    int sign_at(const Rational& at) const;
    // Sign of p(x) for x large / very negative.
    int sign_at_pos_infinity() const;
    int sign_at_neg_infinity() const;

    IntPolynomial derivative() const;
    IntPolynomial pow(unsigned exponent) const;

    // gcd of the coefficients, nonnegative.
    Integer content() const;
    // Divided by its content, leading coefficient made positive.
    IntPolynomial primitive_part() const;

    // "c0 c1 ... cn" (constant term first).
    std::string to_text() const;
    static IntPolynomial from_text(const std::string& text);
    // Human readable, highest degree first, e.g. "x^3 - 3*x - 2".
    std::string to_string() const;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

// lc(b)^(deg a - deg b + 1) * a = quotient * b + remainder.
struct PseudoDivision {
    IntPolynomial quotient;
    IntPolynomial remainder;
    unsigned exponent;
};
PseudoDivision pseudo_divide(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

// Exact quotient a / b; throws std::domain_error when b does not divide a over Q
// or the quotient is not integral.
IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);

// Primitive gcd with positive leading coefficient (primitive PRS). gcd(0,0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

// Primitive polynomial with the same roots as p, each of multiplicity one.
IntPolynomial square_free_part(const IntPolynomial& p);

}  // namespace blockspec

#endif  // BLOCKSPEC_POLYNOMIAL_HPP
