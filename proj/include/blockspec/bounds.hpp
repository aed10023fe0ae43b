#ifndef BLOCKSPEC_BOUNDS_HPP
#define BLOCKSPEC_BOUNDS_HPP

#include "blockspec/canonical.hpp"
#include "blockspec/polynomial.hpp"
#include "blockspec/spectral.hpp"

#include <optional>
#include <string>

namespace blockspec {

// a + b * sqrt(d) with rational a, b and integer d >= 0.
class QuadraticSurd {
public:
    QuadraticSurd() = default;
    QuadraticSurd(Rational a, Rational b, Integer d);
    static QuadraticSurd rational(const Rational& a) { return {a, 0, 0}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Integer& d() const { return d_; }
    bool is_rational() const { return b_ == 0 || d_ == 0; }

    // Exact sign.
    int sign() const;
    // Exact sign of (*this - r).
    int compare(const Rational& r) const;
    int compare(const QuadraticSurd& other) const;  // same radicand (or rational)
    double to_double() const;

    QuadraticSurd operator+(const QuadraticSurd& o) const;
    QuadraticSurd operator-(const QuadraticSurd& o) const;
    QuadraticSurd operator*(const QuadraticSurd& o) const;

    // "31/7 + 8/7*sqrt(2)"
    std::string to_string() const;
    std::string to_decimal(int digits = 12) const;

private:
    void normalize();
    Rational a_;
    Rational b_;
    Integer d_{0};
};

// p evaluated exactly at a surd.
QuadraticSurd evaluate(const IntPolynomial& p, const QuadraticSurd& at);

// (q - 1 + sqrt((q - 1)^2 + 4(n - 1))) / 2; BlockGraphError(BadDivisibility)
// unless q divides n - 1.
QuadraticSurd star_radius(int n, int q);

// (x - q)((x - q)(x + 2) + 1) - 2q
IntPolynomial f_q(int q);

// Enclosure of the unique root of f_q in (q, +inf).
RationalInterval p3_radius(int q, const Rational& width = default_width());

// q + sqrt(q)/2 for 2 <= q <= 4, q + (4 + (q - 1) sqrt 2)/(q + 3 sqrt 2) for q >= 5.
QuadraticSurd lower_bound(int q);

// (x + 1)^(3q - 4) ((x - q)(x + 2) + 1) f_q(x)
IntPolynomial p3_charpoly(int q);

// Exact sign of rho - value, where p is monic with largest root rho inside
// `enclosure`. Refines the enclosure as needed.
int compare_spectral_radius(const IntPolynomial& p, RationalInterval enclosure, const QuadraticSurd& value);

struct BoundReport {
    int q = 0;
    int b = 0;
    int n = 0;
    QuadraticSurd lower;  // meaningful for b >= 2
    QuadraticSurd upper;  // radius of S(n, q)
    bool lower_applies = false;
    // Observed over the enumerated class, when computed.
    std::optional<RationalInterval> min_rho;
    std::optional<RationalInterval> max_rho;
    std::optional<CanonicalCode> min_witness;
    std::optional<CanonicalCode> max_witness;
    // rho >= lower - 1e-9 on every member / rho(S) >= max rho.
    std::optional<bool> lower_holds;
    std::optional<bool> upper_holds;
};

// Closed forms only, or also min/max over the enumerated class.
BoundReport bound_report(int q, int b, bool enumerate, const Rational& width = default_width(), int jobs = 1);

}  // namespace blockspec

#endif  // BLOCKSPEC_BOUNDS_HPP
