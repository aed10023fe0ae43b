#ifndef BLOCKSPEC_SPECTRAL_HPP
#define BLOCKSPEC_SPECTRAL_HPP

#include "blockspec/block_graph.hpp"
#include "blockspec/graph.hpp"
#include "blockspec/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace blockspec {

// Closed interval with exact rational endpoints.
struct RationalInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    double mid_double() const { return midpoint().get_d(); }
    double radius_double() const { return Rational(width() / 2).get_d(); }

    // "2.813606503 ± 4.7e-11"
    std::string to_decimal(int digits = 12) const;
    // "[lo_num/lo_den, hi_num/hi_den]"
    std::string to_rational() const;
};

// Sturm chain of the square-free part of p. Because the chain never has two
// consecutive terms vanishing together, V(a) - V(b) is the number of distinct
// real roots in the half-open interval (a, b] for every a < b, including
// endpoints that are roots. No endpoint perturbation is needed.
class SturmChain {
public:
    explicit SturmChain(const IntPolynomial& p);

    int sign_changes_at(const Rational& x) const;
    int sign_changes_at_pos_infinity() const;
    int sign_changes_at_neg_infinity() const;

    // Distinct roots in (a, b].
    int count(const Rational& a, const Rational& b) const;
    // Distinct roots in (a, +inf).
    int count_above(const Rational& a) const;
    int count_real() const;

    const IntPolynomial& square_free() const { return chain_.front(); }
    const std::vector<IntPolynomial>& chain() const { return chain_; }

private:
    std::vector<IntPolynomial> chain_;
};

// Distinct real roots of p in (a, b]. Requires a < b and p != 0.
int sturm_count(const IntPolynomial& p, const Rational& a, const Rational& b);

// Enclosure of the largest real root r of p, given lo < r <= hi and no root
// above hi. Bisects at dyadic midpoints until hi - lo <= width; collapses to a
// point interval when r is hit exactly.
RationalInterval refine_largest_root(const IntPolynomial& p, Rational lo, Rational hi, const Rational& width);

struct SpectralRadius {
    RationalInterval enclosure;   // certified
    double numeric_estimate = 0;  // power iteration on A + I, advisory
    bool numeric_agrees = false;  // |estimate - midpoint| <= tolerance
};

inline const Rational& default_width() {
    static const Rational w(1, 100000000);
    return w;
}

// Certified enclosure of the largest adjacency eigenvalue. The initial bracket
// is (-1, max degree]; for block graphs the upper end is tightened to a
// rational at or above the S(n,q) radius.
SpectralRadius spectral_radius(const Graph& g, const Rational& width = default_width());
SpectralRadius spectral_radius(const BlockGraph& g, const Rational& width = default_width());

// Same, from a precomputed characteristic polynomial.
RationalInterval spectral_radius_from_charpoly(const IntPolynomial& p, const Rational& upper_bound,
                                               const Rational& width);

// Rayleigh-quotient power iteration on A + I, minus 1.
double power_iteration_estimate(const Graph& g, double tolerance = 1e-14, int max_iterations = 200000);

// Parses "1e-8", "0.001", "3/7", "5".
Rational parse_rational(const std::string& text);

}  // namespace blockspec

#endif  // BLOCKSPEC_SPECTRAL_HPP
