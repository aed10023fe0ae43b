#include "blockspec/spectral.hpp"

#include "blockspec/charpoly.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace blockspec {

std::string RationalInterval::to_decimal(int digits) const {
    std::ostringstream os;
    os << std::setprecision(digits) << mid_double();
    if (is_point()) {
        os << " (exact)";
    } else {
        os << " ± " << std::setprecision(2) << radius_double();
    }
    return os.str();
}

std::string RationalInterval::to_rational() const { return "[" + lo.get_str() + ", " + hi.get_str() + "]"; }

namespace {

// Divide by the positive content, keeping signs.
IntPolynomial strip_content(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    const Integer g = p.content();
    std::vector<Integer> c = p.coeffs();
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(c));
}

int count_changes(const std::vector<int>& signs) {
    int changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

SturmChain::SturmChain(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
    chain_.push_back(square_free_part(p));
    if (chain_.front().degree() == 0) return;
    chain_.push_back(strip_content(chain_.front().derivative()));
    while (chain_.back().degree() > 0) {
        const auto& a = chain_[chain_.size() - 2];
        const auto& b = chain_.back();
        auto pd = pseudo_divide(a, b);
        // rem(a, b) = prem / lc(b)^e, and the chain continues with -rem(a, b).
        const bool lc_pow_negative = (sgn(b.leading()) < 0) && (pd.exponent % 2 == 1);
        IntPolynomial next = lc_pow_negative ? pd.remainder : -pd.remainder;
        if (next.is_zero()) break;  // cannot happen for square-free input
        chain_.push_back(strip_content(next));
    }
}

int SturmChain::sign_changes_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) signs.push_back(p.sign_at(x));
    return count_changes(signs);
}

int SturmChain::sign_changes_at_pos_infinity() const {
    std::vector<int> signs;
    for (const auto& p : chain_) signs.push_back(p.sign_at_pos_infinity());
    return count_changes(signs);
}

int SturmChain::sign_changes_at_neg_infinity() const {
    std::vector<int> signs;
    for (const auto& p : chain_) signs.push_back(p.sign_at_neg_infinity());
    return count_changes(signs);
}

int SturmChain::count(const Rational& a, const Rational& b) const {
    if (!(a < b)) throw std::invalid_argument("Sturm count needs a < b");
    return sign_changes_at(a) - sign_changes_at(b);
}

int SturmChain::count_above(const Rational& a) const { return sign_changes_at(a) - sign_changes_at_pos_infinity(); }

int SturmChain::count_real() const { return sign_changes_at_neg_infinity() - sign_changes_at_pos_infinity(); }

int sturm_count(const IntPolynomial& p, const Rational& a, const Rational& b) { return SturmChain(p).count(a, b); }

namespace {

RationalInterval refine_with_chain(const IntPolynomial& p, const SturmChain& sc, Rational lo, Rational hi,
                                   const Rational& width) {
    lo.canonicalize();
    hi.canonicalize();
    if (p.sign_at(hi) == 0) return {hi, hi};
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        if (sc.count(mid, hi) >= 1) {
            lo = mid;
        } else {
            if (p.sign_at(mid) == 0) return {mid, mid};
            hi = mid;
        }
    }
    return {lo, hi};
}

Rational block_graph_upper_bound(const BlockGraph& g) {
    // (q - 1 + sqrt((q-1)^2 + 4(n-1))) / 2, with the root rounded up.
    const Integer disc = Integer(g.q() - 1) * (g.q() - 1) + 4 * Integer(g.order() - 1);
    Integer root;
    mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
    if (root * root < disc) root += 1;
    return Rational(Integer(g.q() - 1) + root, 2);
}

}  // namespace

RationalInterval refine_largest_root(const IntPolynomial& p, Rational lo, Rational hi, const Rational& width) {
    if (!(width > 0)) throw std::invalid_argument("width must be positive");
    if (!(lo < hi)) throw std::invalid_argument("refine_largest_root needs lo < hi");
    SturmChain sc(p);
    if (sc.count_above(hi) != 0) throw std::invalid_argument("refine_largest_root: roots above the upper bound");
    if (sc.count(lo, hi) == 0) throw std::invalid_argument("refine_largest_root: no root in (lo, hi]");
    return refine_with_chain(p, sc, std::move(lo), std::move(hi), width);
}

RationalInterval spectral_radius_from_charpoly(const IntPolynomial& p, const Rational& upper_bound,
                                               const Rational& width) {
    // Every adjacency spectrum has its largest eigenvalue >= 0 > -1.
    return refine_largest_root(p, Rational(-1), upper_bound, width);
}

double power_iteration_estimate(const Graph& g, double tolerance, int max_iterations) {
    const int n = g.order();
    if (n == 0) return 0;
    std::vector<std::vector<Vertex>> nbrs(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) nbrs[v] = g.neighbors(v);
    // Shifting by I makes the Perron root strictly dominant in modulus.
    std::vector<double> x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) x[i] = 1.0 + 1e-3 * i;
    double lambda = 0;
    for (int it = 0; it < max_iterations; ++it) {
        double norm = 0;
        for (int i = 0; i < n; ++i) {
            double s = x[i];
            for (Vertex j : nbrs[i]) s += x[j];
            y[i] = s;
            norm += s * s;
        }
        norm = std::sqrt(norm);
        for (int i = 0; i < n; ++i) y[i] /= norm;
        double rq = 0;
        for (int i = 0; i < n; ++i) {
            double s = y[i];
            for (Vertex j : nbrs[i]) s += y[j];
            rq += y[i] * s;
        }
        x.swap(y);
        if (it > 0 && std::abs(rq - lambda) <= tolerance * std::max(1.0, std::abs(rq))) {
            lambda = rq;
            break;
        }
        lambda = rq;
    }
    return lambda - 1.0;
}

namespace {

SpectralRadius finish(const Graph& g, RationalInterval enc, const Rational& width) {
    SpectralRadius out;
    out.enclosure = std::move(enc);
    out.numeric_estimate = power_iteration_estimate(g);
    const double mid = out.enclosure.mid_double();
    const double tol = std::max(10.0 * Rational(width).get_d(), 1e-9 * std::max(1.0, std::abs(mid)));
    out.numeric_agrees = std::abs(out.numeric_estimate - mid) <= tol;
    return out;
}

}  // namespace

SpectralRadius spectral_radius(const Graph& g, const Rational& width) {
    if (g.order() == 0) throw std::invalid_argument("spectral radius of the empty graph");
    const IntPolynomial p = charpoly_direct(g);
    return finish(g, spectral_radius_from_charpoly(p, Rational(g.max_degree()), width), width);
}

SpectralRadius spectral_radius(const BlockGraph& g, const Rational& width) {
    const IntPolynomial p = charpoly_schwenk(g);
    Rational upper = block_graph_upper_bound(g);
    if (upper > g.graph().max_degree() || SturmChain(p).count_above(upper) != 0) upper = g.graph().max_degree();
    return finish(g.graph(), spectral_radius_from_charpoly(p, upper, width), width);
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    if (auto slash = text.find('/'); slash != std::string::npos) {
        Rational r(text);
        r.canonicalize();
        return r;
    }
    std::string mantissa = text;
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string::npos) {
        mantissa = text.substr(0, e);
        exponent = std::stol(text.substr(e + 1));
    }
    if (auto dot = mantissa.find('.'); dot != std::string::npos) {
        exponent -= static_cast<long>(mantissa.size() - dot - 1);
        mantissa.erase(dot, 1);
    }
    Integer m;
    if (mantissa.empty() || m.set_str(mantissa, 10) != 0) throw std::invalid_argument("bad number '" + text + "'");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    Rational r = exponent < 0 ? Rational(m, scale) : Rational(m * scale);
    r.canonicalize();
    return r;
}

}  // namespace blockspec
