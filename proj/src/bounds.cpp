#include "blockspec/bounds.hpp"

#include "blockspec/block_graph.hpp"
#include "blockspec/charpoly.hpp"
#include "blockspec/enumeration.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace blockspec {

QuadraticSurd::QuadraticSurd(Rational a, Rational b, Integer d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (d_ < 0) throw std::invalid_argument("QuadraticSurd: negative radicand");
    normalize();
}

void QuadraticSurd::normalize() {
    a_.canonicalize();
    b_.canonicalize();
    if (b_ == 0 || d_ == 0) {
        b_ = 0;
        d_ = 0;
        return;
    }
    // Pull out perfect squares so that sqrt(52) becomes 2*sqrt(13).
    Integer root;
    mpz_sqrt(root.get_mpz_t(), d_.get_mpz_t());
    if (root * root == d_) {
        a_ += b_ * root;
        b_ = 0;
        d_ = 0;
        return;
    }
    for (Integer f = 2; f * f <= d_; ++f) {
        while (d_ % (f * f) == 0) {
            d_ /= f * f;
            b_ *= f;
        }
    }
}

int QuadraticSurd::sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: compare a^2 with b^2 d.
    const Rational lhs = a_ * a_;
    const Rational rhs = b_ * b_ * d_;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
}

int QuadraticSurd::compare(const Rational& r) const { return QuadraticSurd(a_ - r, b_, d_).sign(); }

int QuadraticSurd::compare(const QuadraticSurd& other) const { return (*this - other).sign(); }

double QuadraticSurd::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d()); }

namespace {

Integer common_radicand(const QuadraticSurd& x, const QuadraticSurd& y) {
    if (x.is_rational()) return y.d();
    if (y.is_rational() || x.d() == y.d()) return x.d();
    throw std::invalid_argument("QuadraticSurd: mixed radicands");
}

}  // namespace

QuadraticSurd QuadraticSurd::operator+(const QuadraticSurd& o) const {
    return {a_ + o.a_, b_ + o.b_, common_radicand(*this, o)};
}

QuadraticSurd QuadraticSurd::operator-(const QuadraticSurd& o) const {
    return {a_ - o.a_, b_ - o.b_, common_radicand(*this, o)};
}

QuadraticSurd QuadraticSurd::operator*(const QuadraticSurd& o) const {
    const Integer d = common_radicand(*this, o);
    return {a_ * o.a_ + b_ * o.b_ * d, a_ * o.b_ + b_ * o.a_, d};
}

std::string QuadraticSurd::to_string() const {
    if (is_rational()) return a_.get_str();
    std::ostringstream os;
    if (a_ != 0) os << a_.get_str() << (b_ > 0 ? " + " : " - ");
    else if (b_ < 0) os << "-";
    const Rational mag = abs(b_);
    if (mag != 1) os << mag.get_str() << "*";
    os << "sqrt(" << d_.get_str() << ")";
    return os.str();
}

std::string QuadraticSurd::to_decimal(int digits) const {
    const mpf_class v = mpf_class(a_, 256) + mpf_class(b_, 256) * sqrt(mpf_class(d_, 256));
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

QuadraticSurd evaluate(const IntPolynomial& p, const QuadraticSurd& at) {
    QuadraticSurd acc;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * at + QuadraticSurd::rational(Rational(*it));
    return acc;
}

QuadraticSurd star_radius(int n, int q) {
    if (q < 1 || n < 2 || (n - 1) % q != 0)
        throw BlockGraphError(BlockGraphErrc::BadDivisibility,
                              "BadDivisibility: q = " + std::to_string(q) + " does not divide n-1 = " + std::to_string(n - 1));
    const Integer qm = q - 1;
    return {Rational(qm, 2), Rational(1, 2), qm * qm + 4 * Integer(n - 1)};
}

IntPolynomial f_q(int q) {
    if (q < 1) throw std::invalid_argument("f_q needs q >= 1");
    const auto xq = IntPolynomial::linear(q);
    return xq * (xq * IntPolynomial{2, 1} + IntPolynomial{1}) - IntPolynomial::constant(2 * q);
}

RationalInterval p3_radius(int q, const Rational& width) {
    if (q < 2) throw std::invalid_argument("p3_radius needs q >= 2");
    // f_q(q) = -2q < 0 and f_q(q + 2) = 2q + 18 > 0.
    return refine_largest_root(f_q(q), Rational(q), Rational(q + 2), width);
}

QuadraticSurd lower_bound(int q) {
    if (q < 2) throw std::invalid_argument("lower_bound needs q >= 2");
    if (q <= 4) return {Rational(q), Rational(1, 2), Integer(q)};
    // q + (4 + (q-1) sqrt2)(q - 3 sqrt2)/(q^2 - 18)
    const Integer den = Integer(q) * q - 18;
    return {Rational(q) + Rational(Integer(6 - 2 * q), den), Rational(Integer(q) * q - q - 12, den), 2};
}

IntPolynomial p3_charpoly(int q) {
    if (q < 2) throw std::invalid_argument("p3_charpoly needs q >= 2");
    const auto xq = IntPolynomial::linear(q);
    return IntPolynomial{1, 1}.pow(static_cast<unsigned>(3 * q - 4)) * (xq * IntPolynomial{2, 1} + IntPolynomial{1}) *
           f_q(q);
}

int compare_spectral_radius(const IntPolynomial& p, RationalInterval enclosure, const QuadraticSurd& value) {
    for (int round = 0; round < 4096; ++round) {
        if (value.compare(enclosure.lo) < 0) return 1;
        if (value.compare(enclosure.hi) > 0) return -1;
        if (evaluate(p, value).sign() == 0 && (enclosure.is_point() || sturm_count(p, enclosure.lo, enclosure.hi) == 1))
            return 0;
        enclosure = refine_largest_root(p, enclosure.lo, enclosure.hi, enclosure.width() / 2);
    }
    throw std::logic_error("compare_spectral_radius: no separation");
}

BoundReport bound_report(int q, int b, bool enumerate, const Rational& width, int jobs) {
    if (q < 2 || b < 1) throw std::invalid_argument("bound_report needs q >= 2 and b >= 1");
    BoundReport r;
    r.q = q;
    r.b = b;
    r.n = q * b + 1;
    r.upper = star_radius(r.n, q);
    r.lower_applies = r.n - 1 > q;
    r.lower = lower_bound(q);
    if (!enumerate) return r;

    const QuadraticSurd tol = QuadraticSurd::rational(Rational(1, 1000000000));
    for (const auto& m : enumerate_class(q, b, jobs)) {
        const RationalInterval rho = spectral_radius(m.graph, width).enclosure;
        if (r.lower_applies && compare_spectral_radius(charpoly_schwenk(m.graph), rho, r.lower - tol) < 0)
            r.lower_holds = false;
        if (!r.min_rho || rho.hi < r.min_rho->hi) {
            r.min_rho = rho;
            r.min_witness = m.code;
        }
        if (!r.max_rho || rho.lo > r.max_rho->lo) {
            r.max_rho = rho;
            r.max_witness = m.code;
        }
    }
    if (r.lower_applies && !r.lower_holds) r.lower_holds = true;
    r.upper_holds = r.upper.compare(Rational(r.max_rho->lo - Rational(1, 1000000000))) >= 0;
    return r;
}

}  // namespace blockspec
