#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

#include "permstat/decomp.hpp"

// Exact multivariate polynomials in Y, t, q over arbitrary-precision
// integers, truncated power series in u over such polynomials (or over
// exact rationals), and the generating-function coefficient extraction
// they support.  No floating point anywhere.

namespace permstat {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exponent vector of a monomial Y^y t^t q^q.
struct Monomial {
    int y = 0, t = 0, q = 0;

    int total() const noexcept { return y + t + q; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order in (Y, t, q), leading term first.  This is
/// the canonical storage and rendering order; golden files depend on it.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.total() != b.total()) return a.total() > b.total();
        if (a.y != b.y) return a.y > b.y;
        if (a.t != b.t) return a.t > b.t;
        return a.q > b.q;
    }
};

class ExactPolynomial {
public:
    ExactPolynomial() = default;
    ExactPolynomial(int c) : ExactPolynomial(Int(c)) {}  // NOLINT(google-explicit-constructor)
    explicit ExactPolynomial(Int c);

    static ExactPolynomial variable_y(int power = 1);
    static ExactPolynomial variable_t(int power = 1);
    static ExactPolynomial variable_q(int power = 1);
    /// Single term coeff * Y^y t^t q^q.
    static ExactPolynomial term(Int coeff, Monomial m);

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<Monomial, Int, GrlexGreater>& terms() const noexcept { return terms_; }
    Int coefficient(const Monomial& m) const;

    ExactPolynomial& operator+=(const ExactPolynomial& o);
    ExactPolynomial& operator-=(const ExactPolynomial& o);
    ExactPolynomial operator-() const;
    friend ExactPolynomial operator+(ExactPolynomial a, const ExactPolynomial& b) { return a += b; }
    friend ExactPolynomial operator-(ExactPolynomial a, const ExactPolynomial& b) { return a -= b; }
    friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b);
    ExactPolynomial& operator*=(const ExactPolynomial& o) { return *this = *this * o; }
    friend bool operator==(const ExactPolynomial&, const ExactPolynomial&) = default;

    int degree_t() const noexcept;
    /// Coefficient of t^k, as a polynomial in (Y, q).
    ExactPolynomial t_coefficient(int k) const;
    /// Drops all terms with t-exponent above max_t.
    ExactPolynomial truncate_t(int max_t) const;
    ExactPolynomial substitute_t_one() const;

    Rational evaluate(const Rational& y, const Rational& t, const Rational& q) const;

    /// Canonical text form, e.g. "Y^2 + t*q"; zero renders as "0".
    std::string str() const;

private:
    std::map<Monomial, Int, GrlexGreater> terms_;  // no zero coefficients stored
};

/// Truncated formal power series in u: coefficients of u^0 .. u^order.
/// All arithmetic is exact modulo u^{order+1}.  The coefficient ring must
/// support +, -, *, ==, and construction from small ints.
template <typename Coef>
class PowerSeries {
public:
    explicit PowerSeries(int order) : c_(static_cast<size_t>(order) + 1, Coef(0)) {}

    static PowerSeries constant(int order, Coef value) {
        PowerSeries s(order);
        s.c_[0] = std::move(value);
        return s;
    }
    static PowerSeries one(int order) { return constant(order, Coef(1)); }

    int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const Coef& coeff(int k) const { return c_.at(static_cast<size_t>(k)); }
    Coef& coeff(int k) { return c_.at(static_cast<size_t>(k)); }

    PowerSeries& operator+=(const PowerSeries& o) {
        require_same_order(o);
        for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    PowerSeries& operator-=(const PowerSeries& o) {
        require_same_order(o);
        for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }

    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        a.require_same_order(b);
        PowerSeries out(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (a.c_[static_cast<size_t>(i)] == Coef(0)) continue;
            for (int j = 0; i + j <= a.order(); ++j)
                out.c_[static_cast<size_t>(i + j)] +=
                    a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
        }
        return out;
    }
    PowerSeries& operator*=(const PowerSeries& o) { return *this = *this * o; }

    /// Multiplicative inverse modulo u^{order+1}; the constant term must
    /// equal 1, so coefficients stay in the ring.
    PowerSeries reciprocal() const {
        if (!(c_[0] == Coef(1)))
            throw PreconditionError("series reciprocal requires constant term 1");
        PowerSeries out(order());
        out.c_[0] = Coef(1);
        for (int n = 1; n <= order(); ++n) {
            Coef acc(0);
            for (int k = 1; k <= n; ++k)
                acc += c_[static_cast<size_t>(k)] * out.c_[static_cast<size_t>(n - k)];
            out.c_[static_cast<size_t>(n)] = Coef(0) - acc;
        }
        return out;
    }

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    void require_same_order(const PowerSeries& o) const {
        if (c_.size() != o.c_.size())
            throw PreconditionError("series truncation orders differ");
    }
    std::vector<Coef> c_;
};

using PolySeries = PowerSeries<ExactPolynomial>;
using RationalSeries = PowerSeries<Rational>;

/// (a; q)_k = (1 - a)(1 - a q) ... (1 - a q^{k-1}) where a is itself a
/// truncated series in u and q multiplies coefficients.  (a; q)_0 = 1.
PolySeries q_pochhammer(const PolySeries& a, int k);

/// The series u, or u*Y, to the given truncation order.
PolySeries series_u(int order);
PolySeries series_uy(int order);

/// A_0 .. A_{n_max} in (Y, t, q), extracted from the factorial generating
/// function with denominator (t; q)_{n+1}.  The assembled product is
/// checked to vanish in t-degrees n .. n_max+1; a surviving term throws.
std::vector<ExactPolynomial> gf_coefficients_t(int n_max);

/// A_0 .. A_{n_max} in (Y, q): the t = 1 specialization of the above.
std::vector<ExactPolynomial> gf_coefficients_q(int n_max);

enum class GfMode { triple, pair };

/// Sum over S_n of Y^fix t^des q^maj (triple) or Y^fix q^maj (pair).
ExactPolynomial combinatorial_gf(int n, GfMode mode,
                                 const StatSet& stats = StatSet::standard());

/// Certifies that the polynomials a_q[n] satisfy the q-exponential
/// generating-function identity with denominator (q; q)_n, by exact
/// evaluation at integer points (q, Y) on a grid exceeding the degree
/// bounds of both sides after clearing denominators.
struct EvalCertificate {
    bool ok = true;
    int q_points = 0;
    int y_points = 0;
    std::string witness;  // set on failure, including pole violations
};

EvalCertificate certify_q_generating_function(int n_max,
                                              const std::vector<ExactPolynomial>& a_q);

Int factorial(int n);

} // namespace permstat
