#include "permstat/qseries.hpp"

#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace permstat {

ExactPolynomial::ExactPolynomial(Int c) {
    if (c != 0) terms_[Monomial{}] = std::move(c);
}

ExactPolynomial ExactPolynomial::variable_y(int power) {
    return term(1, Monomial{power, 0, 0});
}
ExactPolynomial ExactPolynomial::variable_t(int power) {
    return term(1, Monomial{0, power, 0});
}
ExactPolynomial ExactPolynomial::variable_q(int power) {
    return term(1, Monomial{0, 0, power});
}

ExactPolynomial ExactPolynomial::term(Int coeff, Monomial m) {
    if (m.y < 0 || m.t < 0 || m.q < 0)
        throw PreconditionError("monomial exponents must be non-negative");
    ExactPolynomial p;
    if (coeff != 0) p.terms_[m] = std::move(coeff);
    return p;
}

Int ExactPolynomial::coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

ExactPolynomial& ExactPolynomial::operator+=(const ExactPolynomial& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

ExactPolynomial& ExactPolynomial::operator-=(const ExactPolynomial& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

ExactPolynomial ExactPolynomial::operator-() const {
    ExactPolynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
    ExactPolynomial out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            const Monomial m{ma.y + mb.y, ma.t + mb.t, ma.q + mb.q};
            auto it = out.terms_.find(m);
            if (it == out.terms_.end()) {
                out.terms_.emplace(m, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

int ExactPolynomial::degree_t() const noexcept {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.t);
    return d;
}

ExactPolynomial ExactPolynomial::t_coefficient(int k) const {
    ExactPolynomial out;
    for (const auto& [m, c] : terms_)
        if (m.t == k) out.terms_.emplace(Monomial{m.y, 0, m.q}, c);
    return out;
}

ExactPolynomial ExactPolynomial::truncate_t(int max_t) const {
    ExactPolynomial out;
    for (const auto& [m, c] : terms_)
        if (m.t <= max_t) out.terms_.emplace(m, c);
    return out;
}

ExactPolynomial ExactPolynomial::substitute_t_one() const {
    ExactPolynomial out;
    for (const auto& [m, c] : terms_)
        out += term(c, Monomial{m.y, 0, m.q});
    return out;
}

namespace {

Rational rat_pow(const Rational& base, int e) {
    Rational out(1);
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

} // namespace

Rational ExactPolynomial::evaluate(const Rational& y, const Rational& t,
                                   const Rational& q) const {
    Rational out(0);
    for (const auto& [m, c] : terms_)
        out += Rational(c) * rat_pow(y, m.y) * rat_pow(t, m.t) * rat_pow(q, m.q);
    return out;
}

std::string ExactPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        const Int mag = negative ? Int(-c) : c;
        std::string mono;
        auto put = [&mono](const char* name, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += '*';
            mono += name;
            if (e > 1) mono += '^' + std::to_string(e);
        };
        put("Y", m.y);
        put("t", m.t);
        put("q", m.q);
        std::string body;
        if (mono.empty()) {
            body = mag.str();
        } else if (mag == 1) {
            body = mono;
        } else {
            body = mag.str() + "*" + mono;
        }
        if (first) {
            out = negative ? "-" + body : body;
            first = false;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

PolySeries series_u(int order) {
    PolySeries s(order);
    if (order >= 1) s.coeff(1) = ExactPolynomial(1);
    return s;
}

PolySeries series_uy(int order) {
    PolySeries s(order);
    if (order >= 1) s.coeff(1) = ExactPolynomial::variable_y();
    return s;
}

PolySeries q_pochhammer(const PolySeries& a, int k) {
    if (k < 0) throw PreconditionError("q_pochhammer: negative subscript");
    PolySeries out = PolySeries::one(a.order());
    for (int i = 0; i < k; ++i) {
        PolySeries factor = PolySeries::one(a.order());
        const ExactPolynomial qi = ExactPolynomial::variable_q(i);
        for (int j = 0; j <= a.order(); ++j) factor.coeff(j) -= qi * a.coeff(j);
        out *= factor;
    }
    return out;
}

std::vector<ExactPolynomial> gf_coefficients_t(int n_max) {
    if (n_max < 0) throw PreconditionError("gf_coefficients_t: n_max must be >= 0");
    const int t_cap = n_max + 1;
    // c[s][n] = [u^n] of the s-th summand, a polynomial in (Y, q).
    std::vector<std::vector<ExactPolynomial>> c(
        static_cast<size_t>(t_cap) + 1,
        std::vector<ExactPolynomial>(static_cast<size_t>(n_max) + 1));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int s = 0; s <= t_cap; ++s) {
        ExactPolynomial geom_sum;  // 1 + q + ... + q^s
        for (int i = 0; i <= s; ++i) geom_sum += ExactPolynomial::variable_q(i);
        PolySeries lin = PolySeries::one(n_max);
        if (n_max >= 1) lin.coeff(1) -= geom_sum;
        const PolySeries g = lin.reciprocal() * q_pochhammer(series_u(n_max), s + 1) *
                             q_pochhammer(series_uy(n_max), s + 1).reciprocal();
        for (int n = 0; n <= n_max; ++n) c[static_cast<size_t>(s)][static_cast<size_t>(n)] = g.coeff(n);
    }
    std::vector<ExactPolynomial> out;
    out.reserve(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        ExactPolynomial sum_s;
        for (int s = 0; s <= t_cap; ++s)
            sum_s += ExactPolynomial::variable_t(s) * c[static_cast<size_t>(s)][static_cast<size_t>(n)];
        ExactPolynomial denominator(1);  // (t; q)_{n+1}
        for (int i = 0; i <= n; ++i)
            denominator *= ExactPolynomial(1) -
                           ExactPolynomial::variable_t() * ExactPolynomial::variable_q(i);
        // Coefficients of t^j for j <= t_cap are unaffected by cutting the
        // s-sum at t_cap; higher ones are garbage and dropped.
        const ExactPolynomial a = (denominator * sum_s).truncate_t(t_cap);
        for (int j = std::max(n, 1); j <= t_cap; ++j)
            if (!a.t_coefficient(j).is_zero())
                throw std::logic_error(
                    "gf_coefficients_t: t^" + std::to_string(j) +
                    " fails to vanish at n=" + std::to_string(n));
        out.push_back(a);
    }
    return out;
}

std::vector<ExactPolynomial> gf_coefficients_q(int n_max) {
    std::vector<ExactPolynomial> out = gf_coefficients_t(n_max);
    for (auto& a : out) a = a.substitute_t_one();
    return out;
}

ExactPolynomial combinatorial_gf(int n, GfMode mode, const StatSet& stats) {
    ExactPolynomial out;
    for_each_permutation(n, [&](const Permutation& p) {
        const int d = mode == GfMode::triple ? des(p) : 0;
        out += ExactPolynomial::term(1, Monomial{fix(p), d, stats.maj(p)});
    });
    return out;
}

EvalCertificate certify_q_generating_function(int n_max,
                                              const std::vector<ExactPolynomial>& a_q) {
    EvalCertificate cert;
    if (static_cast<int>(a_q.size()) < n_max + 1)
        throw PreconditionError("certify_q_generating_function: too few polynomials");
    // Degree bookkeeping: after clearing denominators, the u^n coefficient
    // difference between the two sides is a polynomial in (q, Y) whose
    // q-degree is at most den_deg + tri(n_max) and whose Y-degree is at
    // most n_max.  A vanishing check on a grid strictly larger than those
    // bounds in each variable certifies the identity.
    const auto tri = [](int k) { return k * (k + 1) / 2; };
    int sum_tri = 0;
    for (int j = 1; j <= n_max; ++j) sum_tri += tri(j);
    const int den_deg = tri(n_max) + n_max + sum_tri + tri(n_max);
    cert.q_points = den_deg + tri(n_max) + 1;
    cert.y_points = n_max + 1;

    for (int qi = 0; qi < cert.q_points; ++qi) {
        const Rational q0(qi + 2);  // integers >= 2: no pole can occur
        std::vector<Rational> qq(static_cast<size_t>(n_max) + 1, Rational(1));
        for (int k = 1; k <= n_max; ++k)
            qq[static_cast<size_t>(k)] =
                qq[static_cast<size_t>(k) - 1] * (Rational(1) - rat_pow(q0, k));
        if (q0 == 1) {
            cert.ok = false;
            cert.witness = "pole: q = 1";
            return cert;
        }
        for (int k = 0; k <= n_max; ++k) {
            if (qq[static_cast<size_t>(k)] == 0) {
                cert.ok = false;
                cert.witness = "pole: (q;q)_" + std::to_string(k) + " = 0 at q = " + q0.str();
                return cert;
            }
        }
        RationalSeries lin = RationalSeries::one(n_max);
        if (n_max >= 1) lin.coeff(1) = Rational(-1) / (Rational(1) - q0);
        const RationalSeries lin_inv = lin.reciprocal();
        RationalSeries eq_u(n_max);  // q-exponential of u
        for (int k = 0; k <= n_max; ++k) eq_u.coeff(k) = Rational(1) / qq[static_cast<size_t>(k)];
        const RationalSeries eq_u_inv = eq_u.reciprocal();  // equals (u;q)_infinity

        for (int yi = 0; yi < cert.y_points; ++yi) {
            const Rational y0(yi);
            RationalSeries eq_uy(n_max);
            for (int k = 0; k <= n_max; ++k)
                eq_uy.coeff(k) = rat_pow(y0, k) / qq[static_cast<size_t>(k)];
            const RationalSeries rhs = lin_inv * eq_u_inv * eq_uy;
            for (int n = 0; n <= n_max; ++n) {
                const Rational lhs =
                    a_q[static_cast<size_t>(n)].evaluate(y0, Rational(1), q0) /
                    qq[static_cast<size_t>(n)];
                if (lhs != rhs.coeff(n)) {
                    cert.ok = false;
                    cert.witness = "mismatch at n=" + std::to_string(n) +
                                   " q=" + q0.str() + " Y=" + y0.str();
                    return cert;
                }
            }
        }
    }
    return cert;
}

Int factorial(int n) {
    Int out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

} // namespace permstat
