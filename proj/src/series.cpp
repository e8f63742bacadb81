#include <dyckchains/series.hpp>

#include <sstream>
#include <stdexcept>

#include <dyckchains/errors.hpp>

namespace dyck::series {

namespace {

AuxRing merged_ring(const Series& a, const Series& b) {
    const bool aa = a.has_aux();
    const bool ba = b.has_aux();
    if (aa && ba) {
        if (!(a.ring() == b.ring())) {
            throw std::invalid_argument("series over different auxiliary rings");
        }
        return a.ring();
    }
    if (aa) {
        return a.ring();
    }
    if (ba) {
        return b.ring();
    }
    return a.ring() == AuxRing{} ? b.ring() : a.ring();
}

void require_same_order(const Series& a, const Series& b, const char* op) {
    if (a.order() != b.order()) {
        throw std::invalid_argument(std::string(op) + ": series orders differ (" + std::to_string(a.order()) +
                                    " vs " + std::to_string(b.order()) + ")");
    }
}

mpq_class factorial(int k) {
    mpq_class f = 1;
    for (int i = 2; i <= k; ++i) {
        f *= i;
    }
    return f;
}

} // namespace

Series::Series(int order, AuxRing ring) : order_(order), ring_(ring), coeffs_(static_cast<std::size_t>(order + 1)) {
    if (order < 0) {
        throw std::invalid_argument("series order must be nonnegative");
    }
}

Series Series::constant(const mpq_class& c, int order, AuxRing ring) {
    Series s(order, ring);
    s.coeffs_[0] = Poly(c);
    return s;
}

Series Series::polynomial(std::initializer_list<mpq_class> coeffs, int order) {
    Series s(order);
    int n = 0;
    for (const auto& c : coeffs) {
        if (n > order) {
            break;
        }
        s.coeffs_[static_cast<std::size_t>(n++)] = Poly(c);
    }
    return s;
}

Series Series::from_coefficients(std::vector<Poly> coeffs, int order, AuxRing ring) {
    Series s(order, ring);
    for (std::size_t n = 0; n < coeffs.size() && n <= static_cast<std::size_t>(order); ++n) {
        s.coeffs_[n] = std::move(coeffs[n]).truncated(ring.q_cap, ring.y_cap);
    }
    return s;
}

Series Series::x(int order) {
    Series s(order);
    if (order >= 1) {
        s.coeffs_[1] = Poly(1);
    }
    return s;
}

Series Series::q(int order, AuxRing ring) {
    Series s(order, ring);
    Poly v = Poly::monomial(1, 1, 0);
    if (ring.basis == Basis::at_one) {
        v += Poly(1);
    }
    s.coeffs_[0] = v.truncated(ring.q_cap, ring.y_cap);
    return s;
}

Series Series::y(int order, AuxRing ring) {
    Series s(order, ring);
    Poly v = Poly::monomial(1, 0, 1);
    if (ring.basis == Basis::at_one) {
        v += Poly(1);
    }
    s.coeffs_[0] = v.truncated(ring.q_cap, ring.y_cap);
    return s;
}

bool Series::has_aux() const {
    for (const auto& c : coeffs_) {
        if (!c.is_constant()) {
            return true;
        }
    }
    return false;
}

mpq_class Series::rational(int n) const {
    const Poly& c = coeffs_.at(static_cast<std::size_t>(n));
    if (!c.is_constant()) {
        throw AlgebraError("coefficient of x^" + std::to_string(n) + " is not a constant");
    }
    return c.constant_term();
}

std::vector<mpz_class> Series::integers() const {
    std::vector<mpz_class> out;
    for (int n = 0; n <= order_; ++n) {
        const mpq_class c = rational(n);
        if (c.get_den() != 1) {
            throw AlgebraError("coefficient of x^" + std::to_string(n) + " is not an integer: " + c.get_str());
        }
        out.push_back(c.get_num());
    }
    return out;
}

Series Series::truncated(int order) const {
    Series s(order, ring_);
    for (int n = 0; n <= std::min(order, order_); ++n) {
        s.coeffs_[static_cast<std::size_t>(n)] = coeffs_[static_cast<std::size_t>(n)];
    }
    return s;
}

bool Series::aux_degree_bounded() const {
    for (int n = 0; n <= order_; ++n) {
        if (coeffs_[static_cast<std::size_t>(n)].total_degree() > n) {
            return false;
        }
    }
    return true;
}

Series& Series::operator+=(const Series& other) {
    require_same_order(*this, other, "add");
    ring_ = merged_ring(*this, other);
    for (int n = 0; n <= order_; ++n) {
        coeffs_[static_cast<std::size_t>(n)] += other.coeffs_[static_cast<std::size_t>(n)];
    }
    return *this;
}

Series& Series::operator-=(const Series& other) {
    require_same_order(*this, other, "sub");
    ring_ = merged_ring(*this, other);
    for (int n = 0; n <= order_; ++n) {
        coeffs_[static_cast<std::size_t>(n)] -= other.coeffs_[static_cast<std::size_t>(n)];
    }
    return *this;
}

Series& Series::operator*=(const mpq_class& k) {
    for (auto& c : coeffs_) {
        c *= k;
    }
    return *this;
}

Series Series::operator-() const {
    Series s = *this;
    for (auto& c : s.coeffs_) {
        c = -c;
    }
    return s;
}

std::string Series::dump() const {
    const bool shifted = ring_.basis == Basis::at_one;
    const std::string qn = shifted ? "(q-1)" : "q";
    const std::string yn = shifted ? "(y-1)" : "y";
    std::ostringstream out;
    for (int n = 0; n <= order_; ++n) {
        out << n << ": " << coeffs_[static_cast<std::size_t>(n)].to_string(qn, yn) << '\n';
    }
    return out.str();
}

Series series_add(const Series& a, const Series& b) {
    Series s = a;
    s += b;
    return s;
}

Series series_sub(const Series& a, const Series& b) {
    Series s = a;
    s -= b;
    return s;
}

Series series_mul(const Series& a, const Series& b) {
    require_same_order(a, b, "mul");
    const AuxRing ring = merged_ring(a, b);
    Series out(a.order_, ring);
    for (int i = 0; i <= a.order_; ++i) {
        const Poly& ai = a.coeffs_[static_cast<std::size_t>(i)];
        if (ai.is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= a.order_; ++j) {
            out.coeffs_[static_cast<std::size_t>(i + j)].add_product(ai, b.coeffs_[static_cast<std::size_t>(j)],
                                                                     ring.q_cap, ring.y_cap);
        }
    }
    return out;
}

Series series_div(const Series& a, const Series& b) {
    require_same_order(a, b, "div");
    const AuxRing ring = merged_ring(a, b);
    const auto inv0 = b.coeffs_[0].inverse(ring.q_cap, ring.y_cap);
    if (!inv0) {
        throw AlgebraError("division by a series with non-invertible constant term");
    }
    Series out(a.order_, ring);
    for (int n = 0; n <= a.order_; ++n) {
        Poly acc = a.coeffs_[static_cast<std::size_t>(n)];
        for (int k = 1; k <= n; ++k) {
            acc.add_product(-b.coeffs_[static_cast<std::size_t>(k)], out.coeffs_[static_cast<std::size_t>(n - k)],
                            ring.q_cap, ring.y_cap);
        }
        Poly cn;
        cn.add_product(acc, *inv0, ring.q_cap, ring.y_cap);
        out.coeffs_[static_cast<std::size_t>(n)] = std::move(cn);
    }
    return out;
}

Series series_shift_div_x(const Series& a) {
    if (!a[0].is_zero()) {
        throw AlgebraError("shift_div_x: nonzero constant term " + a[0].to_string("q", "y"));
    }
    if (a.order() == 0) {
        throw std::invalid_argument("shift_div_x: order-0 series has no x^1 coefficient");
    }
    std::vector<Poly> coeffs(a.coefficients().begin() + 1, a.coefficients().end());
    return Series::from_coefficients(std::move(coeffs), a.order() - 1, a.ring());
}

Series series_mul_x(const Series& a) {
    std::vector<Poly> coeffs;
    coeffs.reserve(static_cast<std::size_t>(a.order() + 1));
    coeffs.emplace_back();
    for (int n = 0; n < a.order(); ++n) {
        coeffs.push_back(a[n]);
    }
    return Series::from_coefficients(std::move(coeffs), a.order(), a.ring());
}

Series series_sqrt(const Series& a) {
    if (!(a[0] == Poly(1))) {
        throw AlgebraError("sqrt: constant term must be 1");
    }
    const int order = a.order();
    const mpq_class half(1, 2);
    Series s = Series::constant(1, 0, a.ring());
    int prec = 1; // number of correct coefficients
    while (prec < order + 1) {
        prec = std::min(2 * prec, order + 1);
        const int w = prec - 1;
        const Series sw = s.truncated(w);
        s = (sw + a.truncated(w) / sw) * half;
    }
    return s.truncated(order);
}

Series series_pow(const Series& a, int e) {
    if (e < 0) {
        throw std::invalid_argument("series_pow: negative exponent");
    }
    Series result = Series::constant(1, a.order(), a.ring());
    for (int i = 0; i < e; ++i) {
        result = result * a;
    }
    return result;
}

int valuation(const Series& a) {
    for (int n = 0; n <= a.order(); ++n) {
        if (!a[n].is_zero()) {
            return n;
        }
    }
    return a.order() + 1;
}

Series series_div_laurent(const Series& a, const Series& b) {
    require_same_order(a, b, "div_laurent");
    const int v = valuation(b);
    if (v > b.order()) {
        throw AlgebraError("division by the zero series");
    }
    if (valuation(a) < v) {
        throw AlgebraError("quotient is not a power series: numerator valuation " + std::to_string(valuation(a)) +
                           " < denominator valuation " + std::to_string(v));
    }
    Series num = a;
    Series den = b;
    for (int k = 0; k < v; ++k) {
        num = series_shift_div_x(num);
        den = series_shift_div_x(den);
    }
    return num / den;
}

namespace {

Series divide_by_aux(const Series& a, bool by_q) {
    const AuxRing& ring = a.ring();
    std::vector<Poly> out;
    out.reserve(static_cast<std::size_t>(a.order() + 1));
    if (ring.basis == Basis::monomial) {
        for (int n = 0; n <= a.order(); ++n) {
            auto d = by_q ? a[n].divided_by_s() : a[n].divided_by_t();
            if (!d) {
                throw AlgebraError(std::string("coefficient of x^") + std::to_string(n) + " is not divisible by " +
                                   (by_q ? "q" : "y") + ": " + a[n].to_string("q", "y"));
            }
            out.push_back(std::move(*d));
        }
    } else {
        const Poly var = by_q ? Poly::monomial(1, 1, 0) + Poly(1) : Poly::monomial(1, 0, 1) + Poly(1);
        const auto inv = var.truncated(ring.q_cap, ring.y_cap).inverse(ring.q_cap, ring.y_cap);
        if (!inv) {
            throw AlgebraError("auxiliary variable not invertible in this ring");
        }
        for (int n = 0; n <= a.order(); ++n) {
            Poly p;
            p.add_product(a[n], *inv, ring.q_cap, ring.y_cap);
            out.push_back(std::move(p));
        }
    }
    return Series::from_coefficients(std::move(out), a.order(), ring);
}

} // namespace

Series divide_by_q(const Series& a) { return divide_by_aux(a, true); }
Series divide_by_y(const Series& a) { return divide_by_aux(a, false); }

Series derivative_at_one(const Series& a, int q_order, int y_order) {
    const AuxRing& ring = a.ring();
    std::vector<Poly> out;
    if (ring.basis == Basis::monomial) {
        for (int n = 0; n <= a.order(); ++n) {
            out.emplace_back(a[n].derivative_at_one(q_order, y_order));
        }
    } else {
        if ((ring.q_cap != kUnbounded && q_order > ring.q_cap) || (ring.y_cap != kUnbounded && y_order > ring.y_cap)) {
            throw std::invalid_argument("derivative order exceeds the ring's truncation");
        }
        const mpq_class scale = factorial(q_order) * factorial(y_order);
        for (int n = 0; n <= a.order(); ++n) {
            out.emplace_back(a[n].coeff(q_order, y_order) * scale);
        }
    }
    return Series::from_coefficients(std::move(out), a.order());
}

Series PolynomialEquation::evaluate(const Series& u) const {
    // Horner
    Series acc = coefficients.back().truncated(u.order());
    for (int i = degree() - 1; i >= 0; --i) {
        acc = acc * u + coefficients[static_cast<std::size_t>(i)].truncated(u.order());
    }
    return acc;
}

Series PolynomialEquation::derivative(const Series& u) const {
    Series acc = coefficients.back().truncated(u.order()) * mpq_class(degree());
    for (int i = degree() - 1; i >= 1; --i) {
        acc = acc * u + coefficients[static_cast<std::size_t>(i)].truncated(u.order()) * mpq_class(i);
    }
    return acc;
}

Series solve_polynomial(const PolynomialEquation& eq, const mpq_class& seed) {
    if (eq.degree() < 1) {
        throw std::invalid_argument("polynomial equation must have degree >= 1");
    }
    const int order = eq.coefficients.front().order();
    AuxRing ring = eq.coefficients.front().ring();
    for (const auto& c : eq.coefficients) {
        if (c.order() != order) {
            throw std::invalid_argument("equation coefficients have different orders");
        }
        if (c.has_aux()) {
            ring = c.ring();
        }
    }

    Series u = Series::constant(seed, 0, ring);
    if (!eq.evaluate(u)[0].is_zero()) {
        throw AlgebraError("seed " + seed.get_str() + " does not satisfy the equation at order 0");
    }
    if (!eq.derivative(u)[0].inverse(ring.q_cap, ring.y_cap)) {
        throw AlgebraError("seed " + seed.get_str() + " is not a simple root");
    }

    int prec = 1;
    while (prec < order + 1) {
        prec = std::min(2 * prec, order + 1);
        const Series uw = u.truncated(prec - 1);
        u = uw - eq.evaluate(uw) / eq.derivative(uw);
    }
    u = u.truncated(order);
    const Series residual = eq.evaluate(u);
    if (valuation(residual) <= order) {
        throw NonConvergenceError("Newton iteration left a nonzero residual at x^" +
                                  std::to_string(valuation(residual)));
    }
    return u;
}

} // namespace dyck::series
