#ifndef DYCKCHAINS_SERIES_HPP
#define DYCKCHAINS_SERIES_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

#include <dyckchains/poly.hpp>

namespace dyck::series {

// How the auxiliary variables q, y are represented in coefficient polynomials.
//   monomial: s = q, t = y, no truncation unless caps are set.
//   at_one:   s = q - 1, t = y - 1 with bounded caps; keeps exactly the derivatives
//             at q = y = 1 up to the caps, which is all the chain series need.
enum class Basis { monomial, at_one };

struct AuxRing {
    Basis basis = Basis::monomial;
    int q_cap = kUnbounded;
    int y_cap = kUnbounded;

    static AuxRing exact() { return {}; }
    static AuxRing jets(int q_order, int y_order) { return {Basis::at_one, q_order, y_order}; }

    friend bool operator==(const AuxRing&, const AuxRing&) = default;
};

// Power series in x truncated after x^order; coefficient n is a polynomial in q, y.
// Binary operations require equal orders. A series whose coefficients are all
// constants (no q or y) combines with any ring.
class Series {
public:
    Series() = default;
    Series(int order, AuxRing ring = {});

    static Series constant(const mpq_class& c, int order, AuxRing ring = {});
    // c_0 + c_1 x + ... (rational coefficients)
    static Series polynomial(std::initializer_list<mpq_class> coeffs, int order);
    static Series from_coefficients(std::vector<Poly> coeffs, int order, AuxRing ring = {});
    static Series x(int order);
    // The auxiliary variable q (or y) as a series with only a constant term.
    static Series q(int order, AuxRing ring);
    static Series y(int order, AuxRing ring);

    int order() const noexcept { return order_; }
    const AuxRing& ring() const noexcept { return ring_; }
    bool has_aux() const;
    const Poly& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
    const std::vector<Poly>& coefficients() const noexcept { return coeffs_; }

    // Coefficient n as a rational; throws AlgebraError if it still involves q or y.
    mpq_class rational(int n) const;
    // Coefficients as integers; throws AlgebraError if any is not an integer constant.
    std::vector<mpz_class> integers() const;

    Series truncated(int order) const;
    // Checks that every coefficient of x^n has total q,y-degree <= n (monomial basis).
    bool aux_degree_bounded() const;

    Series& operator+=(const Series& other);
    Series& operator-=(const Series& other);
    Series& operator*=(const mpq_class& k);
    Series operator-() const;

    friend bool operator==(const Series& a, const Series& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

    // One "n: <coefficient>" line per degree.
    std::string dump() const;

private:
    int order_ = 0;
    AuxRing ring_;
    std::vector<Poly> coeffs_;

    friend Series series_mul(const Series& a, const Series& b);
    friend Series series_div(const Series& a, const Series& b);
};

Series series_add(const Series& a, const Series& b);
Series series_sub(const Series& a, const Series& b);
Series series_mul(const Series& a, const Series& b);
// a / b; b's constant coefficient must be invertible in the coefficient ring.
Series series_div(const Series& a, const Series& b);
// a / x; throws AlgebraError unless a has zero constant term. Order drops by one.
Series series_shift_div_x(const Series& a);
Series series_mul_x(const Series& a);
// Square root with constant term 1, by Newton iteration with doubling precision.
Series series_sqrt(const Series& a);
Series series_pow(const Series& a, int e);

// Smallest n with a nonzero coefficient, or order + 1 for the zero series.
int valuation(const Series& a);
// a / b for b of positive valuation v: both are divided by x^v first. The result
// has order a.order() - v. Throws AlgebraError when a has smaller valuation.
Series series_div_laurent(const Series& a, const Series& b);

// Divide by q (resp. y). Exact with a divisibility check in the monomial basis;
// multiplication by the truncated inverse of 1 + s in the at_one basis.
Series divide_by_q(const Series& a);
Series divide_by_y(const Series& a);

// d^a/dq^a d^b/dy^b evaluated at q = y = 1, as a series with rational coefficients.
Series derivative_at_one(const Series& a, int q_order, int y_order = 0);

inline Series operator+(const Series& a, const Series& b) { return series_add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return series_sub(a, b); }
inline Series operator*(const Series& a, const Series& b) { return series_mul(a, b); }
inline Series operator/(const Series& a, const Series& b) { return series_div(a, b); }
inline Series operator*(Series a, const mpq_class& k) { return a *= k; }
inline Series operator*(const mpq_class& k, Series a) { return a *= k; }

// sum_i coefficients[i] * U^i = 0 in the unknown series U.
struct PolynomialEquation {
    std::vector<Series> coefficients;

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    Series evaluate(const Series& u) const;
    Series derivative(const Series& u) const;
};

// The unique solution with constant term `seed`, by Newton iteration. Throws
// AlgebraError if the seed is not a simple root at order 0 and NonConvergenceError
// if the residual does not vanish.
Series solve_polynomial(const PolynomialEquation& eq, const mpq_class& seed);

} // namespace dyck::series

#endif
