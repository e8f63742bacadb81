#ifndef DYCKCHAINS_POLY_HPP
#define DYCKCHAINS_POLY_HPP

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace dyck::series {

inline constexpr int kUnbounded = -1;

// Dense polynomial in two auxiliary variables (s, t) with exact rational
// coefficients. Storage is c_[i * nt_ + j] for the coefficient of s^i t^j, trimmed
// so the highest stored row and column are nonzero.
class Poly {
public:
    Poly() = default;
    Poly(const mpq_class& c); // NOLINT: constants convert implicitly
    Poly(long c) : Poly(mpq_class(c)) {} // NOLINT

    static Poly monomial(const mpq_class& c, int s_deg, int t_deg);

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return ns_ <= 1 && nt_ <= 1; }
    int deg_s() const noexcept { return ns_ - 1; }
    int deg_t() const noexcept { return nt_ - 1; }
    // total degree bound used by the x-degree invariant: max over terms of i + j
    int total_degree() const;

    const mpq_class& coeff(int i, int j) const;
    mpq_class constant_term() const { return coeff(0, 0); }

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const mpq_class& k);
    Poly operator-() const;

    // *this += a * b, dropping terms beyond the caps (kUnbounded = keep all)
    void add_product(const Poly& a, const Poly& b, int s_cap, int t_cap);
    Poly truncated(int s_cap, int t_cap) const;

    // sum c_ij (i)_a (j)_b: the (a, b)-th partial derivative at s = t = 1
    mpq_class derivative_at_one(int a, int b) const;
    mpq_class eval(const mpq_class& s, const mpq_class& t) const;

    // Exact division by s (or t); nullopt when some term has s-degree (t-degree) 0.
    std::optional<Poly> divided_by_s() const;
    std::optional<Poly> divided_by_t() const;

    // Inverse in the ring truncated at the caps. Constants invert anywhere;
    // otherwise both caps present in the polynomial must be bounded.
    std::optional<Poly> inverse(int s_cap, int t_cap) const;

    // e.g. "3/2*q^2*y - 1"; zero prints as "0"
    std::string to_string(const std::string& s_name, const std::string& t_name) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.ns_ == b.ns_ && a.nt_ == b.nt_ && a.c_ == b.c_; }

private:
    int ns_ = 0;
    int nt_ = 0;
    std::vector<mpq_class> c_;

    mpq_class& at(int i, int j) { return c_[static_cast<std::size_t>(i * nt_ + j)]; }
    void resize(int ns, int nt);
    void trim();
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(Poly a, const mpq_class& k);

} // namespace dyck::series

#endif
