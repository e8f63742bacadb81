#include <dyckchains/indices.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

#include <dyckchains/errors.hpp>

namespace dyck {

namespace {

mpz_class exact_quotient(const mpz_class& num, const mpz_class& den, const char* what) {
    mpz_class q;
    mpz_class r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) {
        throw AlgebraError(std::string(what) + ": inexact division " + num.get_str() + " / " + den.get_str());
    }
    return q;
}

} // namespace

mpz_class catalan(unsigned long n) { return binomial(2 * n, n) / (n + 1); }

mpz_class binomial(unsigned long a, unsigned long b) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), a, b);
    return r;
}

mpz_class falling_factorial(unsigned long a, unsigned long b) {
    if (b > a) {
        return 0;
    }
    mpz_class r = 1;
    for (unsigned long k = 0; k < b; ++k) {
        r *= a - k;
    }
    return r;
}

mpz_class sc2_closed(unsigned long n) {
    if (n == 0) {
        return 0;
    }
    const mpz_class m(n);
    return exact_quotient(binomial(2 * n, n) * (m - 1) * (m - 2), 2 * (2 * m - 1), "sc2_closed");
}

mpz_class sc3_closed(unsigned long n) {
    if (n < 2) {
        return 0;
    }
    const mpz_class m(n);
    return exact_quotient(binomial(2 * n, n) * (m * m * m - 7 * m + 2) * (m - 2), 4 * (m + 1) * (2 * m - 1),
                          "sc3_closed");
}

mpz_class sc_h_boolean(unsigned long n, unsigned long h) {
    if (h > n) {
        return 0;
    }
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, n - h);
    return falling_factorial(n, h) * pow2;
}

mpq_class hasse_index(const mpz_class& chain_count, const mpz_class& size) {
    if (size < 1) {
        throw std::invalid_argument("hasse_index: poset size must be positive");
    }
    mpq_class r(chain_count, size);
    r.canonicalize();
    return r;
}

mpq_class boolean_index(unsigned long n, unsigned long h) {
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, h);
    mpq_class r(falling_factorial(n, h), pow2);
    r.canonicalize();
    return r;
}

mpq_class evaluate_polynomial(const std::vector<mpq_class>& coeffs, const mpq_class& at) {
    mpq_class acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * at + *it;
    }
    return acc;
}

double darboux_estimate(const DarbouxInput& input, unsigned long n) {
    if (sgn(input.xi) == 0) {
        throw std::invalid_argument("darboux: singularity must be nonzero");
    }
    const double alpha = input.alpha.get_d();
    if (alpha <= 0 && std::floor(alpha) == alpha) {
        throw std::invalid_argument("darboux: alpha must not be a nonpositive integer");
    }
    const double m = static_cast<double>(n) + input.index_shift;
    const double psi_xi = evaluate_polynomial(input.psi, input.xi).get_d();
    const double xi = input.xi.get_d();
    // work in logs: xi^-m overflows a double long before the tested range ends
    const double log_mag = std::log(std::fabs(psi_xi)) - m * std::log(std::fabs(xi)) + (alpha - 1) * std::log(m) -
                           std::lgamma(alpha);
    double sign = input.sign * (psi_xi < 0 ? -1.0 : 1.0) * std::copysign(1.0, std::tgamma(alpha));
    if (xi < 0 && static_cast<long long>(m) % 2 != 0) {
        sign = -sign;
    }
    return sign * std::exp(log_mag);
}

DarbouxInput sc3_darboux_input() {
    return DarbouxInput{{1, -11, 39, -40, -22}, mpq_class(1, 4), mpq_class(5, 2), -1, 1};
}

double sc3_leading_term(unsigned long n) {
    const double nd = static_cast<double>(n);
    return std::exp((2 * nd - 3) * std::log(2.0) + 1.5 * std::log(nd) - 0.5 * std::log(M_PI));
}

std::vector<AsymptoticRow> asymptotic_report(int h, unsigned long n_min, unsigned long n_max) {
    if (h != 2 && h != 3) {
        throw std::invalid_argument("asymptotic_report: h must be 2 or 3");
    }
    std::vector<AsymptoticRow> rows;
    for (unsigned long n = n_min; n <= n_max; ++n) {
        AsymptoticRow row;
        row.n = n;
        row.chains = h == 2 ? sc2_closed(n) : sc3_closed(n);
        row.size = catalan(n);
        row.index = hasse_index(row.chains, row.size);
        mpz_class num;
        mpz_ui_pow_ui(num.get_mpz_t(), n, static_cast<unsigned long>(h));
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(h));
        row.target = mpq_class(num, den);
        row.target.canonicalize();
        row.ratio = sgn(row.target) == 0 ? mpq_class(0) : mpq_class(row.index / row.target);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace dyck
