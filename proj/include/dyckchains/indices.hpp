#ifndef DYCKCHAINS_INDICES_HPP
#define DYCKCHAINS_INDICES_HPP

#include <vector>

#include <gmpxx.h>

namespace dyck {

mpz_class catalan(unsigned long n);
mpz_class binomial(unsigned long a, unsigned long b);
// a (a-1) ... (a-b+1); zero when b > a
mpz_class falling_factorial(unsigned long a, unsigned long b);

// Saturated chains of length 2 and 3 in D_n from their coefficient formulas.
// Below the formulas' ranges (n = 0 for sc2, n < 2 for sc3) the value is 0.
// Throws AlgebraError if a division leaves a remainder.
mpz_class sc2_closed(unsigned long n);
mpz_class sc3_closed(unsigned long n);

// Saturated chains of length h in the Boolean algebra of subsets of an n-set.
mpz_class sc_h_boolean(unsigned long n, unsigned long h);

// sc_h / |P| as a reduced fraction. Throws std::invalid_argument for size < 1.
mpq_class hasse_index(const mpz_class& chain_count, const mpz_class& size);
mpq_class boolean_index(unsigned long n, unsigned long h);

// Coefficient asymptotics for f(x) = sign * psi(x) (1 - x/xi)^(-alpha) with a
// polynomial psi, read at index n + index_shift:
//   [x^m] f ~ sign * psi(xi) / xi^m * m^(alpha - 1) / Gamma(alpha).
struct DarbouxInput {
    std::vector<mpq_class> psi; // polynomial coefficients, constant first
    mpq_class xi;
    mpq_class alpha;
    int sign = 1;
    int index_shift = 0;
};

mpq_class evaluate_polynomial(const std::vector<mpq_class>& coeffs, const mpq_class& at);
double darboux_estimate(const DarbouxInput& input, unsigned long n);

// sc_3(D_n) = -[x^(n+1)] Q(x) (1 - 4x)^(-5/2) for large n.
DarbouxInput sc3_darboux_input();
// Simplified leading term 2^(2n-3) n^(3/2) / sqrt(pi).
double sc3_leading_term(unsigned long n);

struct AsymptoticRow {
    unsigned long n;
    mpz_class chains;
    mpz_class size;
    mpq_class index;   // i_h(D_n)
    mpq_class target;  // n^h / 2^h
    mpq_class ratio;   // index / target
};

// i_h(D_n) against the Boolean target for h in {2, 3} and n in [n_min, n_max].
std::vector<AsymptoticRow> asymptotic_report(int h, unsigned long n_min, unsigned long n_max);

} // namespace dyck

#endif
