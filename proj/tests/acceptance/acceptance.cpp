// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <dyckchains/chain_formula.hpp>
#include <dyckchains/commands.hpp>
#include <dyckchains/generating.hpp>
#include <dyckchains/indices.hpp>
#include <dyckchains/lattice.hpp>
#include <dyckchains/shapes.hpp>

#include "oracles.hpp"

using namespace dyck;
using namespace dyck::series;

namespace {

constexpr double kSeqSeconds = 1.0;
constexpr double kH2Seconds = 60.0;
constexpr double kH3Seconds = 120.0;
constexpr double kOracleSeconds = 120.0;
constexpr double kBooleanSeconds = 10.0;
constexpr double kAsymptoticSeconds = 5.0;
constexpr double kIndexTolerance = 0.002;   // i_2(D_2000) / (n^2/4) within 0.2% of 1
constexpr double kDarbouxTolerance = 0.10;  // relative error at n = 50
constexpr int kSeriesOrder = 20;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds; // 0 = untimed
    std::function<Outcome()> body;
};

std::string str(const mpz_class& v) { return v.get_str(); }

Outcome sequences() {
    Outcome o;
    auto seq = [](const char* stat) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli({"seq", stat, "--n-max", "9"}, out, err);
        return std::pair{code, out.str()};
    };
    const auto [c2, s2] = seq("sc2");
    const auto [c3, s3] = seq("sc3");
    o.require(c2 == 0 && s2 == "0,0,0,4,30,168,840,3960,18018,80080\n", "sc2 printed " + s2);
    o.require(c3 == 0 && s3 == "0,0,0,2,38,322,2112,12210,65494,334334\n", "sc3 printed " + s3);
    return o;
}

Outcome four_routes(int h) {
    Outcome o;
    const Series s = h == 2 ? series_SC2(kSeriesOrder) : series_SC3(kSeriesOrder);
    const auto series_values = s.integers();
    const ChainFormula formula(h);
    for (int n = 0; n <= kSeriesOrder; ++n) {
        const auto un = static_cast<unsigned long>(n);
        const mpz_class closed = h == 2 ? sc2_closed(un) : sc3_closed(un);
        const mpz_class& ser = series_values[un];
        o.require(ser == closed, "n=" + std::to_string(n) + " series " + str(ser) + " closed " + str(closed));
        if (n <= 8) {
            const mpz_class brute = count_saturated_chains(n, h);
            const mpz_class form = formula.total(n);
            o.require(brute == closed && form == closed,
                      "n=" + std::to_string(n) + " brute " + str(brute) + " formula " + str(form));
        }
    }
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    const std::pair<int, int> cases[] = {{4, 7}, {5, 6}};
    for (const auto& [h, n_max] : cases) {
        const ChainFormula formula(h);
        for (int n = 0; n <= n_max; ++n) {
            const mpz_class brute = count_saturated_chains(n, h);
            const mpz_class form = formula.total(n);
            o.require(brute == form, "h=" + std::to_string(h) + " n=" + std::to_string(n) + " brute " + str(brute) +
                                         " formula " + str(form));
        }
    }
    return o;
}

Outcome series_identities() {
    Outcome o;
    const int N = kSeriesOrder;
    o.require(solve_system_2(N).F == closed_form_F2(N), "fixed-point F differs from closed form");
    o.require(derivative_at_one(series_V(N), 3) == closed_form::V_third(N), "third q-derivative of V differs");
    o.require(sc3_assembly(N, Expansion::exact) == closed_form::SC3(N), "five-term assembly differs from SC3");
    const Series p = closed_form::P(N);
    o.require(p == Series::polynomial({1, -13, 59, -100, 16, 64}, N), "P coefficients");
    o.require(p == series_pow(Series::polynomial({1, -4}, N), 3) * Series::polynomial({1, -1, -1}, N),
              "P is not (1-4x)^3 (1-x-x^2)");
    return o;
}

Outcome statistic_grounding() {
    Outcome o;
    const int N = 7;
    const std::pair<Series, const char*> marked[] = {
        {derivative_at_one(series_V(N), 1), "du"},
        {derivative_at_one(solve_system_2(N).F, 1), "duu"},
        {derivative_at_one(solve_A(N), 1), "dduu"},
        {derivative_at_one(solve_B(N), 1), "dudu"},
        {derivative_at_one(solve_C(N), 1), "duuu"},
    };
    for (const auto& [s, factor] : marked) {
        for (int n = 0; n <= N; ++n) {
            const mpz_class expected = oracle::factor_total(n, factor);
            o.require(s.rational(n) == expected, std::string(factor) + " at n=" + std::to_string(n) + ": series " +
                                                     s.rational(n).get_str() + " count " + str(expected));
        }
    }
    return o;
}

Outcome valley_relation() {
    Outcome o;
    for (int n = 2; n <= 9; ++n) {
        const mpz_class sc2 = count_saturated_chains(n, 2);
        const mpz_class vas = valley_abscissae_sum(n - 1);
        o.require(sc2 == 2 * vas, "n=" + std::to_string(n) + " sc2 " + str(sc2) + " valleys " + str(vas));
    }
    return o;
}

Outcome boolean_algebra() {
    Outcome o;
    for (int n = 0; n <= 6; ++n) {
        for (int h = 0; h <= 4; ++h) {
            const auto un = static_cast<unsigned long>(n);
            const auto uh = static_cast<unsigned long>(h);
            const mpz_class brute = oracle::boolean_chains(n, h);
            o.require(sc_h_boolean(un, uh) == brute, "sc_h(B_n) n=" + std::to_string(n) + " h=" + std::to_string(h));
            mpq_class expected(falling_factorial(un, uh), mpz_class(1) << h);
            expected.canonicalize();
            o.require(hasse_index(brute, mpz_class(1) << n) == expected && boolean_index(un, uh) == expected,
                      "i_h(B_n) n=" + std::to_string(n) + " h=" + std::to_string(h));
        }
    }
    return o;
}

Outcome hasse_indices() {
    Outcome o;
    o.require(hasse_index(count_saturated_chains(3, 2), catalan(3)) == mpq_class(4, 5), "i_2(D_3)");
    o.require(hasse_index(count_saturated_chains(3, 3), catalan(3)) == mpq_class(2, 5), "i_3(D_3)");
    for (unsigned long n = 1; n <= 12; ++n) {
        mpq_class expected(mpz_class(n - 1) * (n - 2) * (n + 1), mpz_class(2) * (2 * n - 1));
        expected.canonicalize();
        const int ni = static_cast<int>(n);
        const mpq_class idx = hasse_index(count_saturated_chains(ni, 2), catalan(n));
        o.require(idx == expected, "i_2(D_" + std::to_string(n) + ") = " + idx.get_str());
    }
    return o;
}

Outcome asymptotics() {
    Outcome o;
    const double ratio = asymptotic_report(2, 2000, 2000)[0].ratio.get_d();
    o.require(std::fabs(ratio - 1) < kIndexTolerance, "i_2 ratio at n=2000 is " + std::to_string(ratio));
    const auto input = sc3_darboux_input();
    double previous = INFINITY;
    std::ostringstream trace;
    for (unsigned long n : {20ul, 30ul, 40ul, 50ul}) {
        const double err = std::fabs(darboux_estimate(input, n) / sc3_closed(n).get_d() - 1);
        trace << " n=" << n << ":" << std::setprecision(4) << err;
        o.require(err < previous, "error not decreasing:" + trace.str());
        previous = err;
    }
    o.require(previous < kDarbouxTolerance, "relative error at n=50 is " + std::to_string(previous));
    const double simple = std::fabs(sc3_leading_term(50) / sc3_closed(50).get_d() - 1);
    o.require(simple < kDarbouxTolerance, "simplified leading term error " + std::to_string(simple));
    if (o.ok) {
        std::ostringstream d;
        d << "ratio(2000)=" << std::setprecision(6) << ratio << " darboux err" << trace.str();
        o.detail = d.str();
    }
    return o;
}

Outcome shape_layer() {
    Outcome o;
    const std::vector<std::vector<std::string>> expected = {{"1"}, {"1", "1"}, {"1", "1", "2", "2"}};
    for (int m = 1; m <= 3; ++m) {
        std::vector<std::string> counts;
        for (const auto& s : enumerate_skfs(m)) {
            counts.push_back(tableau_count(s).get_str());
        }
        std::sort(counts.begin(), counts.end());
        o.require(counts == expected[static_cast<std::size_t>(m - 1)], "area " + std::to_string(m));
    }
    return o;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "sequence reproduction", kSeqSeconds, sequences},
        {2, "four-route agreement h=2", kH2Seconds, [] { return four_routes(2); }},
        {3, "four-route agreement h=3", kH3Seconds, [] { return four_routes(3); }},
        {4, "oracle equivalence h=4,5", kOracleSeconds, oracle_equivalence},
        {5, "series identities", 0, series_identities},
        {6, "statistic grounding", 0, statistic_grounding},
        {7, "valley-abscissae relation", 0, valley_relation},
        {8, "Boolean algebra", kBooleanSeconds, boolean_algebra},
        {9, "Hasse index values", 0, hasse_indices},
        {10, "asymptotics", kAsymptoticSeconds, asymptotics},
        {11, "shape layer", 0, shape_layer},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && secs >= c.limit_seconds && o.ok) {
            o.ok = false;
            o.detail = "over time limit of " + std::to_string(c.limit_seconds) + " s";
        }
        failures += o.ok ? 0 : 1;
        std::cout << (o.ok ? "PASS" : "FAIL") << "  " << std::setw(2) << c.id << "  " << c.name << "  ("
                  << std::fixed << std::setprecision(3) << secs << " s)" << std::defaultfloat;
        if (!o.detail.empty()) {
            std::cout << "  " << o.detail;
        }
        std::cout << '\n';
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
              << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
