#include <dyckchains/generating.hpp>

#include <dyckchains/errors.hpp>

namespace dyck::series {

namespace {

// Closed forms divide by x (or x^2) and lose that many coefficients.
constexpr int kGuard = 3;

Series one(int order) { return Series::constant(1, order); }
Series xpoly(std::initializer_list<mpq_class> c, int order) { return Series::polynomial(c, order); }

AuxRing ring_for(Expansion mode, int q_order, int y_order) {
    return mode == Expansion::exact ? AuxRing::exact() : AuxRing::jets(q_order, y_order);
}

PathSystem solve_path_system(int order, const Series& yv, const Series& qv, AuxRing ring) {
    if (order < 1) {
        throw std::invalid_argument("path system needs order >= 1");
    }
    const Series x = Series::x(order);
    const Series x2 = x * x;
    const Series yq = yv * qv;
    const Series unit = one(order);

    auto step = [&](const PathSystem& s) {
        const Series k = unit + yv * s.G + yq * s.H;
        return PathSystem{unit + x * s.F * k, x * k, x2 * s.F * k * k};
    };

    PathSystem s{Series(order, ring), Series(order, ring), Series(order, ring)};
    // each round fixes at least one more coefficient (every right side carries a factor x)
    for (int round = 0; round <= order; ++round) {
        s = step(s);
    }
    const PathSystem again = step(s);
    if (!(again.F == s.F) || !(again.G == s.G) || !(again.H == s.H)) {
        throw NonConvergenceError("path system did not stabilise after order + 1 rounds");
    }
    return s;
}

void require_equal(const Series& a, const Series& b, const std::string& what) {
    if (!(a == b)) {
        for (int n = 0; n <= a.order(); ++n) {
            if (!(a[n] == b[n])) {
                throw RouteDisagreement(what + ": routes differ at x^" + std::to_string(n) + " (" +
                                        a[n].to_string("q", "y") + " vs " + b[n].to_string("q", "y") + ")");
            }
        }
        throw RouteDisagreement(what + ": routes differ");
    }
}

} // namespace

PathSystem solve_system_2(int order, AuxRing ring) {
    return solve_path_system(order, one(order), Series::q(order, ring), ring);
}

PathSystem solve_system_3(int order, AuxRing ring) {
    return solve_path_system(order, Series::y(order, ring), Series::q(order, ring), ring);
}

Series closed_form_F2(int order, AuxRing ring) {
    const int w = order + 1;
    const Series q = Series::q(w, ring);
    const Series x = Series::x(w);
    const Series x2 = x * x;
    const Series radicand = one(w) - mpq_class(4) * x + mpq_class(4) * x2 - mpq_class(4) * q * x2;
    const Series num = one(w) - mpq_class(2) * (one(w) - q) * x - series_sqrt(radicand);
    return divide_by_q(series_shift_div_x(num) * mpq_class(1, 2));
}

Series closed_form_F3(int order, AuxRing ring) {
    const int w = order + 1;
    const Series q = Series::q(w, ring);
    const Series y = Series::y(w, ring);
    const Series x = Series::x(w);
    const Series yq = y * q;
    const Series radicand = (one(w) + mpq_class(2) * y + y * y - mpq_class(4) * yq) * x * x -
                            mpq_class(2) * (one(w) + y) * x + one(w);
    const Series num = one(w) - (one(w) + y - mpq_class(2) * yq) * x - series_sqrt(radicand);
    return divide_by_y(divide_by_q(series_shift_div_x(num) * mpq_class(1, 2)));
}

Series series_V(int order, AuxRing ring) {
    if (order < 1) {
        throw std::invalid_argument("series_V needs order >= 1");
    }
    const int w = order + 1;
    const Series q = Series::q(w, ring);
    const Series x = Series::x(w);
    const Series omq = one(w) - q;
    const Series radicand = one(w) - mpq_class(2) * (one(w) + q) * x + omq * omq * x * x;
    const Series num = one(w) - omq * x - series_sqrt(radicand);
    return divide_by_q(series_shift_div_x(num) * mpq_class(1, 2));
}

PolynomialEquation equation_A(int order, AuxRing ring) {
    const Series q = Series::q(order, ring);
    const Series x = Series::x(order);
    const Series x2 = x * x;
    const Series omq = one(order) - q;
    // x(q + (1-q)x) A^2 - (1 + (1-q)(x-2)x) A + 1 - (1-q)x = 0
    return {{one(order) - omq * x, -(one(order) + omq * (x2 - mpq_class(2) * x)), q * x + omq * x2}};
}

PolynomialEquation equation_B(int order, AuxRing ring) {
    const Series q = Series::q(order, ring);
    const Series x = Series::x(order);
    const Series omq = one(order) - q;
    // x B^2 + ((1-q)(x-1)x - 1) B + (1-q)x + 1 = 0
    return {{omq * x + one(order), omq * (x * x - x) - one(order), x}};
}

PolynomialEquation equation_C(int order, AuxRing ring) {
    const Series q = Series::q(order, ring);
    const Series x = Series::x(order);
    const Series omq = one(order) - q;
    const Series k = mpq_class(3) * omq * x - one(order);
    // q x C^3 + (3(1-q)x - 1) C^2 - (3(1-q)x - 1) C + (1-q) x = 0
    return {{omq * x, -k, k, q * x}};
}

Series solve_A(int order, AuxRing ring) { return solve_polynomial(equation_A(order, ring), 1); }
Series solve_B(int order, AuxRing ring) { return solve_polynomial(equation_B(order, ring), 1); }
Series solve_C(int order, AuxRing ring) { return solve_polynomial(equation_C(order, ring), 1); }

namespace closed_form {

Series sqrt_1_minus_4x(int order) { return series_sqrt(xpoly({1, -4}, order)); }

Series catalan(int order) {
    const int w = order + 1;
    return series_div_laurent(one(w) - sqrt_1_minus_4x(w), xpoly({0, 2}, w)).truncated(order);
}

Series dA(int order) {
    const int w = order + kGuard;
    const Series s = sqrt_1_minus_4x(w);
    const Series num = xpoly({1, -5, 5}, w) - xpoly({1, -3, 1}, w) * s;
    return series_div_laurent(num, xpoly({0, 2}, w) * s).truncated(order);
}

Series dB(int order) {
    const Series s = sqrt_1_minus_4x(order);
    const Series num = xpoly({1, -3}, order) - xpoly({1, -1}, order) * s;
    return num / (mpq_class(2) * s);
}

Series dC(int order) {
    const int w = order + kGuard;
    const Series s = sqrt_1_minus_4x(w);
    const Series num = xpoly({-1, 6, -9, 2}, w) + xpoly({1, -4, 3}, w) * s;
    const Series den = Series::x(w) * (xpoly({1, -4}, w) - s);
    return series_div_laurent(num, den).truncated(order);
}

Series dC_implicit(int order) {
    const Series c = catalan(order);
    const Series x = Series::x(order);
    const Series c2 = c * c;
    const Series num = x * c2 * c - mpq_class(3) * x * c2 + mpq_class(3) * x * c - x;
    const Series den = mpq_class(3) * x * c2 - mpq_class(2) * c + one(order);
    return -(num / den);
}

Series mixed_F(int order) {
    const int w = order + kGuard;
    const Series s = sqrt_1_minus_4x(w);
    const Series num = xpoly({-2, 15, -30, 10}, w) + xpoly({2, -11, 12}, w) * s;
    return series_div_laurent(num, xpoly({0, 2, -8}, w) * s).truncated(order);
}

Series V_third(int order) {
    const int w = order + kGuard;
    const Series s = sqrt_1_minus_4x(w);
    const Series num = mpq_class(3) * (xpoly({1, -11, 40, -50, 10}, w) - xpoly({1, -9, 24, -16}, w) * s);
    const Series one_m4x = xpoly({1, -4}, w);
    return series_div_laurent(num, Series::x(w) * one_m4x * one_m4x * s).truncated(order);
}

Series SC2(int order) {
    const Series s = sqrt_1_minus_4x(order);
    const Series one_m4x = xpoly({1, -4}, order);
    return (xpoly({1, -6, 6}, order) - one_m4x * s) / -(one_m4x * s);
}

Series P(int order) { return xpoly({1, -13, 59, -100, 16, 64}, order); }
Series Q(int order) { return xpoly({1, -11, 39, -40, -22}, order); }

Series SC3(int order) {
    const int w = order + kGuard;
    const Series s = sqrt_1_minus_4x(w);
    const Series one_m4x = xpoly({1, -4}, w);
    const Series den = Series::x(w) * series_pow(one_m4x, 3);
    return series_div_laurent(P(w) - Q(w) * s, den).truncated(order);
}

} // namespace closed_form

MarkedDerivatives derivative_A_B_C_at_1(int order, Expansion mode) {
    const AuxRing ring = ring_for(mode, 1, 0);
    MarkedDerivatives d{derivative_at_one(solve_A(order, ring), 1), derivative_at_one(solve_B(order, ring), 1),
                        derivative_at_one(solve_C(order, ring), 1)};
    require_equal(d.dA, closed_form::dA(order), "dA/dq");
    require_equal(d.dB, closed_form::dB(order), "dB/dq");
    require_equal(d.dC, closed_form::dC(order), "dC/dq");
    return d;
}

Series sc2_assembly(int order, Expansion mode) {
    const Series f = solve_system_2(order, ring_for(mode, 1, 0)).F;
    const Series v = series_V(order, ring_for(mode, 2, 0));
    return mpq_class(2) * derivative_at_one(f, 1) + derivative_at_one(v, 2);
}

Series sc3_assembly(int order, Expansion mode) {
    const AuxRing ring = ring_for(mode, 1, 0);
    const Series da = derivative_at_one(solve_A(order, ring), 1);
    const Series db = derivative_at_one(solve_B(order, ring), 1);
    const Series dc = derivative_at_one(solve_C(order, ring), 1);
    const Series v3 = derivative_at_one(series_V(order, ring_for(mode, 3, 0)), 3);
    const Series f = solve_system_3(order, ring_for(mode, 1, 1)).F;
    const Series mixed = derivative_at_one(f, 1, 1) - derivative_at_one(f, 1, 0);
    return mpq_class(2) * (da + db + dc) + v3 + mpq_class(6) * mixed;
}

Series series_SC2(int order) {
    Series assembled = sc2_assembly(order);
    require_equal(assembled, closed_form::SC2(order), "SC2");
    return assembled;
}

Series series_SC3(int order) {
    Series assembled = sc3_assembly(order);
    require_equal(assembled, closed_form::SC3(order), "SC3");
    return assembled;
}

} // namespace dyck::series
