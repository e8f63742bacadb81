#ifndef DYCKCHAINS_GENERATING_HPP
#define DYCKCHAINS_GENERATING_HPP

#include <dyckchains/series.hpp>

// Generating series of Dyck paths by semilength (x) with auxiliary variables marking
// factors (q, y), and the saturated-chain series built from their derivatives at 1.
namespace dyck::series {

// Auxiliary-variable representation for the named series: `exact` keeps full
// polynomials in q and y, `jets` keeps only what the derivatives at q = y = 1 need.
enum class Expansion { exact, jets };

// Paths starting with a peak (G) or with uu (H), and all paths (F), from the first
// return decomposition; q marks duu, y marks du. Without y this is the two-variable
// system.
struct PathSystem {
    Series F;
    Series G;
    Series H;
};

// Fixed point from F = G = H = 0; order + 1 rounds, then a stability check.
PathSystem solve_system_2(int order, AuxRing ring = {});
PathSystem solve_system_3(int order, AuxRing ring = {});

// The closed forms of F (q marks duu; y marks du in the three-variable version).
Series closed_form_F2(int order, AuxRing ring = {});
Series closed_form_F3(int order, AuxRing ring = {});

// Dyck paths with q marking valleys, from its closed form.
Series series_V(int order, AuxRing ring = {});

// Functional equations for paths with q marking dduu (A), dudu (B), duuu (C).
PolynomialEquation equation_A(int order, AuxRing ring = {});
PolynomialEquation equation_B(int order, AuxRing ring = {});
PolynomialEquation equation_C(int order, AuxRing ring = {});
Series solve_A(int order, AuxRing ring = {});
Series solve_B(int order, AuxRing ring = {});
Series solve_C(int order, AuxRing ring = {});

// Closed forms at q = 1 (and y = 1), expanded as rational series in x.
namespace closed_form {

Series sqrt_1_minus_4x(int order);
Series catalan(int order);
Series dA(int order);
Series dB(int order);
Series dC(int order);
// dC/dq at q = 1 by implicit differentiation of C's cubic, with C = Catalan series.
Series dC_implicit(int order);
// [d^2F/dy dq - dF/dq] at y = q = 1
Series mixed_F(int order);
// [d^3V/dq^3] at q = 1
Series V_third(int order);
Series SC2(int order);
Series SC3(int order);
Series P(int order);
Series Q(int order);

} // namespace closed_form

struct MarkedDerivatives {
    Series dA;
    Series dB;
    Series dC;
};

// Each derivative by solving its functional equation and by its closed form.
// Throws RouteDisagreement on any mismatch.
MarkedDerivatives derivative_A_B_C_at_1(int order, Expansion mode = Expansion::jets);

// 2 [dF/dq] + [d^2V/dq^2] at q = 1, F from the fixed point of the path system.
Series sc2_assembly(int order, Expansion mode = Expansion::jets);
// 2 dA + 2 dB + 2 dC + [d^3V/dq^3] + 6 [d^2F/dy dq - dF/dq], all at 1.
Series sc3_assembly(int order, Expansion mode = Expansion::jets);

// Assembly checked against the closed form; throws RouteDisagreement on mismatch.
Series series_SC2(int order);
Series series_SC3(int order);

} // namespace dyck::series

#endif
