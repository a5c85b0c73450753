#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "zetacode/poly.hpp"
#include "zetacode/quadring.hpp"

namespace zetacode {

enum class RhaMethod {
  OddDegreeReject,
  ReciprocityReject,
  ExactSturm,
  ClosedFormDeg2,
  ClosedFormDeg4,
  Degenerate,
};

const char* rha_method_name(RhaMethod m);

struct RhaVerdict {
  bool holds = false;
  RhaMethod method = RhaMethod::Degenerate;
  // Numerical cross-check only — never decides. residual = ||t| sqrt(q) - 1|.
  struct RootDiagnostic {
    std::complex<double> root;
    double residual;
  };
  std::vector<RootDiagnostic> root_diagnostics;
  // The auxiliary exact polynomials: G(u) from the u = 1/t + qt substitution
  // and G2(s) with G2(u^2) = (-1)^m G(u) G(-u).
  RationalPoly certificate_g;
  RationalPoly certificate_g2;
};

// Exact decision that every root of P lies on |t| = 1/sqrt(q):
//   1. odd degree -> false;
//   2. degree 0 -> vacuously true;
//   3. self-q-reciprocity a_{r-i} = q^{m-i} a_i (m = r/2) required, else
//      false;
//   4. substitute u = 1/t + qt; P on the circle iff G(u) = P(t)/(a_0 t^m)
//      has m real roots and all squared roots lie in [0, 4q] — both counted
//      by Sturm on squarefree parts, exactly.
// Numerical diagnostics are attached in every case.
RhaVerdict rha_check(const RationalPoly& p, const Int& q);

// Closed-form near-MDS window (degree-2 zeta):
// 1/(sqrt(q)+1)^2 <= c_0 <= 1/(sqrt(q)-1)^2, decided in the quadratic ring.
bool rha_deg2(const Rat& c0, const Int& q);

// Closed-form degree-4 criterion for D = c_0 + c_1 t + q c_0 t^2,
// P = (1-t)(1-qt) D + t^2 (needs 0 < c_0 < 1; HypothesisViolation):
//   [(q+1) c_0 + c_1]^2 >= 4 c_0,
//   (q - 4 sqrt(q) + 1) c_0 <= c_1 <= (q + 4 sqrt(q) + 1) c_0,
//   c_1 <= min(1/(sqrt(q)-1)^2 - 2 sqrt(q) c_0,
//              1/(sqrt(q)+1)^2 + 2 sqrt(q) c_0).
bool rha_deg4(const Rat& c0, const Rat& c1, const Int& q);

// Exact test nu (sqrt(q)-1)^{2g} <= C(2k, d) with nu = W_d/(q-1).
// Errors: GenusZero (g < 1), DivisibilityViolation.
struct FieldBoundResult {
  bool bound_holds = false;
  Int nu;
};
FieldBoundResult field_bound(int k, int d, int g, const Int& w_d, const Int& q);

// Logarithmic coefficients S_1..S_N of log(P(t)/P(0)) = sum S_nu t^nu / nu.
// Errors: ZeroConstantTerm.
std::vector<Rat> log_coefficients(const RationalPoly& p, int window);

// Diagnostic max_nu |S_nu| q^{-nu/2} over the window (double; <= deg P when
// all roots sit on the critical circle).
double log_coefficient_growth(const std::vector<Rat>& s, const Int& q);

// Durand-Kerner root approximations of the squarefree part (diagnostics).
std::vector<std::complex<double>> approximate_roots(const RationalPoly& p);

}  // namespace zetacode
